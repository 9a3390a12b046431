/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */
/*                                                                           */
/*               This file is part of the program and library                */
/*    parapre --- Parallel transaction-based presolve for MIP and LP         */
/*                                                                           */
/* Copyright (C) 2026 The parapre authors                                    */
/*                                                                           */
/* Licensed under the Apache License, Version 2.0 (the "License");           */
/* you may not use this file except in compliance with the License.          */
/* You may obtain a copy of the License at                                   */
/*                                                                           */
/*     http://www.apache.org/licenses/LICENSE-2.0                            */
/*                                                                           */
/* Unless required by applicable law or agreed to in writing, software       */
/* distributed under the License is distributed on an "AS IS" BASIS,         */
/* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  */
/* See the License for the specific language governing permissions and       */
/* limitations under the License.                                            */
/*                                                                           */
/* * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * * */
#include "parapre/presolvers/Probing.hpp"

#include <algorithm>

#include <tbb/enumerable_thread_specific.h>

#include "parapre/misc/Parallel.hpp"
#include "parapre/presolvers/Util.hpp"

namespace parapre
{

template <typename REAL>
Probing<REAL>::Probing()
    : Presolver<REAL>( { "probing", Tier::kExhaustive, false, 14, true, true } )
{
}

namespace
{

constexpr int kPropagationPasses = 2;
constexpr int kProbesPerChunk = 8;
constexpr int kCandidatesPerChangedBinary = 10;

template <typename REAL>
struct ColBounds
{
   int col;
   Extended<REAL> lower;
   Extended<REAL> upper;
};

template <typename REAL>
struct BranchResult
{
   bool infeasible = false;
   /// columns whose bounds moved, sorted by index
   std::vector<ColBounds<REAL>> changed;
};

template <typename REAL>
struct ProbeResult
{
   int col;
   BranchResult<REAL> branch[2];
};

/// Per-thread copy of bounds and activities. Every probe starts from the
/// problem state and reverts the entries it touched.
template <typename REAL>
class ProbeScratch
{
 public:
   BranchResult<REAL>
   probe( const Problem<REAL>& problem, int k, const REAL& value )
   {
      if( !initialized )
         init( problem );
      BranchResult<REAL> res;
      std::vector<int> queue;
      setBound( problem, k, true, value, queue );
      setBound( problem, k, false, value, queue );
      for( int pass = 0; pass < kPropagationPasses && !res.infeasible; ++pass )
      {
         std::sort( queue.begin(), queue.end() );
         queue.erase( std::unique( queue.begin(), queue.end() ), queue.end() );
         std::vector<int> next;
         for( int row : queue )
            if( !propagateRow( problem, row, next ) )
            {
               res.infeasible = true;
               break;
            }
         queue = std::move( next );
      }
      const Num<REAL>& num = problem.getNum();
      for( int row : queue )
         if( !res.infeasible && rowInfeasible( problem, num, row ) )
            res.infeasible = true;
      if( !res.infeasible )
      {
         std::sort( changedCols.begin(), changedCols.end() );
         for( int j : changedCols )
            res.changed.push_back( { j, lower[j], upper[j] } );
      }
      revert( problem );
      return res;
   }

 private:
   void
   init( const Problem<REAL>& problem )
   {
      lower = problem.getLowerBounds();
      upper = problem.getUpperBounds();
      act = problem.getActivities();
      colMark.assign( problem.getNCols(), false );
      rowMark.assign( problem.getNRows(), false );
      initialized = true;
   }

   void
   revert( const Problem<REAL>& problem )
   {
      for( int j : changedCols )
      {
         lower[j] = problem.getLower( j );
         upper[j] = problem.getUpper( j );
         colMark[j] = false;
      }
      for( int i : changedRows )
      {
         act[i] = problem.getActivity( i );
         rowMark[i] = false;
      }
      changedCols.clear();
      changedRows.clear();
   }

   void
   setBound( const Problem<REAL>& problem, int j, bool isLower,
             const Extended<REAL>& v, std::vector<int>& queue )
   {
      Extended<REAL>& b = isLower ? lower[j] : upper[j];
      const Extended<REAL> old = b;
      b = v;
      if( !colMark[j] )
      {
         colMark[j] = true;
         changedCols.push_back( j );
      }
      problem.forEachInCol( j, [&]( int i, const REAL& a ) {
         updateRowActivity( act[i], a, isLower ? BoundSide::kLower : BoundSide::kUpper,
                            old, v );
         if( !rowMark[i] )
         {
            rowMark[i] = true;
            changedRows.push_back( i );
         }
         queue.push_back( i );
      } );
   }

   bool
   rowInfeasible( const Problem<REAL>& problem, const Num<REAL>& num, int i ) const
   {
      const Extended<REAL>& lhs = problem.getLhs( i );
      const Extended<REAL>& rhs = problem.getRhs( i );
      return ( lhs.isFinite() && act[i].ninfmax == 0 &&
               num.isFeasLT( act[i].max, lhs.value() ) ) ||
             ( rhs.isFinite() && act[i].ninfmin == 0 &&
               num.isFeasGT( act[i].min, rhs.value() ) );
   }

   /// false if the row or a column becomes infeasible
   bool
   propagateRow( const Problem<REAL>& problem, int i, std::vector<int>& next )
   {
      const Num<REAL>& num = problem.getNum();
      if( !problem.isRowActive( i ) )
         return true;
      if( rowInfeasible( problem, num, i ) )
         return false;
      const Extended<REAL>& lhs = problem.getLhs( i );
      const Extended<REAL>& rhs = problem.getRhs( i );
      bool feasible = true;
      problem.forEachInRow( i, [&]( int j, const REAL& a ) {
         if( !feasible )
            return;
         const bool integral = problem.isIntegral( j );
         if( rhs.isFinite() )
         {
            const Extended<REAL> minRest =
                residualMinActivity( act[i], a, lower[j], upper[j] );
            if( minRest.isFinite() )
               tighten( problem, j, a > 0, ( rhs.value() - minRest.value() ) / a,
                        integral, next );
         }
         if( lhs.isFinite() )
         {
            const Extended<REAL> maxRest =
                residualMaxActivity( act[i], a, lower[j], upper[j] );
            if( maxRest.isFinite() )
               tighten( problem, j, a < 0, ( lhs.value() - maxRest.value() ) / a,
                        integral, next );
         }
         if( lower[j].isFinite() && upper[j].isFinite() &&
             num.isFeasGT( lower[j].value(), upper[j].value() ) )
            feasible = false;
      } );
      return feasible;
   }

   /// applies v as new upper (isUpper) or lower bound if it is tighter
   void
   tighten( const Problem<REAL>& problem, int j, bool isUpper, REAL v,
            bool integral, std::vector<int>& next )
   {
      const Num<REAL>& num = problem.getNum();
      if( isUpper )
      {
         if( integral )
            v = num.feasFloor( v );
         const bool better = integral ? !num.isHuge( v ) && ( upper[j].isInfinite() || v < upper[j].value() )
                                      : isSignificantBoundChange( v, upper[j], false, num );
         if( better )
            setBound( problem, j, false, v, next );
      }
      else
      {
         if( integral )
            v = num.feasCeil( v );
         const bool better = integral ? !num.isHuge( v ) && ( lower[j].isInfinite() || v > lower[j].value() )
                                      : isSignificantBoundChange( v, lower[j], true, num );
         if( better )
            setBound( problem, j, true, v, next );
      }
   }

   bool initialized = false;
   std::vector<Extended<REAL>> lower;
   std::vector<Extended<REAL>> upper;
   std::vector<RowActivity<REAL>> act;
   std::vector<int> changedCols;
   std::vector<int> changedRows;
   std::vector<bool> colMark;
   std::vector<bool> rowMark;
};

/// bounds of column j in a branch; the global bounds if untouched
template <typename REAL>
std::pair<Extended<REAL>, Extended<REAL>>
branchBounds( const Problem<REAL>& problem, const BranchResult<REAL>& br, int j )
{
   auto it = std::lower_bound( br.changed.begin(), br.changed.end(), j,
                               []( const ColBounds<REAL>& c, int col ) { return c.col < col; } );
   if( it != br.changed.end() && it->col == j )
      return { it->lower, it->upper };
   return { problem.getLower( j ), problem.getUpper( j ) };
}

} // namespace

template <typename REAL>
void
Probing<REAL>::run( const PresolveView<REAL>& view,
                    std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();

   int changedBinaries = 0;
   for( int j : view.changedCols )
      if( problem.isColActive( j ) && problem.isBinary( j ) )
         ++changedBinaries;
   std::vector<int> candidates;
   for( int j = 0; j < problem.getNCols(); ++j )
      if( problem.isColActive( j ) && problem.isBinary( j ) )
         candidates.push_back( j );
   const std::size_t limit = std::min<std::size_t>(
       problem.getNCols(),
       static_cast<std::size_t>( changedBinaries ) * kCandidatesPerChangedBinary );
   if( candidates.size() > limit )
      candidates.resize( limit );

   tbb::enumerable_thread_specific<ProbeScratch<REAL>> scratch;
   const std::vector<ProbeResult<REAL>> results = chunkedCollect<ProbeResult<REAL>>(
       static_cast<int>( candidates.size() ), kProbesPerChunk, view.parallel,
       [&]( int begin, int end, std::vector<ProbeResult<REAL>>& res ) {
          ProbeScratch<REAL>& s = scratch.local();
          for( int p = begin; p < end; ++p )
          {
             ProbeResult<REAL> r;
             r.col = candidates[p];
             r.branch[0] = s.probe( problem, r.col, REAL( 0 ) );
             r.branch[1] = s.probe( problem, r.col, REAL( 1 ) );
             res.push_back( std::move( r ) );
          }
       } );

   TransactionBuilder<REAL> tb;
   for( const ProbeResult<REAL>& r : results )
   {
      const int k = r.col;
      const BranchResult<REAL>& b0 = r.branch[0];
      const BranchResult<REAL>& b1 = r.branch[1];
      if( b0.infeasible && b1.infeasible )
      {
         out.push_back( verdictTransaction<REAL>( StepKind::kInfeasible ) );
         return;
      }
      if( b0.infeasible || b1.infeasible )
      {
         tb.fixColumn( k, REAL( b0.infeasible ? 1 : 0 ) );
         tb.emitTo( out );
         continue;
      }
      // columns moved in at least one branch
      std::vector<int> touched;
      for( const auto& c : b0.changed )
         touched.push_back( c.col );
      for( const auto& c : b1.changed )
         touched.push_back( c.col );
      std::sort( touched.begin(), touched.end() );
      touched.erase( std::unique( touched.begin(), touched.end() ), touched.end() );
      for( int j : touched )
      {
         if( j == k )
            continue;
         const auto [l0, u0] = branchBounds( problem, b0, j );
         const auto [l1, u1] = branchBounds( problem, b1, j );
         const bool fixed0 = l0.isFinite() && u0.isFinite() && num.isEq( l0.value(), u0.value() );
         const bool fixed1 = l1.isFinite() && u1.isFinite() && num.isEq( l1.value(), u1.value() );
         if( fixed0 && fixed1 )
         {
            const REAL& v0 = l0.value();
            const REAL& v1 = l1.value();
            if( num.isEq( v0, v1 ) )
               tb.fixColumn( j, v0 );
            else
               tb.substituteAffine( j, k, v0, REAL( v1 - v0 ) );
            tb.emitTo( out );
            continue;
         }
         // valid in both branches, hence globally
         const Extended<REAL> lo = std::min( l0, l1 );
         const Extended<REAL> hi = std::max( u0, u1 );
         if( lo > problem.getLower( j ) )
         {
            tb.changeLower( j, lo );
            tb.emitTo( out );
         }
         if( hi < problem.getUpper( j ) )
         {
            tb.changeUpper( j, hi );
            tb.emitTo( out );
         }
      }
   }
}

template class Probing<double>;
template class Probing<Rational>;

} // namespace parapre
