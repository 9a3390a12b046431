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
#include "parapre/presolvers/DomCol.hpp"

#include <algorithm>
#include <unordered_map>

#include "parapre/misc/Parallel.hpp"
#include "parapre/presolvers/Util.hpp"

namespace parapre
{

template <typename REAL>
DomCol<REAL>::DomCol()
    : Presolver<REAL>( { "domcol", Tier::kExhaustive, false, 12, true, true } )
{
}

namespace
{

/// comparisons per bucket of equal support
constexpr int kMaxPairsPerBucket = 10000;

struct DomFix
{
   int dominating;
   int dominated;
   /// true: fix the dominated column at its lower bound, false: fix the
   /// dominating column at its upper bound
   bool fixDominated;
};

/// j dominates k: same support, c_j <= c_k, a_ij <= a_ik on <= rows
/// (negated for >= rows) and equal coefficients on two-sided rows
template <typename REAL>
bool
dominates( const Problem<REAL>& problem, const Num<REAL>& num, int j, int k,
           const std::vector<MatrixEntry<REAL>>& colj,
           const std::vector<MatrixEntry<REAL>>& colk )
{
   if( !num.isLE( problem.getObj( j ), problem.getObj( k ) ) )
      return false;
   for( std::size_t p = 0; p < colj.size(); ++p )
   {
      const int i = colj[p].index;
      const bool lhsFinite = problem.getLhs( i ).isFinite();
      const bool rhsFinite = problem.getRhs( i ).isFinite();
      const REAL& aj = colj[p].value;
      const REAL& ak = colk[p].value;
      if( !lhsFinite && !rhsFinite )
         continue;
      if( lhsFinite && rhsFinite )
      {
         if( !num.isEq( aj, ak ) )
            return false;
      }
      else if( rhsFinite ? !num.isLE( aj, ak ) : !num.isGE( aj, ak ) )
         return false;
   }
   return true;
}

} // namespace

template <typename REAL>
void
DomCol<REAL>::run( const PresolveView<REAL>& view,
                   std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();

   std::vector<std::vector<MatrixEntry<REAL>>> cols( problem.getNCols() );
   std::unordered_map<std::size_t, std::vector<int>> byKey;
   for( int j = 0; j < problem.getNCols(); ++j )
   {
      if( !problem.isColActive( j ) || problem.getColSize( j ) == 0 )
         continue;
      cols[j] = problem.activeCol( j );
      std::size_t h = cols[j].size() * 2 + ( problem.isIntegral( j ) ? 1 : 0 );
      for( const auto& e : cols[j] )
         hashCombine( h, std::hash<int>()( e.index ) );
      byKey[h].push_back( j );
   }
   std::vector<std::vector<int>> buckets;
   for( auto& [h, members] : byKey )
      if( members.size() > 1 )
      {
         std::sort( members.begin(), members.end() );
         buckets.push_back( std::move( members ) );
      }
   std::sort( buckets.begin(), buckets.end() );

   auto sameSupport = [&]( int j, int k ) {
      if( problem.isIntegral( j ) != problem.isIntegral( k ) ||
          cols[j].size() != cols[k].size() )
         return false;
      for( std::size_t p = 0; p < cols[j].size(); ++p )
         if( cols[j][p].index != cols[k][p].index )
            return false;
      return true;
   };

   const std::vector<DomFix> fixes = chunkedCollect<DomFix>(
       static_cast<int>( buckets.size() ), 16, view.parallel,
       [&]( int begin, int end, std::vector<DomFix>& res ) {
          for( int b = begin; b < end; ++b )
          {
             const std::vector<int>& members = buckets[b];
             int pairs = 0;
             for( std::size_t p = 0; p < members.size() && pairs < kMaxPairsPerBucket; ++p )
                for( std::size_t q = 0; q < members.size() && pairs < kMaxPairsPerBucket; ++q )
                {
                   if( p == q )
                      continue;
                   const int j = members[p];
                   const int k = members[q];
                   ++pairs;
                   if( !sameSupport( j, k ) || !dominates( problem, num, j, k, cols[j], cols[k] ) )
                      continue;
                   // identical columns: only the lower index dominates
                   if( k < j && dominates( problem, num, k, j, cols[k], cols[j] ) )
                      continue;
                   if( problem.getUpper( j ).isInfinite() && problem.getLower( k ).isFinite() )
                      res.push_back( { j, k, true } );
                   else if( problem.getLower( k ).isInfinite() && problem.getUpper( j ).isFinite() )
                      res.push_back( { j, k, false } );
                }
          }
       } );

   TransactionBuilder<REAL> tb;
   for( const DomFix& f : fixes )
   {
      tb.assertColBoundsUnmodified( f.dominating );
      tb.assertColBoundsUnmodified( f.dominated );
      for( const auto& e : cols[f.dominating] )
         tb.assertRow( e.index );
      if( f.fixDominated )
         tb.fixColumn( f.dominated, problem.getLower( f.dominated ).value() );
      else
         tb.fixColumn( f.dominating, problem.getUpper( f.dominating ).value() );
      tb.emitTo( out );
   }
}

template class DomCol<double>;
template class DomCol<Rational>;

} // namespace parapre
