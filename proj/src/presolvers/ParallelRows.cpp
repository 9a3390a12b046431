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
#include "parapre/presolvers/ParallelRows.hpp"

#include <algorithm>
#include <unordered_map>

#include "parapre/presolvers/Util.hpp"

namespace parapre
{

template <typename REAL>
ParallelRows<REAL>::ParallelRows()
    : Presolver<REAL>( { "parallelrows", Tier::kMedium, false, 4, false, true } )
{
}

template <typename REAL>
void
ParallelRows<REAL>::run( const PresolveView<REAL>& view,
                         std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();

   // rows scaled so that the first coefficient is one
   std::vector<std::vector<MatrixEntry<REAL>>> normalized( problem.getNRows() );
   std::vector<REAL> scale( problem.getNRows(), REAL( 0 ) );
   std::unordered_map<std::size_t, std::vector<int>> buckets;
   for( int i = 0; i < problem.getNRows(); ++i )
   {
      if( !problem.isRowActive( i ) || problem.getRowSize( i ) < 2 )
         continue;
      std::vector<MatrixEntry<REAL>> row = problem.activeRow( i );
      scale[i] = row.front().value;
      std::size_t h = row.size();
      for( auto& e : row )
      {
         e.value /= scale[i];
         hashCombine( h, std::hash<int>()( e.index ) );
         hashCombine( h, roundedHash( e.value ) );
      }
      normalized[i] = std::move( row );
      buckets[h].push_back( i );
   }

   auto sameRow = [&]( int r, int s ) {
      const auto& a = normalized[r];
      const auto& b = normalized[s];
      if( a.size() != b.size() )
         return false;
      for( std::size_t p = 0; p < a.size(); ++p )
         if( a[p].index != b[p].index || !num.isEq( a[p].value, b[p].value ) )
            return false;
      return true;
   };

   std::vector<std::vector<int>> groups;
   for( auto& [h, rows] : buckets )
   {
      if( rows.size() < 2 )
         continue;
      std::sort( rows.begin(), rows.end() );
      std::vector<bool> used( rows.size(), false );
      for( std::size_t p = 0; p < rows.size(); ++p )
      {
         if( used[p] )
            continue;
         std::vector<int> group{ rows[p] };
         for( std::size_t q = p + 1; q < rows.size(); ++q )
            if( !used[q] && sameRow( rows[p], rows[q] ) )
            {
               used[q] = true;
               group.push_back( rows[q] );
            }
         if( group.size() > 1 )
            groups.push_back( std::move( group ) );
      }
   }
   std::sort( groups.begin(), groups.end() );

   TransactionBuilder<REAL> tb;
   for( const std::vector<int>& group : groups )
   {
      int keep = group.front();
      for( int r : group )
         if( problem.isEquation( r ) )
         {
            keep = r;
            break;
         }
      // intersection of all sides in the normalized space
      Extended<REAL> lo = Extended<REAL>::negInf();
      Extended<REAL> hi = Extended<REAL>::posInf();
      for( int r : group )
      {
         const Extended<REAL> a = problem.getLhs( r ) / scale[r];
         const Extended<REAL> b = problem.getRhs( r ) / scale[r];
         const Extended<REAL>& rlo = scale[r] > 0 ? a : b;
         const Extended<REAL>& rhi = scale[r] > 0 ? b : a;
         if( rlo > lo )
            lo = rlo;
         if( rhi < hi )
            hi = rhi;
      }
      if( lo.isFinite() && hi.isFinite() )
      {
         if( num.isFeasGT( lo.value(), hi.value() ) )
         {
            out.push_back( verdictTransaction<REAL>( StepKind::kInfeasible ) );
            return;
         }
         if( num.isFeasEq( lo.value(), hi.value() ) )
         {
            // prefer the value of an existing equation
            const REAL v = problem.isEquation( keep )
                               ? REAL( problem.getLhs( keep ).value() / scale[keep] )
                               : lo.value();
            lo = v;
            hi = v;
         }
      }
      const Extended<REAL> a = lo * scale[keep];
      const Extended<REAL> b = hi * scale[keep];
      const Extended<REAL>& newLhs = scale[keep] > 0 ? a : b;
      const Extended<REAL>& newRhs = scale[keep] > 0 ? b : a;

      for( int r : group )
         tb.assertRow( r );
      if( !( newLhs == problem.getLhs( keep ) ) )
         tb.changeLhs( keep, newLhs );
      if( !( newRhs == problem.getRhs( keep ) ) )
         tb.changeRhs( keep, newRhs );
      for( int r : group )
         if( r != keep )
            tb.markRowRedundant( r );
      tb.emitTo( out );
   }
}

template class ParallelRows<double>;
template class ParallelRows<Rational>;

} // namespace parapre
