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
#include "parapre/presolvers/ParallelCols.hpp"

#include <algorithm>
#include <unordered_map>

#include "parapre/presolvers/Util.hpp"

namespace parapre
{

template <typename REAL>
ParallelCols<REAL>::ParallelCols()
    : Presolver<REAL>( { "parallelcols", Tier::kMedium, false, 5, false, true } )
{
}

template <typename REAL>
void
ParallelCols<REAL>::run( const PresolveView<REAL>& view,
                         std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();

   // columns scaled so that the first coefficient is one, cost included
   std::vector<std::vector<MatrixEntry<REAL>>> normalized( problem.getNCols() );
   std::vector<REAL> normCost( problem.getNCols(), REAL( 0 ) );
   std::vector<REAL> first( problem.getNCols(), REAL( 0 ) );
   std::unordered_map<std::size_t, std::vector<int>> buckets;
   for( int j = 0; j < problem.getNCols(); ++j )
   {
      if( !problem.isColActive( j ) || problem.getColSize( j ) == 0 )
         continue;
      std::vector<MatrixEntry<REAL>> col = problem.activeCol( j );
      first[j] = col.front().value;
      std::size_t h = col.size() * 2 + ( problem.isIntegral( j ) ? 1 : 0 );
      for( auto& e : col )
      {
         e.value /= first[j];
         hashCombine( h, std::hash<int>()( e.index ) );
         hashCombine( h, roundedHash( e.value ) );
      }
      normCost[j] = problem.getObj( j ) / first[j];
      hashCombine( h, roundedHash( normCost[j] ) );
      normalized[j] = std::move( col );
      buckets[h].push_back( j );
   }

   auto sameCol = [&]( int j, int k ) {
      if( problem.isIntegral( j ) != problem.isIntegral( k ) ||
          !num.isEq( normCost[j], normCost[k] ) )
         return false;
      const auto& a = normalized[j];
      const auto& b = normalized[k];
      if( a.size() != b.size() )
         return false;
      for( std::size_t p = 0; p < a.size(); ++p )
         if( a[p].index != b[p].index || !num.isEq( a[p].value, b[p].value ) )
            return false;
      return true;
   };

   // disjoint pairs of parallel columns in index order
   std::vector<std::pair<int, int>> pairs;
   for( auto& [h, cols] : buckets )
   {
      if( cols.size() < 2 )
         continue;
      std::sort( cols.begin(), cols.end() );
      std::vector<bool> used( cols.size(), false );
      for( std::size_t p = 0; p < cols.size(); ++p )
      {
         if( used[p] )
            continue;
         for( std::size_t q = p + 1; q < cols.size(); ++q )
            if( !used[q] && sameCol( cols[p], cols[q] ) )
            {
               used[p] = used[q] = true;
               pairs.emplace_back( cols[p], cols[q] );
               break;
            }
      }
   }
   std::sort( pairs.begin(), pairs.end() );

   TransactionBuilder<REAL> tb;
   for( auto [j, k] : pairs )
   {
      const bool integral = problem.isIntegral( j );
      // integral: x_j keeps the smaller coefficient so that s is integral
      if( integral && Num<REAL>::abs( first[k] ) < Num<REAL>::abs( first[j] ) )
         std::swap( j, k );
      // A_k = s A_j  =>  A_j x_j + A_k x_k = A_j (x_j + s x_k)
      REAL s = first[k] / first[j];
      const Extended<REAL>& lj = problem.getLower( j );
      const Extended<REAL>& uj = problem.getUpper( j );
      const Extended<REAL>& lk = problem.getLower( k );
      const Extended<REAL>& uk = problem.getUpper( k );
      if( integral )
      {
         if( !num.isIntegral( s ) || lj.isInfinite() || uj.isInfinite() )
            continue;
         s = Num<REAL>::round( s );
         // x_j + s x_k must reach every integer of the merged range
         if( uj.value() - lj.value() + 1 < Num<REAL>::abs( s ) )
            continue;
      }
      const Extended<REAL> newL = s > 0 ? lj + lk * s : lj + uk * s;
      const Extended<REAL> newU = s > 0 ? uj + uk * s : uj + lk * s;

      tb.assertColBoundsUnmodified( j );
      tb.assertColBoundsUnmodified( k );
      problem.forEachInCol( j, [&]( int i, const REAL& ) { tb.assertRow( i ); } );
      tb.aggregateParallelCols( j, k, s, newL, newU );
      tb.deleteColumn( k );
      tb.emitTo( out );
   }
}

template class ParallelCols<double>;
template class ParallelCols<Rational>;

} // namespace parapre
