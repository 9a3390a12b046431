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
#include "parapre/presolvers/Stuffing.hpp"

#include <algorithm>

#include "parapre/presolvers/Util.hpp"

namespace parapre
{

template <typename REAL>
Stuffing<REAL>::Stuffing()
    : Presolver<REAL>( { "stuffing", Tier::kMedium, false, 6, false, true } )
{
}

namespace
{

/// continuous singleton column of a <= row, flipped so that a > 0
template <typename REAL>
struct StuffCandidate
{
   int col;
   REAL a;
   REAL ratio;
   REAL lower;
   REAL upper;
   /// value of x_col when stuffed to its upper flipped bound
   REAL fixValue;
};

} // namespace

template <typename REAL>
void
Stuffing<REAL>::run( const PresolveView<REAL>& view,
                     std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();
   TransactionBuilder<REAL> tb;

   for( int i = 0; i < problem.getNRows(); ++i )
   {
      if( !problem.isRowActive( i ) || problem.getRowSize( i ) < 2 )
         continue;
      std::optional<LeRow<REAL>> le = oneSidedRow( problem, i );
      if( !le )
         continue;

      std::vector<StuffCandidate<REAL>> cands;
      Extended<REAL> restMax( REAL( 0 ) );
      for( const auto& e : le->entries )
      {
         const int j = e.index;
         const Extended<REAL>& l = problem.getLower( j );
         const Extended<REAL>& u = problem.getUpper( j );
         const bool flip = e.value < 0;
         const REAL c = flip ? REAL( -problem.getObj( j ) ) : problem.getObj( j );
         const Extended<REAL> lf = flip ? -u : l;
         const Extended<REAL> uf = flip ? -l : u;
         if( !problem.isIntegral( j ) && problem.getColSize( j ) == 1 && c < 0 &&
             lf.isFinite() && uf.isFinite() )
         {
            const REAL a = Num<REAL>::abs( e.value );
            cands.push_back( { j, a, REAL( c / a ), lf.value(), uf.value(),
                               flip ? l.value() : u.value() } );
         }
         else
            restMax = restMax + contributingBound( e.value, false, l, u ) * e.value;
      }
      if( cands.empty() || restMax.isInfinite() )
         continue;
      std::sort( cands.begin(), cands.end(), []( const auto& x, const auto& y ) {
         return x.ratio < y.ratio || ( x.ratio == y.ratio && x.col < y.col );
      } );

      // better candidates at upper, the rest at lower: the fixable set is a
      // prefix of the sorted order
      REAL atLower{ 0 };
      for( const auto& c : cands )
         atLower += c.a * c.lower;
      REAL used = restMax.value() + atLower;
      std::size_t nfix = 0;
      for( const auto& c : cands )
      {
         used += c.a * ( c.upper - c.lower );
         if( !num.isLE( used, le->rhs ) )
            break;
         ++nfix;
      }
      if( nfix == 0 )
         continue;
      tb.assertRow( i );
      for( const auto& c : cands )
         tb.assertColBoundsUnmodified( c.col );
      for( std::size_t p = 0; p < nfix; ++p )
         tb.fixColumn( cands[p].col, cands[p].fixValue );
      tb.emitTo( out );
   }
}

template class Stuffing<double>;
template class Stuffing<Rational>;

} // namespace parapre
