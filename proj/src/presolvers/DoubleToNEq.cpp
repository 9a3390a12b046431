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
#include "parapre/presolvers/DoubleToNEq.hpp"

namespace parapre
{

template <typename REAL>
DoubleToNEq<REAL>::DoubleToNEq()
    : Presolver<REAL>( { "doubletoneq", Tier::kMedium, false, 10, false, true } )
{
}

template <typename REAL>
void
DoubleToNEq<REAL>::run( const PresolveView<REAL>& view,
                        std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();
   TransactionBuilder<REAL> tb;

   for( int i = 0; i < problem.getNRows(); ++i )
   {
      if( !problem.isRowActive( i ) || !problem.isEquation( i ) ||
          problem.getRowSize( i ) != 2 )
         continue;
      const std::vector<MatrixEntry<REAL>> row = problem.activeRow( i );
      const REAL& d = problem.getLhs( i ).value();

      // can x (= row[p]) be written as d/a - (b/a) y without losing integrality
      auto allowed = [&]( int p ) {
         const auto& x = row[p];
         const auto& y = row[1 - p];
         if( !problem.isIntegral( x.index ) )
            return true;
         return problem.isIntegral( y.index ) && num.isIntegral( REAL( y.value / x.value ) ) &&
                num.isIntegral( REAL( d / x.value ) );
      };
      // continuous first, then shorter column, larger |coef|, lower index
      auto better = [&]( int p, int q ) {
         const int jp = row[p].index;
         const int jq = row[q].index;
         if( problem.isIntegral( jp ) != problem.isIntegral( jq ) )
            return !problem.isIntegral( jp );
         if( problem.getColSize( jp ) != problem.getColSize( jq ) )
            return problem.getColSize( jp ) < problem.getColSize( jq );
         const REAL ap = Num<REAL>::abs( row[p].value );
         const REAL aq = Num<REAL>::abs( row[q].value );
         if( ap != aq )
            return ap > aq;
         return jp < jq;
      };
      int p = -1;
      for( int q = 0; q < 2; ++q )
         if( allowed( q ) && ( p < 0 || better( q, p ) ) )
            p = q;
      if( p < 0 )
         continue;

      const int x = row[p].index;
      const int y = row[1 - p].index;
      const REAL alpha = d / row[p].value;
      REAL beta = -row[1 - p].value / row[p].value;
      if( problem.isIntegral( x ) )
         beta = Num<REAL>::round( beta );
      // l_x <= alpha + beta y <= u_x  carried over to y
      const Extended<REAL> lo = ( problem.getLower( x ) - Extended<REAL>( alpha ) ) / beta;
      const Extended<REAL> hi = ( problem.getUpper( x ) - Extended<REAL>( alpha ) ) / beta;
      const Extended<REAL>& ylo = beta > 0 ? lo : hi;
      const Extended<REAL>& yhi = beta > 0 ? hi : lo;

      tb.assertRow( i );
      tb.assertColBoundsUnmodified( x );
      tb.assertColBoundsUnmodified( y );
      if( ylo > problem.getLower( y ) )
         tb.changeLower( y, ylo );
      if( yhi < problem.getUpper( y ) )
         tb.changeUpper( y, yhi );
      tb.substituteAffine( x, y, problem.isIntegral( x ) ? Num<REAL>::round( alpha ) : alpha,
                           beta, i );
      tb.emitTo( out );
   }
}

template class DoubleToNEq<double>;
template class DoubleToNEq<Rational>;

} // namespace parapre
