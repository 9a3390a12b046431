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
#include "parapre/presolvers/ColSingleton.hpp"

namespace parapre
{

template <typename REAL>
ColSingleton<REAL>::ColSingleton()
    : Presolver<REAL>( { "colsingleton", Tier::kFast, false, 0, false, true } )
{
}

template <typename REAL>
void
ColSingleton<REAL>::run( const PresolveView<REAL>& view,
                         std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   TransactionBuilder<REAL> tb;

   for( int j : view.changedCols )
   {
      if( !problem.isColActive( j ) || problem.isIntegral( j ) ||
          problem.getColSize( j ) != 1 )
         continue;
      int row = kNone;
      REAL a{ 0 };
      problem.forEachInCol( j, [&]( int i, const REAL& v ) {
         row = i;
         a = v;
      } );
      if( problem.getRowSize( row ) < 2 )
         continue;
      // inequalities only when x_j does not influence the objective
      if( !problem.isEquation( row ) && problem.getObj( j ) != 0 )
         continue;

      const Extended<REAL> al = problem.getLower( j ) * a;
      const Extended<REAL> au = problem.getUpper( j ) * a;
      const Extended<REAL>& lo = a > 0 ? al : au;
      const Extended<REAL>& hi = a > 0 ? au : al;
      // L - a x_j <= rest <= U - a x_j  for some x_j in [l, u]
      const Extended<REAL>& lhs = problem.getLhs( row );
      const Extended<REAL>& rhs = problem.getRhs( row );
      const Extended<REAL> newLhs =
          lhs.isInfinite() || hi.isInfinite() ? Extended<REAL>::negInf()
                                              : lhs - hi;
      const Extended<REAL> newRhs =
          rhs.isInfinite() || lo.isInfinite() ? Extended<REAL>::posInf()
                                              : rhs - lo;

      tb.assertColBoundsUnmodified( j );
      tb.assertRow( row );
      tb.substituteInObjective( row, j );
      if( !( newLhs == lhs ) )
         tb.changeLhs( row, newLhs );
      if( !( newRhs == rhs ) )
         tb.changeRhs( row, newRhs );
      tb.emitTo( out );
   }
}

template class ColSingleton<double>;
template class ColSingleton<Rational>;

} // namespace parapre
