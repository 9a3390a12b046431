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
#include "parapre/presolvers/Substitution.hpp"

#include "parapre/presolvers/Util.hpp"

namespace parapre
{

template <typename REAL>
Substitution<REAL>::Substitution()
    : Presolver<REAL>( { "substitution", Tier::kExhaustive, false, 15, false, true } )
{
}

template <typename REAL>
void
Substitution<REAL>::run( const PresolveView<REAL>& view,
                         std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();
   TransactionBuilder<REAL> tb;
   // minimal relative pivot size in floating point
   const REAL pivotTol = NumTraits<REAL>::exact ? REAL( 0 ) : REAL( 1 ) / 100;

   for( int r = 0; r < problem.getNRows(); ++r )
   {
      if( !problem.isRowActive( r ) || !problem.isEquation( r ) ||
          problem.getRowSize( r ) < 2 )
         continue;
      const std::vector<MatrixEntry<REAL>> row = problem.activeRow( r );
      const REAL& b = problem.getLhs( r ).value();
      REAL maxAbs{ 0 };
      bool allIntegral = true;
      for( const auto& e : row )
      {
         maxAbs = Num<REAL>::max( maxAbs, Num<REAL>::abs( e.value ) );
         allIntegral = allIntegral && problem.isIntegral( e.index );
      }

      int best = kNone;
      long bestCost = 0;
      for( const auto& e : row )
      {
         const int j = e.index;
         if( Num<REAL>::abs( e.value ) < pivotTol * maxAbs )
            continue;
         if( problem.isIntegral( j ) )
         {
            // x_j = b/a_j - sum (a_k/a_j) x_k must stay integral
            if( !allIntegral || !num.isIntegral( REAL( b / e.value ) ) )
               continue;
            bool ok = true;
            for( const auto& f : row )
               if( f.index != j && !num.isIntegral( REAL( f.value / e.value ) ) )
                  ok = false;
            if( !ok )
               continue;
         }
         // the row must imply the bounds of x_j
         auto [lo, hi] = impliedBounds( problem, r, j, e.value );
         const Extended<REAL>& l = problem.getLower( j );
         const Extended<REAL>& u = problem.getUpper( j );
         const bool lowerImplied =
             l.isInfinite() || ( lo.isFinite() && num.isFeasGE( lo.value(), l.value() ) );
         const bool upperImplied =
             u.isInfinite() || ( hi.isFinite() && num.isFeasLE( hi.value(), u.value() ) );
         if( !lowerImplied || !upperImplied )
            continue;
         const long cost = static_cast<long>( problem.getRowSize( r ) - 1 ) *
                           static_cast<long>( problem.getColSize( j ) - 1 );
         if( best == kNone || cost < bestCost )
         {
            best = j;
            bestCost = cost;
         }
      }
      if( best == kNone )
         continue;
      tb.assertRow( r );
      tb.assertColBoundsUnmodified( best );
      tb.substituteColumn( r, best );
      tb.emitTo( out );
   }
}

template class Substitution<double>;
template class Substitution<Rational>;

} // namespace parapre
