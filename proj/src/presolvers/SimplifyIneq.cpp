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
#include "parapre/presolvers/SimplifyIneq.hpp"

#include "parapre/presolvers/Util.hpp"

namespace parapre
{

template <typename REAL>
SimplifyIneq<REAL>::SimplifyIneq()
    : Presolver<REAL>( { "simplifyineq", Tier::kMedium, false, 9, false, true } )
{
}

template <typename REAL>
void
SimplifyIneq<REAL>::run( const PresolveView<REAL>& view,
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
      if( !le || !isIntegralRow( problem, le->entries ) )
         continue;
      const REAL& U = le->rhs;

      // candidate: smallest |a| among columns with finite bounds
      int cand = -1;
      for( int p = 0; p < static_cast<int>( le->entries.size() ); ++p )
      {
         const auto& e = le->entries[p];
         if( problem.getLower( e.index ).isInfinite() ||
             problem.getUpper( e.index ).isInfinite() )
            continue;
         if( cand < 0 || Num<REAL>::abs( e.value ) < Num<REAL>::abs( le->entries[cand].value ) )
            cand = p;
      }

      Extended<REAL> newRhs = U;
      int drop = kNone;
      REAL G{ 0 };
      for( const auto& e : le->entries )
         G = integralGcd( G, Num<REAL>::round( e.value ) );
      if( cand >= 0 )
      {
         const auto& ce = le->entries[cand];
         REAL g{ 0 };
         for( int p = 0; p < static_cast<int>( le->entries.size() ); ++p )
            if( p != cand )
               g = integralGcd( g, Num<REAL>::round( le->entries[p].value ) );
         const Extended<REAL>& l = problem.getLower( ce.index );
         const Extended<REAL>& u = problem.getUpper( ce.index );
         const REAL smin = contributingBound( ce.value, true, l, u ).value() * ce.value;
         const REAL smax = contributingBound( ce.value, false, l, u ).value() * ce.value;
         // the rest is a multiple of g and at most U - smin
         const REAL R = g * num.feasFloor( REAL( ( U - smin ) / g ) );
         if( num.isLE( REAL( R + smax ), U ) )
         {
            drop = ce.index;
            newRhs = R;
         }
      }
      if( drop == kNone )
      {
         const REAL R = G * num.feasFloor( REAL( U / G ) );
         if( num.isLT( R, U ) )
            newRhs = R;
      }
      if( drop == kNone && newRhs == Extended<REAL>( U ) )
         continue;

      tb.assertRow( i );
      if( drop != kNone )
         tb.changeCoeff( i, drop, REAL( 0 ) );
      if( le->sign > 0 )
         tb.changeRhs( i, newRhs );
      else
         tb.changeLhs( i, -newRhs );
      tb.emitTo( out );
   }
}

template class SimplifyIneq<double>;
template class SimplifyIneq<Rational>;

} // namespace parapre
