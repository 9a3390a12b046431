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
#include "parapre/presolvers/SimpleProbing.hpp"

namespace parapre
{

template <typename REAL>
SimpleProbing<REAL>::SimpleProbing()
    : Presolver<REAL>( { "simpleprobing", Tier::kMedium, false, 3, false, true } )
{
}

template <typename REAL>
void
SimpleProbing<REAL>::run( const PresolveView<REAL>& view,
                          std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();
   TransactionBuilder<REAL> tb;

   for( int i = 0; i < problem.getNRows(); ++i )
   {
      // doubleton equations are left to the doubleton presolver
      if( !problem.isRowActive( i ) || !problem.isEquation( i ) ||
          problem.getRowSize( i ) < 3 )
         continue;
      const RowActivity<REAL>& act = problem.getActivity( i );
      if( act.ninfmin != 0 || act.ninfmax != 0 )
         continue;
      const REAL& b = problem.getLhs( i ).value();
      const REAL span = act.max - act.min;
      if( !num.isEq( b, REAL( ( act.max + act.min ) / 2 ) ) )
         continue;
      const std::vector<MatrixEntry<REAL>> row = problem.activeRow( i );
      // a binary whose value decides every other column of the row
      int k = kNone;
      REAL ak{ 0 };
      for( const auto& e : row )
         if( problem.isBinary( e.index ) &&
             num.isEq( span, REAL( 2 * Num<REAL>::abs( e.value ) ) ) )
         {
            k = e.index;
            ak = e.value;
            break;
         }
      if( k == kNone )
         continue;

      tb.assertRow( i );
      for( const auto& e : row )
         tb.assertColBoundsUnmodified( e.index );
      bool first = true;
      for( const auto& e : row )
      {
         if( e.index == k )
            continue;
         const REAL& l = problem.getLower( e.index ).value();
         const REAL& u = problem.getUpper( e.index ).value();
         // x_k = 0 puts the rest at its maximum if a_k > 0
         const REAL& atMax = e.value > 0 ? u : l;
         const REAL& atMin = e.value > 0 ? l : u;
         const REAL& v0 = ak > 0 ? atMax : atMin;
         const REAL& v1 = ak > 0 ? atMin : atMax;
         tb.substituteAffine( e.index, k, v0, REAL( v1 - v0 ), first ? i : kNone );
         first = false;
      }
      tb.emitTo( out );
   }
}

template class SimpleProbing<double>;
template class SimpleProbing<Rational>;

} // namespace parapre
