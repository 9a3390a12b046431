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
#include "parapre/presolvers/ImplInt.hpp"

#include <vector>

namespace parapre
{

template <typename REAL>
ImplInt<REAL>::ImplInt()
    : Presolver<REAL>( { "implint", Tier::kExhaustive, false, 11, false, true } )
{
}

template <typename REAL>
void
ImplInt<REAL>::run( const PresolveView<REAL>& view,
                    std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();
   TransactionBuilder<REAL> tb;
   std::vector<bool> done( problem.getNCols(), false );

   for( int i = 0; i < problem.getNRows(); ++i )
   {
      if( !problem.isRowActive( i ) || !problem.isEquation( i ) ||
          problem.getRowSize( i ) < 2 )
         continue;
      const std::vector<MatrixEntry<REAL>> row = problem.activeRow( i );
      // exactly one continuous column w; it equals b/a_w - sum (a_k/a_w) x_k
      int w = -1;
      bool single = true;
      for( int p = 0; p < static_cast<int>( row.size() ); ++p )
         if( !problem.isIntegral( row[p].index ) )
         {
            if( w >= 0 )
               single = false;
            w = p;
         }
      if( w < 0 || !single || done[row[w].index] )
         continue;
      const REAL& aw = row[w].value;
      bool integral = num.isIntegral( REAL( problem.getLhs( i ).value() / aw ) );
      for( int p = 0; integral && p < static_cast<int>( row.size() ); ++p )
         if( p != w && !num.isIntegral( REAL( row[p].value / aw ) ) )
            integral = false;
      if( !integral )
         continue;
      done[row[w].index] = true;
      tb.assertRow( i );
      tb.implyIntegral( row[w].index );
      tb.emitTo( out );
   }
}

template class ImplInt<double>;
template class ImplInt<Rational>;

} // namespace parapre
