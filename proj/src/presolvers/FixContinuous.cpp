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
#include "parapre/presolvers/FixContinuous.hpp"

namespace parapre
{

template <typename REAL>
FixContinuous<REAL>::FixContinuous()
    : Presolver<REAL>( { "fixcontinuous", Tier::kMedium, false, 8, false, true } )
{
}

template <typename REAL>
void
FixContinuous<REAL>::run( const PresolveView<REAL>& view,
                          std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();
   TransactionBuilder<REAL> tb;

   for( int j = 0; j < problem.getNCols(); ++j )
   {
      if( !problem.isColActive( j ) || problem.isIntegral( j ) )
         continue;
      const Extended<REAL>& l = problem.getLower( j );
      const Extended<REAL>& u = problem.getUpper( j );
      if( l.isInfinite() || u.isInfinite() )
         continue;
      const REAL width = u.value() - l.value();
      if( width > num.getFeasTol() * Num<REAL>::max( REAL( 1 ), Num<REAL>::abs( l.value() ) ) )
         continue;
      const REAL& c = problem.getObj( j );
      const REAL value = c > 0   ? l.value()
                         : c < 0 ? u.value()
                                 : REAL( ( l.value() + u.value() ) / 2 );
      tb.assertColBoundsUnmodified( j );
      tb.fixColumn( j, value );
      tb.emitTo( out );
   }
}

template class FixContinuous<double>;
template class FixContinuous<Rational>;

} // namespace parapre
