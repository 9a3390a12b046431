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
#include "parapre/presolvers/DualFix.hpp"

#include "parapre/presolvers/Util.hpp"

namespace parapre
{

template <typename REAL>
DualFix<REAL>::DualFix()
    : Presolver<REAL>( { "dualfix", Tier::kMedium, false, 7, false, true } )
{
}

namespace
{

/// Value for x_j that satisfies each of its rows whatever the other
/// columns do. dir -1 looks below the upper bound, dir +1 above the lower
/// bound. Infinite if some row has an unbounded residual activity.
template <typename REAL>
Extended<REAL>
safeValue( const Problem<REAL>& problem, int j, int dir )
{
   const Extended<REAL>& l = problem.getLower( j );
   const Extended<REAL>& u = problem.getUpper( j );
   Extended<REAL> v = dir < 0 ? u : l;
   bool unlimited = false;
   problem.forEachInCol( j, [&]( int i, const REAL& a ) {
      const RowActivity<REAL>& act = problem.getActivity( i );
      // the side that x_j moves towards is infinite by the lock count
      const bool useRhs = ( a > 0 ) == ( dir < 0 );
      const Extended<REAL>& side = useRhs ? problem.getRhs( i ) : problem.getLhs( i );
      const Extended<REAL> rest = useRhs ? residualMaxActivity( act, a, l, u )
                                         : residualMinActivity( act, a, l, u );
      if( side.isInfinite() || rest.isInfinite() )
      {
         unlimited = true;
         return;
      }
      const Extended<REAL> b = ( side - rest ) / a;
      if( dir < 0 ? b < v : b > v )
         v = b;
   } );
   return unlimited ? Extended<REAL>::posInf() : v;
}

} // namespace

template <typename REAL>
void
DualFix<REAL>::run( const PresolveView<REAL>& view,
                    std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();
   TransactionBuilder<REAL> tb;

   for( int j = 0; j < problem.getNCols(); ++j )
   {
      if( !problem.isColActive( j ) )
         continue;
      const REAL& c = problem.getObj( j );
      // dir -1: decreasing x_j never hurts; dir +1: increasing never hurts
      int dir = 0;
      if( c >= 0 && problem.getDownLocks( j ) == 0 )
         dir = -1;
      else if( c <= 0 && problem.getUpLocks( j ) == 0 )
         dir = 1;
      if( dir == 0 )
         continue;
      const Extended<REAL>& bound = dir < 0 ? problem.getLower( j ) : problem.getUpper( j );
      REAL value;
      if( bound.isFinite() )
         value = bound.value();
      else
      {
         if( c != 0 )
         {
            // a feasible point can be moved without limit
            out.push_back( verdictTransaction<REAL>( StepKind::kUnbounded ) );
            return;
         }
         // c = 0: any value that keeps all rows satisfied
         const Extended<REAL> limit = safeValue( problem, j, dir );
         if( limit.isInfinite() )
            continue;
         value = limit.value();
         if( problem.isIntegral( j ) )
            value = dir < 0 ? num.feasFloor( value ) : num.feasCeil( value );
      }
      tb.assertColBoundsUnmodified( j );
      problem.forEachInCol( j, [&]( int i, const REAL& ) { tb.assertRow( i ); } );
      tb.fixColumn( j, value );
      tb.emitTo( out );
   }
}

template class DualFix<double>;
template class DualFix<Rational>;

} // namespace parapre
