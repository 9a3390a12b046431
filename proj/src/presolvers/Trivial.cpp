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
#include "parapre/presolvers/Trivial.hpp"

namespace parapre
{

template <typename REAL>
Trivial<REAL>::Trivial()
    : Presolver<REAL>( { "trivial", Tier::kFast, false, -1, false, true } )
{
}

template <typename REAL>
void
Trivial<REAL>::run( const PresolveView<REAL>& view,
                    std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();
   TransactionBuilder<REAL> tb;

   for( int j = 0; j < problem.getNCols(); ++j )
   {
      if( !problem.isColActive( j ) )
         continue;
      const Extended<REAL>& l = problem.getLower( j );
      const Extended<REAL>& u = problem.getUpper( j );
      if( l.isFinite() && u.isFinite() && num.isFeasGT( l.value(), u.value() ) )
      {
         out.push_back( verdictTransaction<REAL>( StepKind::kInfeasible ) );
         return;
      }
      if( problem.getColSize( j ) == 0 )
      {
         const REAL& c = problem.getObj( j );
         if( c > 0 || c < 0 )
         {
            const Extended<REAL>& best = c > 0 ? l : u;
            if( best.isInfinite() )
            {
               out.push_back( verdictTransaction<REAL>( StepKind::kUnbounded ) );
               return;
            }
            tb.fixColumn( j, best.value() );
         }
         else if( l.isFinite() && l.value() > 0 )
            tb.fixColumn( j, l.value() );
         else if( u.isFinite() && u.value() < 0 )
            tb.fixColumn( j, u.value() );
         else
            tb.fixColumn( j, REAL( 0 ) );
         tb.emitTo( out );
         continue;
      }
      if( l.isFinite() && u.isFinite() && l.value() >= u.value() )
      {
         tb.fixColumn( j, l.value() );
         tb.emitTo( out );
      }
   }

   for( int i = 0; i < problem.getNRows(); ++i )
   {
      if( !problem.isRowActive( i ) )
         continue;
      const Extended<REAL>& lhs = problem.getLhs( i );
      const Extended<REAL>& rhs = problem.getRhs( i );
      const RowActivity<REAL>& act = problem.getActivity( i );

      if( ( lhs.isFinite() && act.ninfmax == 0 &&
            num.isFeasLT( act.max, lhs.value() ) ) ||
          ( rhs.isFinite() && act.ninfmin == 0 &&
            num.isFeasGT( act.min, rhs.value() ) ) )
      {
         out.push_back( verdictTransaction<REAL>( StepKind::kInfeasible ) );
         return;
      }

      const int size = problem.getRowSize( i );
      if( size == 1 )
      {
         // a x in [L, U]  ->  bounds on x
         int col = kNone;
         REAL a{ 0 };
         problem.forEachInRow( i, [&]( int k, const REAL& v ) {
            col = k;
            a = v;
         } );
         const Extended<REAL> lo = a > 0 ? lhs / a : rhs / a;
         const Extended<REAL> hi = a > 0 ? rhs / a : lhs / a;
         if( lo.isFinite() )
            tb.changeLower( col, lo );
         if( hi.isFinite() )
            tb.changeUpper( col, hi );
         tb.markRowRedundant( i );
         tb.emitTo( out );
         continue;
      }

      const bool lhsRedundant =
          lhs.isInfinite() ||
          ( act.ninfmin == 0 && num.isFeasGE( act.min, lhs.value() ) );
      const bool rhsRedundant =
          rhs.isInfinite() ||
          ( act.ninfmax == 0 && num.isFeasLE( act.max, rhs.value() ) );
      if( size == 0 || ( lhsRedundant && rhsRedundant ) )
      {
         tb.markRowRedundant( i );
         tb.emitTo( out );
         continue;
      }
      if( lhsRedundant && lhs.isFinite() )
         tb.changeLhs( i, Extended<REAL>::negInf() );
      if( rhsRedundant && rhs.isFinite() )
         tb.changeRhs( i, Extended<REAL>::posInf() );
      tb.emitTo( out );
   }
}

template class Trivial<double>;
template class Trivial<Rational>;

} // namespace parapre
