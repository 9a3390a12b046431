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
#include "parapre/presolvers/Propagation.hpp"

#include <map>

#include "parapre/presolvers/Util.hpp"

namespace parapre
{

template <typename REAL>
Propagation<REAL>::Propagation()
    : Presolver<REAL>( { "propagation", Tier::kFast, false, 2, false, true } )
{
}

template <typename REAL>
void
Propagation<REAL>::run( const PresolveView<REAL>& view,
                        std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();
   // tightest implied bound per column, ordered by column for determinism
   std::map<int, REAL> newLower;
   std::map<int, REAL> newUpper;

   for( int i : view.changedRows )
   {
      if( !problem.isRowActive( i ) )
         continue;
      const RowActivity<REAL>& act = problem.getActivity( i );
      const Extended<REAL>& lhs = problem.getLhs( i );
      const Extended<REAL>& rhs = problem.getRhs( i );
      if( ( lhs.isFinite() && act.ninfmax == 0 &&
            num.isFeasLT( act.max, lhs.value() ) ) ||
          ( rhs.isFinite() && act.ninfmin == 0 &&
            num.isFeasGT( act.min, rhs.value() ) ) )
      {
         out.clear();
         out.push_back( verdictTransaction<REAL>( StepKind::kInfeasible ) );
         return;
      }
      // at most one infinite contribution can be compensated
      if( ( lhs.isInfinite() || act.ninfmax > 1 ) &&
          ( rhs.isInfinite() || act.ninfmin > 1 ) )
         continue;

      problem.forEachInRow( i, [&]( int j, const REAL& a ) {
         auto [lo, hi] = impliedBounds( problem, i, j, a );
         const Extended<REAL>& l = problem.getLower( j );
         const Extended<REAL>& u = problem.getUpper( j );
         const bool integral = problem.isIntegral( j );
         if( lo.isFinite() )
         {
            const REAL v = integral ? num.feasCeil( lo.value() ) : lo.value();
            const bool better =
                integral ? !num.isHuge( v ) && ( l.isInfinite() || v > l.value() )
                         : isSignificantBoundChange( v, l, true, num );
            if( better )
            {
               auto it = newLower.find( j );
               if( it == newLower.end() )
                  newLower.emplace( j, v );
               else if( v > it->second )
                  it->second = v;
            }
         }
         if( hi.isFinite() )
         {
            const REAL v = integral ? num.feasFloor( hi.value() ) : hi.value();
            const bool better =
                integral ? !num.isHuge( v ) && ( u.isInfinite() || v < u.value() )
                         : isSignificantBoundChange( v, u, false, num );
            if( better )
            {
               auto it = newUpper.find( j );
               if( it == newUpper.end() )
                  newUpper.emplace( j, v );
               else if( v < it->second )
                  it->second = v;
            }
         }
      } );
   }

   TransactionBuilder<REAL> tb;
   auto lit = newLower.begin();
   auto uit = newUpper.begin();
   while( lit != newLower.end() || uit != newUpper.end() )
   {
      const bool takeLower =
          uit == newUpper.end() || ( lit != newLower.end() && lit->first <= uit->first );
      if( takeLower )
      {
         tb.changeLower( lit->first, lit->second );
         ++lit;
      }
      else
      {
         tb.changeUpper( uit->first, uit->second );
         ++uit;
      }
      tb.emitTo( out );
   }
}

template class Propagation<double>;
template class Propagation<Rational>;

} // namespace parapre
