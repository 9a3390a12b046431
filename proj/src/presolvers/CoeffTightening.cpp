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
#include "parapre/presolvers/CoeffTightening.hpp"

#include "parapre/presolvers/Util.hpp"

namespace parapre
{

template <typename REAL>
CoeffTightening<REAL>::CoeffTightening()
    : Presolver<REAL>( { "coefftightening", Tier::kFast, false, 1, false, true } )
{
}

namespace
{

/// divides an all-integral row by the gcd of its coefficients and rounds
/// the sides; returns false if an equation has no integral solution
template <typename REAL>
bool
gcdNormalize( const Num<REAL>& num, std::vector<MatrixEntry<REAL>>& entries,
              Extended<REAL>& lhs, Extended<REAL>& rhs )
{
   REAL g{ 0 };
   for( const auto& e : entries )
      g = integralGcd( g, Num<REAL>::round( e.value ) );
   if( g == 0 )
      return true;
   for( auto& e : entries )
      e.value = Num<REAL>::round( e.value ) / g;
   if( lhs.isFinite() )
      lhs = num.feasCeil( lhs.value() / g );
   if( rhs.isFinite() )
      rhs = num.feasFloor( rhs.value() / g );
   return !( lhs.isFinite() && rhs.isFinite() && lhs.value() > rhs.value() );
}

} // namespace

template <typename REAL>
void
CoeffTightening<REAL>::run( const PresolveView<REAL>& view,
                            std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();
   TransactionBuilder<REAL> tb;

   for( int i : view.changedRows )
   {
      if( !problem.isRowActive( i ) || problem.getRowSize( i ) < 2 )
         continue;
      const std::vector<MatrixEntry<REAL>> orig = problem.activeRow( i );
      std::vector<MatrixEntry<REAL>> entries = orig;
      Extended<REAL> lhs = problem.getLhs( i );
      Extended<REAL> rhs = problem.getRhs( i );
      std::vector<int> tightened;

      if( std::optional<LeRow<REAL>> le = oneSidedRow( problem, i );
          le && le->maxAct )
      {
         // sum a x <= U: shrink a_j while the row stays redundant for
         // every other value of the integral x_j
         REAL maxAct = *le->maxAct;
         REAL U = le->rhs;
         for( std::size_t p = 0; p < le->entries.size(); ++p )
         {
            MatrixEntry<REAL>& e = le->entries[p];
            if( !problem.isIntegral( e.index ) || !num.isGT( maxAct, U ) )
               continue;
            if( e.value > 0 )
            {
               const REAL d = U - ( maxAct - e.value );
               if( !num.isGT( d, REAL( 0 ) ) )
                  continue;
               const REAL& u = problem.getUpper( e.index ).value();
               e.value -= d;
               U -= d * u;
               maxAct -= d * u;
            }
            else
            {
               const REAL d = U - ( maxAct + e.value );
               if( !num.isGT( d, REAL( 0 ) ) )
                  continue;
               const REAL& l = problem.getLower( e.index ).value();
               e.value += d;
               U += d * l;
               maxAct += d * l;
            }
            tightened.push_back( e.index );
         }
         for( std::size_t p = 0; p < entries.size(); ++p )
            entries[p].value =
                le->sign > 0 ? le->entries[p].value : REAL( -le->entries[p].value );
         if( le->sign > 0 )
            rhs = U;
         else
            lhs = REAL( -U );
      }

      // drop entries that became zero
      std::vector<MatrixEntry<REAL>> nonzero;
      for( const auto& e : entries )
         if( !num.isZero( e.value ) )
            nonzero.push_back( e );
      if( isIntegralRow( problem, nonzero ) &&
          !gcdNormalize( num, nonzero, lhs, rhs ) )
      {
         out.push_back( verdictTransaction<REAL>( StepKind::kInfeasible ) );
         return;
      }

      tb.assertRow( i );
      for( int j : tightened )
         tb.assertColBoundsUnmodified( j );
      std::size_t q = 0;
      for( const auto& e : orig )
      {
         if( q < nonzero.size() && nonzero[q].index == e.index )
         {
            if( nonzero[q].value != e.value )
               tb.changeCoeff( i, e.index, nonzero[q].value );
            ++q;
         }
         else
            tb.changeCoeff( i, e.index, REAL( 0 ) );
      }
      if( !( lhs == problem.getLhs( i ) ) )
         tb.changeLhs( i, lhs );
      if( !( rhs == problem.getRhs( i ) ) )
         tb.changeRhs( i, rhs );
      tb.emitTo( out );
   }
}

template class CoeffTightening<double>;
template class CoeffTightening<Rational>;

} // namespace parapre
