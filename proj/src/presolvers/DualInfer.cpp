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
#include "parapre/presolvers/DualInfer.hpp"

#include <set>

#include "parapre/presolvers/Util.hpp"

namespace parapre
{

template <typename REAL>
DualInfer<REAL>::DualInfer()
    : Presolver<REAL>( { "dualinfer", Tier::kExhaustive, false, 13, false, true } )
{
}

namespace
{

constexpr int kDualPasses = 3;

/// bounds of a linear form sum a_i y_i over the dual bounds
template <typename REAL>
RowActivity<REAL>
dualActivity( const std::vector<MatrixEntry<REAL>>& col,
              const std::vector<Extended<REAL>>& ylo,
              const std::vector<Extended<REAL>>& yhi )
{
   RowActivity<REAL> act;
   for( const auto& e : col )
      applyEntryToActivity( act, e.value, ylo[e.index], yhi[e.index], 1 );
   return act;
}

} // namespace

template <typename REAL>
void
DualInfer<REAL>::run( const PresolveView<REAL>& view,
                      std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();
   const int ncols = problem.getNCols();
   const int nrows = problem.getNRows();

   // bounds implied by a row are dropped for the dual; a row may only be
   // used if none of its other columns lost a bound, and its columns keep
   // their bounds afterwards
   std::vector<bool> lowerFree( ncols, false );
   std::vector<bool> upperFree( ncols, false );
   std::vector<bool> dropped( ncols, false );
   std::vector<bool> frozen( ncols, false );
   std::vector<std::vector<MatrixEntry<REAL>>> cols( ncols );
   for( int j = 0; j < ncols; ++j )
   {
      if( !problem.isColActive( j ) || problem.isIntegral( j ) )
         continue;
      cols[j] = problem.activeCol( j );
      lowerFree[j] = problem.getLower( j ).isInfinite();
      upperFree[j] = problem.getUpper( j ).isInfinite();
   }
   auto rowUsable = [&]( int row, int j ) {
      bool ok = true;
      problem.forEachInRow( row, [&]( int k, const REAL& ) {
         if( k != j && dropped[k] )
            ok = false;
      } );
      return ok;
   };
   auto freezeRow = [&]( int row, int j ) {
      problem.forEachInRow( row, [&]( int k, const REAL& ) {
         if( k != j )
            frozen[k] = true;
      } );
   };
   for( int j = 0; j < ncols; ++j )
   {
      if( cols[j].empty() || frozen[j] )
         continue;
      for( const auto& e : cols[j] )
      {
         if( lowerFree[j] && upperFree[j] )
            break;
         if( !rowUsable( e.index, j ) )
            continue;
         auto [lo, hi] = impliedBounds( problem, e.index, j, e.value );
         bool used = false;
         if( !lowerFree[j] && lo.isFinite() &&
             num.isFeasGE( lo.value(), problem.getLower( j ).value() ) )
            lowerFree[j] = used = true;
         if( !upperFree[j] && hi.isFinite() &&
             num.isFeasLE( hi.value(), problem.getUpper( j ).value() ) )
            upperFree[j] = used = true;
         if( used )
         {
            dropped[j] = true;
            freezeRow( e.index, j );
         }
      }
   }

   // dual bounds: y <= 0 on <= rows, y >= 0 on >= rows, free otherwise
   std::vector<Extended<REAL>> ylo( nrows, Extended<REAL>( 0 ) );
   std::vector<Extended<REAL>> yhi( nrows, Extended<REAL>( 0 ) );
   for( int i = 0; i < nrows; ++i )
   {
      if( !problem.isRowActive( i ) )
         continue;
      if( problem.getRhs( i ).isFinite() )
         ylo[i] = Extended<REAL>::negInf();
      if( problem.getLhs( i ).isFinite() )
         yhi[i] = Extended<REAL>::posInf();
   }

   // u free: sum a y <= c;  l free: sum a y >= c
   for( int pass = 0; pass < kDualPasses; ++pass )
   {
      bool changed = false;
      for( int j = 0; j < ncols; ++j )
      {
         if( cols[j].empty() || ( !lowerFree[j] && !upperFree[j] ) )
            continue;
         const REAL& c = problem.getObj( j );
         // bounds from a stale activity are weaker but still valid
         const RowActivity<REAL> act = dualActivity( cols[j], ylo, yhi );
         for( const auto& e : cols[j] )
         {
            const int i = e.index;
            if( upperFree[j] )
            {
               // a_i y_i <= c - minRest
               const Extended<REAL> rest = residualMinActivity( act, e.value, ylo[i], yhi[i] );
               if( rest.isFinite() )
               {
                  const REAL b = ( c - rest.value() ) / e.value;
                  if( e.value > 0 && ( yhi[i].isInfinite() || num.isLT( b, yhi[i].value() ) ) )
                     yhi[i] = b, changed = true;
                  else if( e.value < 0 && ( ylo[i].isInfinite() || num.isGT( b, ylo[i].value() ) ) )
                     ylo[i] = b, changed = true;
               }
            }
            if( lowerFree[j] )
            {
               const Extended<REAL> rest = residualMaxActivity( act, e.value, ylo[i], yhi[i] );
               if( rest.isFinite() )
               {
                  const REAL b = ( c - rest.value() ) / e.value;
                  if( e.value > 0 && ( ylo[i].isInfinite() || num.isGT( b, ylo[i].value() ) ) )
                     ylo[i] = b, changed = true;
                  else if( e.value < 0 && ( yhi[i].isInfinite() || num.isLT( b, yhi[i].value() ) ) )
                     yhi[i] = b, changed = true;
               }
            }
         }
      }
      if( !changed )
         break;
   }

   TransactionBuilder<REAL> tb;
   // assertions on the rows of a column and the columns of those rows
   auto assertAroundRow = [&]( int i ) {
      tb.assertRow( i );
      problem.forEachInRow( i, [&]( int k, const REAL& ) {
         tb.assertColBoundsUnmodified( k );
         problem.forEachInCol( k, [&]( int i2, const REAL& ) {
            if( i2 != i )
               tb.assertRow( i2 );
         } );
      } );
   };

   for( int i = 0; i < nrows; ++i )
   {
      if( !problem.isRowActive( i ) || problem.isEquation( i ) )
         continue;
      const Extended<REAL>& lhs = problem.getLhs( i );
      const Extended<REAL>& rhs = problem.getRhs( i );
      if( lhs.isFinite() && ylo[i].isFinite() && num.isFeasGT( ylo[i].value(), REAL( 0 ) ) )
      {
         assertAroundRow( i );
         tb.changeRhs( i, lhs );
         tb.emitTo( out );
      }
      else if( rhs.isFinite() && yhi[i].isFinite() &&
               num.isFeasLT( yhi[i].value(), REAL( 0 ) ) )
      {
         assertAroundRow( i );
         tb.changeLhs( i, rhs );
         tb.emitTo( out );
      }
   }

   for( int j = 0; j < ncols; ++j )
   {
      if( cols[j].empty() )
         continue;
      // reduced cost c_j - sum a y over the dual bounds
      const RowActivity<REAL> act = dualActivity( cols[j], ylo, yhi );
      const REAL& c = problem.getObj( j );
      const bool positive = act.ninfmax == 0 && num.isFeasGT( REAL( c - act.max ), REAL( 0 ) );
      const bool negative = act.ninfmin == 0 && num.isFeasLT( REAL( c - act.min ), REAL( 0 ) );
      const Extended<REAL>& target = positive ? problem.getLower( j ) : problem.getUpper( j );
      if( ( !positive && !negative ) || target.isInfinite() )
         continue;
      tb.assertColBoundsUnmodified( j );
      for( const auto& e : cols[j] )
         assertAroundRow( e.index );
      tb.fixColumn( j, target.value() );
      tb.emitTo( out );
   }
}

template class DualInfer<double>;
template class DualInfer<Rational>;

} // namespace parapre
