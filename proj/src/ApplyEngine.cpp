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
#include "parapre/core/ApplyEngine.hpp"

#include <algorithm>
#include <climits>

#include <fmt/format.h>

namespace parapre
{

std::string_view
stepKindName( StepKind kind )
{
   switch( kind )
   {
   case StepKind::kAssertRowUnmodified:
      return "ASSERT_ROW_UNMODIFIED";
   case StepKind::kAssertColBoundsUnmodified:
      return "ASSERT_COL_BOUNDS_UNMODIFIED";
   case StepKind::kAssertRowBoundsUnmodified:
      return "ASSERT_ROW_BOUNDS_UNMODIFIED";
   case StepKind::kFixColumn:
      return "FIX_COLUMN";
   case StepKind::kChangeLower:
      return "CHANGE_LOWER";
   case StepKind::kChangeUpper:
      return "CHANGE_UPPER";
   case StepKind::kChangeLhs:
      return "CHANGE_LHS";
   case StepKind::kChangeRhs:
      return "CHANGE_RHS";
   case StepKind::kChangeCoeff:
      return "CHANGE_COEFF";
   case StepKind::kSubstituteInObjective:
      return "SUBSTITUTE_IN_OBJECTIVE";
   case StepKind::kSubstituteColumn:
      return "SUBSTITUTE_COLUMN";
   case StepKind::kSubstituteAffine:
      return "SUBSTITUTE_AFFINE";
   case StepKind::kMarkRowRedundant:
      return "MARK_ROW_REDUNDANT";
   case StepKind::kDeleteColumn:
      return "DELETE_COLUMN";
   case StepKind::kAggregateParallelCols:
      return "AGGREGATE_PARALLEL_COLS";
   case StepKind::kAddScaledRow:
      return "ADD_SCALED_ROW";
   case StepKind::kImplyIntegral:
      return "IMPLY_INTEGRAL";
   case StepKind::kInfeasible:
      return "INFEASIBLE";
   case StepKind::kUnbounded:
      return "UNBOUNDED";
   }
   return "UNKNOWN";
}

std::string_view
txStatusName( TxStatus s )
{
   switch( s )
   {
   case TxStatus::kApplied:
      return "APPLIED";
   case TxStatus::kDiscarded:
      return "DISCARDED";
   case TxStatus::kCanceled:
      return "CANCELED";
   }
   return "UNKNOWN";
}

void
ModificationFlags::reset( int nrows, int ncols )
{
   for( auto* v : { &rowMod, &rowBnd, &rowDel } )
      v->assign( nrows, FlagSetter() );
   for( auto* v : { &colMod, &colBnd, &colDel, &colRep } )
      v->assign( ncols, FlagSetter() );
}

bool
ModificationFlags::anySet() const
{
   for( const auto* v : { &rowMod, &rowBnd, &rowDel, &colMod, &colBnd, &colDel,
                          &colRep } )
      for( const FlagSetter& s : *v )
         if( s.isSet() )
            return true;
   return false;
}

std::vector<int>
ChangeJournal::since( const std::vector<int>& log, std::size_t mark, int n )
{
   std::vector<int> out;
   if( mark == kEverything )
   {
      out.resize( n );
      for( int i = 0; i < n; ++i )
         out[i] = i;
      return out;
   }
   out.assign( log.begin() + static_cast<std::ptrdiff_t>( mark ), log.end() );
   std::sort( out.begin(), out.end() );
   out.erase( std::unique( out.begin(), out.end() ), out.end() );
   return out;
}

template <typename REAL>
std::string
describeStep( const ReductionStep<REAL>& s )
{
   std::string out = fmt::format( "{} row {} col {} val {}",
                                  stepKindName( s.kind ), s.row, s.col,
                                  extendedToString( s.value ) );
   if( s.aux != kNone )
      out += fmt::format( " aux {} factor {}", s.aux,
                          numberToString( s.factor ) );
   if( s.kind == StepKind::kAggregateParallelCols )
      out += fmt::format( " upper {}", extendedToString( s.value2 ) );
   return out;
}

template <typename REAL>
ApplyEngine<REAL>::ApplyEngine( Problem<REAL>& problem,
                                PostsolveRecord<REAL>& record,
                                std::vector<std::string> presolverNames,
                                const Message* msg )
    : problem( problem ), record( record ), names( std::move( presolverNames ) ),
      msg( msg )
{
   flags.reset( problem.getNRows(), problem.getNCols() );
}

template <typename REAL>
void
ApplyEngine<REAL>::beginBatch()
{
   flags.reset( problem.getNRows(), problem.getNCols() );
   appliedInBatch = 0;
}

template <typename REAL>
const std::string&
ApplyEngine<REAL>::presolverName( int id ) const
{
   static const std::string unknown = "unknown";
   if( id < 0 || id >= static_cast<int>( names.size() ) )
      return unknown;
   return names[id];
}

template <typename REAL>
FlagSetter
ApplyEngine<REAL>::findConflict( const Transaction<REAL>& t ) const
{
   FlagSetter best;
   bool conflict = false;
   auto consider = [&]( FlagSetter s ) {
      if( !s.isSet() )
         return;
      if( !conflict || s.applied < best.applied )
         best = s;
      conflict = true;
   };
   // dead before this batch: nobody in the batch to blame
   auto deadUnattributed = [&]() {
      if( !conflict )
      {
         best = FlagSetter{ t.presolver, INT_MAX };
         conflict = true;
      }
   };
   auto checkCol = [&]( int col ) {
      if( col == kNone )
         return;
      if( !problem.isColActive( col ) )
      {
         const FlagSetter s = flags.colDeleted( col );
         if( s.isSet() )
            consider( s );
         else
            deadUnattributed();
      }
      consider( flags.colReplaced( col ) );
   };
   auto checkRow = [&]( int row ) {
      if( row == kNone )
         return;
      if( !problem.isRowActive( row ) )
      {
         const FlagSetter s = flags.rowDeleted( row );
         if( s.isSet() )
            consider( s );
         else
            deadUnattributed();
      }
   };

   for( const ReductionStep<REAL>& s : t.steps )
   {
      switch( s.kind )
      {
      case StepKind::kAssertRowUnmodified:
         consider( flags.rowModified( s.row ) );
         checkRow( s.row );
         break;
      case StepKind::kAssertRowBoundsUnmodified:
         consider( flags.rowBoundsModified( s.row ) );
         checkRow( s.row );
         break;
      case StepKind::kAssertColBoundsUnmodified:
         consider( flags.colBoundsModified( s.col ) );
         checkCol( s.col );
         break;
      case StepKind::kInfeasible:
      case StepKind::kUnbounded:
         break;
      case StepKind::kAddScaledRow:
         checkRow( s.row );
         checkRow( s.aux );
         break;
      case StepKind::kSubstituteAffine:
      case StepKind::kAggregateParallelCols:
         checkRow( s.row );
         checkCol( s.col );
         checkCol( s.aux );
         break;
      default:
         checkRow( s.row );
         checkCol( s.col );
         break;
      }
   }
   return conflict ? best : FlagSetter();
}

template <typename REAL>
long
ApplyEngine<REAL>::substitutionFillIn( int row, int col ) const
{
   // row r leaves, col j leaves every other row, the rest of r is merged in
   std::vector<int> rest;
   problem.forEachInRow( row, [&]( int k, const REAL& ) {
      if( k != col )
         rest.push_back( k );
   } );
   long delta = -static_cast<long>( rest.size() ) - 1;
   problem.forEachInCol( col, [&]( int i, const REAL& ) {
      if( i == row )
         return;
      long added = 0;
      for( int k : rest )
         if( problem.findActive( i, k ) == nullptr )
            ++added;
      delta += added - 1;
   } );
   return delta;
}

template <typename REAL>
long
ApplyEngine<REAL>::addRowFillIn( int target, int equation,
                                 const REAL& scale ) const
{
   const Num<REAL>& num = problem.getNum();
   long delta = 0;
   problem.forEachInRow( equation, [&]( int k, const REAL& a ) {
      const REAL* old = problem.findActive( target, k );
      if( old == nullptr )
         ++delta;
      else if( num.isZero( *old + scale * a ) )
         --delta;
   } );
   return delta;
}

template <typename REAL>
bool
ApplyEngine<REAL>::wouldCancel( const Transaction<REAL>& t ) const
{
   for( const ReductionStep<REAL>& s : t.steps )
   {
      if( s.kind == StepKind::kSubstituteColumn &&
          substitutionFillIn( s.row, s.col ) > 0 )
         return true;
      if( s.kind == StepKind::kAddScaledRow &&
          addRowFillIn( s.row, s.aux, s.factor ) > 0 )
         return true;
   }
   return false;
}

template <typename REAL>
void
ApplyEngine<REAL>::touchColumnRows( int col, FlagSetter me, bool sides )
{
   problem.forEachInCol( col, [&]( int row, const REAL& ) {
      flags.setRowModified( row, me );
      if( sides )
         flags.setRowBoundsModified( row, me );
      journal.touchRow( row );
   } );
}

template <typename REAL>
bool
ApplyEngine<REAL>::sidePairCrosses( const ReductionStep<REAL>& first,
                                    const ReductionStep<REAL>& second ) const
{
   const bool lhsFirst = first.kind == StepKind::kChangeLhs &&
                         second.kind == StepKind::kChangeRhs;
   const bool rhsFirst = first.kind == StepKind::kChangeRhs &&
                         second.kind == StepKind::kChangeLhs;
   if( !( lhsFirst || rhsFirst ) || first.row != second.row || !first.value.isFinite() )
      return false;
   if( lhsFirst )
   {
      const Extended<REAL>& rhs = problem.getRhs( first.row );
      return rhs.isFinite() && first.value.value() > rhs.value();
   }
   const Extended<REAL>& lhs = problem.getLhs( first.row );
   return lhs.isFinite() && first.value.value() < lhs.value();
}

template <typename REAL>
bool
ApplyEngine<REAL>::applyStep( const ReductionStep<REAL>& s, FlagSetter me )
{
   const Num<REAL>& num = problem.getNum();
   bool feasible = true;
   auto check = [&]( ChangeResult r ) {
      if( r == ChangeResult::kInfeasible )
         feasible = false;
   };
   auto noteRow = [&]( int row ) {
      touchedRows.push_back( row );
      journal.touchRow( row );
   };
   auto touchRowCols = [&]( int row ) {
      problem.forEachInRow( row,
                            [&]( int col, const REAL& ) { journal.touchCol( col ); } );
   };
   auto boundChanged = [&]( int col ) {
      flags.setColBoundsModified( col, me );
      journal.touchCol( col );
      problem.forEachInCol( col, [&]( int row, const REAL& ) { noteRow( row ); } );
   };
   // adds delta to both finite sides, leading side first so they never cross
   auto shiftSides = [&]( int row, const REAL& delta ) {
      auto moveLhs = [&]() {
         if( problem.getLhs( row ).isFinite() )
            check( problem.setLhs( row, problem.getLhs( row ).value() + delta ) );
      };
      auto moveRhs = [&]() {
         if( problem.getRhs( row ).isFinite() )
            check( problem.setRhs( row, problem.getRhs( row ).value() + delta ) );
      };
      if( delta > 0 )
      {
         moveRhs();
         moveLhs();
      }
      else
      {
         moveLhs();
         moveRhs();
      }
   };
   // replaces x_j in all active rows but `skip` by alpha + sum beta_k x_k
   auto eliminate = [&]( int col, int skip, const REAL& alpha,
                         const std::vector<MatrixEntry<REAL>>& beta ) {
      std::vector<MatrixEntry<REAL>> rows = problem.activeCol( col );
      for( const auto& [row, aij] : rows )
      {
         if( row == skip )
            continue;
         for( const auto& [k, bk] : beta )
         {
            const REAL* old = problem.findActive( row, k );
            const REAL updated = ( old ? *old : REAL( 0 ) ) + aij * bk;
            problem.setCoefficient( row, k, updated );
            journal.touchCol( k );
            ++counts.coeffChanges;
         }
         problem.setCoefficient( row, col, REAL( 0 ) );
         const REAL shift = aij * alpha;
         if( shift != 0 )
            shiftSides( row, REAL( -shift ) );
         flags.setRowModified( row, me );
         flags.setRowBoundsModified( row, me );
         noteRow( row );
      }
      // objective: c_j x_j = c_j alpha + sum c_j beta_k x_k
      const REAL cj = problem.getObj( col );
      if( cj != 0 )
      {
         for( const auto& [k, bk] : beta )
            problem.setObj( k, problem.getObj( k ) + cj * bk );
         problem.addObjOffset( cj * alpha );
         problem.setObj( col, REAL( 0 ) );
      }
   };

   switch( s.kind )
   {
   case StepKind::kAssertRowUnmodified:
   case StepKind::kAssertColBoundsUnmodified:
   case StepKind::kAssertRowBoundsUnmodified:
   case StepKind::kInfeasible:
   case StepKind::kUnbounded:
      break;
   case StepKind::kFixColumn:
   {
      const REAL v = s.value.value();
      record.addFixedCol( s.col, v );
      touchColumnRows( s.col, me, true );
      problem.forEachInCol( s.col, [&]( int row, const REAL& ) {
         touchedRows.push_back( row );
      } );
      flags.setColBoundsModified( s.col, me );
      flags.setColDeleted( s.col, me );
      journal.touchCol( s.col );
      check( problem.fixColumn( s.col, v ) );
      ++counts.deletedCols;
      break;
   }
   case StepKind::kChangeLower:
   {
      Extended<REAL> v = s.value;
      if( problem.isIntegral( s.col ) && v.isFinite() )
         v = num.feasCeil( v.value() );
      if( v > problem.getLower( s.col ) )
      {
         check( problem.setLower( s.col, v ) );
         boundChanged( s.col );
         ++counts.boundChanges;
      }
      break;
   }
   case StepKind::kChangeUpper:
   {
      Extended<REAL> v = s.value;
      if( problem.isIntegral( s.col ) && v.isFinite() )
         v = num.feasFloor( v.value() );
      if( v < problem.getUpper( s.col ) )
      {
         check( problem.setUpper( s.col, v ) );
         boundChanged( s.col );
         ++counts.boundChanges;
      }
      break;
   }
   case StepKind::kChangeLhs:
   case StepKind::kChangeRhs:
   {
      const bool isLhs = s.kind == StepKind::kChangeLhs;
      const Extended<REAL>& old =
          isLhs ? problem.getLhs( s.row ) : problem.getRhs( s.row );
      if( !( old == s.value ) )
      {
         const bool finitenessChanged = old.isFinite() != s.value.isFinite();
         check( isLhs ? problem.setLhs( s.row, s.value )
                      : problem.setRhs( s.row, s.value ) );
         flags.setRowBoundsModified( s.row, me );
         noteRow( s.row );
         // locks of every column in the row move with the side finiteness
         if( finitenessChanged )
            touchRowCols( s.row );
         ++counts.sideChanges;
      }
      break;
   }
   case StepKind::kChangeCoeff:
   {
      const REAL v = s.value.value();
      problem.setCoefficient( s.row, s.col, v );
      flags.setRowModified( s.row, me );
      flags.setColModified( s.col, me );
      noteRow( s.row );
      journal.touchCol( s.col );
      ++counts.coeffChanges;
      break;
   }
   case StepKind::kSubstituteInObjective:
   {
      const int row = s.row;
      const int col = s.col;
      const REAL a = *problem.findActive( row, col );
      std::vector<MatrixEntry<REAL>> rest;
      problem.forEachInRow( row, [&]( int k, const REAL& ak ) {
         if( k != col )
            rest.push_back( { k, ak } );
      } );
      record.addSingletonCol( col, row, a, problem.getLhs( row ),
                              problem.getRhs( row ), problem.getLower( col ),
                              problem.getUpper( col ), rest );
      const REAL cj = problem.getObj( col );
      if( cj != 0 )
      {
         // only valid for equations: c_j x_j = c_j (b - rest) / a
         assert( problem.isEquation( row ) );
         const REAL ratio = cj / a;
         for( const auto& [k, ak] : rest )
         {
            problem.setObj( k, problem.getObj( k ) - ratio * ak );
            flags.setColModified( k, me );
         }
         problem.addObjOffset( ratio * problem.getLhs( row ).value() );
         problem.setObj( col, REAL( 0 ) );
      }
      problem.deactivateColumn( col, ColFlag::kSubstituted );
      flags.setColDeleted( col, me );
      flags.setRowModified( row, me );
      noteRow( row );
      journal.touchCol( col );
      ++counts.deletedCols;
      break;
   }
   case StepKind::kSubstituteColumn:
   {
      const int row = s.row;
      const int col = s.col;
      const REAL a = *problem.findActive( row, col );
      const REAL b = problem.getLhs( row ).value();
      std::vector<MatrixEntry<REAL>> rest;
      problem.forEachInRow( row, [&]( int k, const REAL& ak ) {
         if( k != col )
            rest.push_back( { k, ak } );
      } );
      record.addSubstitutedCol( col, row, b, a, problem.getLower( col ),
                                problem.getUpper( col ), rest );
      // x_j = b/a - sum (a_k/a) x_k
      std::vector<MatrixEntry<REAL>> beta;
      beta.reserve( rest.size() );
      for( const auto& [k, ak] : rest )
      {
         beta.push_back( { k, -ak / a } );
         flags.setColModified( k, me );
      }
      touchRowCols( row );
      problem.markRowRedundant( row );
      flags.setRowDeleted( row, me );
      flags.setRowModified( row, me );
      noteRow( row );
      eliminate( col, row, b / a, beta );
      problem.deactivateColumn( col, ColFlag::kSubstituted );
      flags.setColDeleted( col, me );
      journal.touchCol( col );
      ++counts.deletedCols;
      ++counts.deletedRows;
      break;
   }
   case StepKind::kSubstituteAffine:
   {
      const int col = s.col;
      const REAL alpha = s.value.value();
      record.addAffineCol( col, s.aux, alpha, s.factor, problem.getLower( col ),
                           problem.getUpper( col ) );
      if( s.row != kNone )
      {
         touchRowCols( s.row );
         problem.markRowRedundant( s.row );
         flags.setRowDeleted( s.row, me );
         noteRow( s.row );
         ++counts.deletedRows;
      }
      eliminate( col, kNone, alpha, { { s.aux, s.factor } } );
      problem.deactivateColumn( col, ColFlag::kSubstituted );
      flags.setColDeleted( col, me );
      flags.setColModified( s.aux, me );
      journal.touchCol( col );
      journal.touchCol( s.aux );
      ++counts.deletedCols;
      break;
   }
   case StepKind::kMarkRowRedundant:
   {
      touchRowCols( s.row );
      problem.markRowRedundant( s.row );
      flags.setRowDeleted( s.row, me );
      flags.setRowModified( s.row, me );
      flags.setRowBoundsModified( s.row, me );
      noteRow( s.row );
      ++counts.deletedRows;
      break;
   }
   case StepKind::kDeleteColumn:
   {
      touchColumnRows( s.col, me, false );
      problem.setObj( s.col, REAL( 0 ) );
      problem.deactivateColumn( s.col, ColFlag::kSubstituted );
      flags.setColDeleted( s.col, me );
      journal.touchCol( s.col );
      ++counts.deletedCols;
      break;
   }
   case StepKind::kAggregateParallelCols:
   {
      const int j = s.col;
      const int k = s.aux;
      record.addParallelCols( j, k, problem.isIntegral( j ), s.factor,
                              problem.getLower( j ), problem.getUpper( j ),
                              problem.getLower( k ), problem.getUpper( k ) );
      // relax completely first so the bounds never cross on the way
      check( problem.setLower( j, Extended<REAL>::negInf() ) );
      check( problem.setUpper( j, Extended<REAL>::posInf() ) );
      check( problem.setLower( j, s.value ) );
      check( problem.setUpper( j, s.value2 ) );
      boundChanged( j );
      flags.setColReplaced( j, me );
      flags.setColModified( j, me );
      ++counts.boundChanges;
      break;
   }
   case StepKind::kAddScaledRow:
   {
      const int target = s.row;
      const int eq = s.aux;
      const REAL b = problem.getLhs( eq ).value();
      for( const MatrixEntry<REAL>& e : problem.activeRow( eq ) )
      {
         const REAL* old = problem.findActive( target, e.index );
         problem.setCoefficient( target, e.index,
                                 ( old ? *old : REAL( 0 ) ) + s.factor * e.value );
         journal.touchCol( e.index );
         flags.setColModified( e.index, me );
         ++counts.coeffChanges;
      }
      const REAL shift = s.factor * b;
      if( shift != 0 )
         shiftSides( target, shift );
      flags.setRowModified( target, me );
      flags.setRowBoundsModified( target, me );
      noteRow( target );
      break;
   }
   case StepKind::kImplyIntegral:
   {
      if( !problem.isIntegral( s.col ) )
      {
         const Extended<REAL> l = problem.getLower( s.col );
         const Extended<REAL> u = problem.getUpper( s.col );
         problem.setIntegral( s.col );
         if( !( l == problem.getLower( s.col ) ) || !( u == problem.getUpper( s.col ) ) )
         {
            boundChanged( s.col );
            ++counts.boundChanges;
         }
         flags.setColModified( s.col, me );
         journal.touchCol( s.col );
      }
      break;
   }
   }
   return feasible;
}

template <typename REAL>
ApplyVerdict
ApplyEngine<REAL>::apply( const Transaction<REAL>& t, ApplyOutcome& outcome,
                          int indexInList )
{
   outcome = ApplyOutcome();
   ++txCounts.found;

   for( const ReductionStep<REAL>& s : t.steps )
   {
      if( isVerdict( s.kind ) )
      {
         outcome.status = TxStatus::kApplied;
         ++txCounts.applied;
         logTransaction( t, indexInList, outcome );
         if( keepAppliedLog )
            appliedLog.push_back( presolverName( t.presolver ) + " " +
                                  describeStep( s ) );
         return s.kind == StepKind::kInfeasible ? ApplyVerdict::kInfeasible
                                                : ApplyVerdict::kUnbounded;
      }
   }

   const FlagSetter conflict = findConflict( t );
   if( conflict.isSet() )
   {
      outcome.status = TxStatus::kDiscarded;
      outcome.conflictingPresolver = conflict.presolver;
      outcome.redundant = classifyRedundant( t );
      ++txCounts.discarded;
      logTransaction( t, indexInList, outcome );
      return ApplyVerdict::kOk;
   }
   if( wouldCancel( t ) )
   {
      outcome.status = TxStatus::kCanceled;
      ++txCounts.canceled;
      logTransaction( t, indexInList, outcome );
      return ApplyVerdict::kOk;
   }

   const FlagSetter me{ t.presolver, appliedInBatch };
   touchedRows.clear();
   bool feasible = true;
   for( std::size_t k = 0; k < t.steps.size(); ++k )
   {
      // a side pair of one row may cross the old opposite side halfway
      if( k + 1 < t.steps.size() && sidePairCrosses( t.steps[k], t.steps[k + 1] ) )
      {
         feasible = applyStep( t.steps[k + 1], me ) && feasible;
         feasible = applyStep( t.steps[k], me ) && feasible;
         ++k;
         continue;
      }
      feasible = applyStep( t.steps[k], me ) && feasible;
   }
   ++appliedInBatch;
   ++txCounts.applied;

   // an emptied row must admit activity zero
   const Num<REAL>& num = problem.getNum();
   for( int row : touchedRows )
   {
      if( !problem.isRowActive( row ) || problem.getRowSize( row ) != 0 )
         continue;
      if( ( problem.getLhs( row ).isFinite() &&
            num.isFeasGT( problem.getLhs( row ).value(), REAL( 0 ) ) ) ||
          ( problem.getRhs( row ).isFinite() &&
            num.isFeasLT( problem.getRhs( row ).value(), REAL( 0 ) ) ) )
         feasible = false;
   }

   logTransaction( t, indexInList, outcome );
   if( keepAppliedLog )
   {
      std::string line = presolverName( t.presolver );
      for( const ReductionStep<REAL>& s : t.steps )
         line += " | " + describeStep( s );
      appliedLog.push_back( std::move( line ) );
   }
   return feasible ? ApplyVerdict::kOk : ApplyVerdict::kInfeasible;
}

template <typename REAL>
ApplyVerdict
ApplyEngine<REAL>::applyAll( std::span<const Transaction<REAL>> transactions,
                             std::vector<ApplyOutcome>& outcomes )
{
   int lastPresolver = kNone;
   int index = 0;
   for( const Transaction<REAL>& t : transactions )
   {
      if( t.presolver != lastPresolver )
      {
         lastPresolver = t.presolver;
         index = 0;
      }
      ApplyOutcome o;
      const ApplyVerdict v = apply( t, o, index++ );
      outcomes.push_back( o );
      if( v != ApplyVerdict::kOk )
         return v;
   }
   return ApplyVerdict::kOk;
}

template <typename REAL>
bool
ApplyEngine<REAL>::classifyRedundant( const Transaction<REAL>& t ) const
{
   const Num<REAL>& num = problem.getNum();
   for( const ReductionStep<REAL>& s : t.steps )
   {
      const bool colDead = s.col != kNone && !problem.isColActive( s.col );
      const bool rowDead = s.row != kNone && !problem.isRowActive( s.row );
      bool satisfied = false;
      switch( s.kind )
      {
      case StepKind::kAssertRowUnmodified:
      case StepKind::kAssertColBoundsUnmodified:
      case StepKind::kAssertRowBoundsUnmodified:
         satisfied = true;
         break;
      case StepKind::kFixColumn:
      case StepKind::kSubstituteInObjective:
      case StepKind::kSubstituteColumn:
      case StepKind::kDeleteColumn:
         satisfied = colDead;
         break;
      case StepKind::kSubstituteAffine:
         satisfied = colDead || !problem.isColActive( s.aux );
         break;
      case StepKind::kChangeLower:
      {
         const Extended<REAL>& cur = problem.getLower( s.col );
         satisfied = colDead || ( s.value.isFinite() ? cur.isFinite() &&
                                                           num.isGE( cur.value(),
                                                                     s.value.value() )
                                                     : true );
         break;
      }
      case StepKind::kChangeUpper:
      {
         const Extended<REAL>& cur = problem.getUpper( s.col );
         satisfied = colDead || ( s.value.isFinite() ? cur.isFinite() &&
                                                           num.isLE( cur.value(),
                                                                     s.value.value() )
                                                     : true );
         break;
      }
      case StepKind::kChangeLhs:
         satisfied = rowDead || problem.getLhs( s.row ) == s.value;
         break;
      case StepKind::kChangeRhs:
         satisfied = rowDead || problem.getRhs( s.row ) == s.value;
         break;
      case StepKind::kChangeCoeff:
      {
         if( rowDead || colDead )
         {
            satisfied = true;
            break;
         }
         const REAL* cur = problem.getMatrix().find( s.row, s.col );
         const REAL v = s.value.value();
         satisfied = cur ? num.isEq( *cur, v ) : num.isZero( v );
         break;
      }
      case StepKind::kMarkRowRedundant:
      case StepKind::kAddScaledRow:
         satisfied = rowDead;
         break;
      case StepKind::kAggregateParallelCols:
         satisfied = colDead || !problem.isColActive( s.aux );
         break;
      case StepKind::kImplyIntegral:
         satisfied = colDead || problem.isIntegral( s.col );
         break;
      case StepKind::kInfeasible:
      case StepKind::kUnbounded:
         satisfied = false;
         break;
      }
      if( !satisfied )
         return false;
   }
   return true;
}

template <typename REAL>
void
ApplyEngine<REAL>::logTransaction( const Transaction<REAL>& t, int index,
                                   const ApplyOutcome& o ) const
{
   if( msg == nullptr || !msg->enabled( VerbosityLevel::kTransactions ) )
      return;
   const std::string& name = presolverName( t.presolver );
   const std::string_view status = txStatusName( o.status );
   for( const ReductionStep<REAL>& s : t.steps )
      msg->print( VerbosityLevel::kTransactions,
                  "{} row {} col {} val {} kind {} status {}", name, s.row, s.col,
                  extendedToString( s.value ), stepKindName( s.kind ), status );
   msg->print( VerbosityLevel::kTransactions,
               "{} transaction {} status {} conflict {} redundant {}", name, index,
               status,
               o.conflictingPresolver == kNone
                   ? std::string( "none" )
                   : presolverName( o.conflictingPresolver ),
               o.redundant ? 1 : 0 );
}

template std::string
describeStep( const ReductionStep<double>& );
template std::string
describeStep( const ReductionStep<Rational>& );

template class ApplyEngine<double>;
template class ApplyEngine<Rational>;

} // namespace parapre
