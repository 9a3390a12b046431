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
#ifndef PARAPRE_CORE_TRANSACTION_HPP_
#define PARAPRE_CORE_TRANSACTION_HPP_

#include <cstdint>
#include <set>
#include <tuple>
#include <string_view>
#include <vector>

#include "parapre/core/Num.hpp"

namespace parapre
{

enum class StepKind : std::uint8_t
{
   kAssertRowUnmodified,
   kAssertColBoundsUnmodified,
   kAssertRowBoundsUnmodified,
   kFixColumn,
   kChangeLower,
   kChangeUpper,
   kChangeLhs,
   kChangeRhs,
   kChangeCoeff,
   kSubstituteInObjective,
   kSubstituteColumn,
   kSubstituteAffine,
   kMarkRowRedundant,
   kDeleteColumn,
   kAggregateParallelCols,
   kAddScaledRow,
   kImplyIntegral,
   kInfeasible,
   kUnbounded,
};

std::string_view
stepKindName( StepKind kind );

inline bool
isAssertion( StepKind kind )
{
   return kind == StepKind::kAssertRowUnmodified ||
          kind == StepKind::kAssertColBoundsUnmodified ||
          kind == StepKind::kAssertRowBoundsUnmodified;
}

inline bool
isVerdict( StepKind kind )
{
   return kind == StepKind::kInfeasible || kind == StepKind::kUnbounded;
}

constexpr int kNone = -1;

/// One assertion or change.
///
///   FIX_COLUMN               col, value
///   CHANGE_LOWER/UPPER       col, value (only ever tightens)
///   CHANGE_LHS/RHS           row, value
///   CHANGE_COEFF             row, col, value (zero deletes the entry)
///   SUBSTITUTE_IN_OBJECTIVE  row, col: singleton col leaves through row
///   SUBSTITUTE_COLUMN        row, col: eliminate col via equation row
///   SUBSTITUTE_AFFINE        col, aux, value alpha, factor beta:
///                            x_col = alpha + beta x_aux; row (optional) is
///                            the defining equation and becomes redundant
///   AGGREGATE_PARALLEL_COLS  col j, aux k, factor s: x_j := x_j + s x_k,
///                            new bounds of x_j in value (lower) and
///                            value2 (upper)
///   ADD_SCALED_ROW           row target, aux equation, factor s
template <typename REAL>
struct ReductionStep
{
   StepKind kind;
   int row = kNone;
   int col = kNone;
   Extended<REAL> value{ 0 };
   int aux = kNone;
   REAL factor{ 0 };
   Extended<REAL> value2{ 0 };
};

template <typename REAL>
struct Transaction
{
   int presolver = kNone;
   std::vector<ReductionStep<REAL>> steps;

   bool
   empty() const
   {
      return steps.empty();
   }
};

/// Builds one transaction; assertions are kept in front of all changes.
template <typename REAL>
class TransactionBuilder
{
 public:
   TransactionBuilder&
   assertRowUnmodified( int row )
   {
      asserts.push_back( { StepKind::kAssertRowUnmodified, row, kNone } );
      return *this;
   }

   TransactionBuilder&
   assertRowBoundsUnmodified( int row )
   {
      asserts.push_back( { StepKind::kAssertRowBoundsUnmodified, row, kNone } );
      return *this;
   }

   TransactionBuilder&
   assertColBoundsUnmodified( int col )
   {
      asserts.push_back( { StepKind::kAssertColBoundsUnmodified, kNone, col } );
      return *this;
   }

   /// both flavours of row assertions
   TransactionBuilder&
   assertRow( int row )
   {
      assertRowUnmodified( row );
      return assertRowBoundsUnmodified( row );
   }

   TransactionBuilder&
   fixColumn( int col, const REAL& value )
   {
      return change( { StepKind::kFixColumn, kNone, col, value } );
   }

   TransactionBuilder&
   changeLower( int col, const Extended<REAL>& value )
   {
      return change( { StepKind::kChangeLower, kNone, col, value } );
   }

   TransactionBuilder&
   changeUpper( int col, const Extended<REAL>& value )
   {
      return change( { StepKind::kChangeUpper, kNone, col, value } );
   }

   TransactionBuilder&
   changeLhs( int row, const Extended<REAL>& value )
   {
      return change( { StepKind::kChangeLhs, row, kNone, value } );
   }

   TransactionBuilder&
   changeRhs( int row, const Extended<REAL>& value )
   {
      return change( { StepKind::kChangeRhs, row, kNone, value } );
   }

   TransactionBuilder&
   changeCoeff( int row, int col, const REAL& value )
   {
      return change( { StepKind::kChangeCoeff, row, col, value } );
   }

   TransactionBuilder&
   substituteInObjective( int row, int col )
   {
      return change( { StepKind::kSubstituteInObjective, row, col } );
   }

   TransactionBuilder&
   substituteColumn( int row, int col )
   {
      return change( { StepKind::kSubstituteColumn, row, col } );
   }

   TransactionBuilder&
   substituteAffine( int col, int aux, const REAL& alpha, const REAL& beta,
                     int row = kNone )
   {
      ReductionStep<REAL> s{ StepKind::kSubstituteAffine, row, col, alpha };
      s.aux = aux;
      s.factor = beta;
      return change( s );
   }

   TransactionBuilder&
   markRowRedundant( int row )
   {
      return change( { StepKind::kMarkRowRedundant, row, kNone } );
   }

   TransactionBuilder&
   deleteColumn( int col )
   {
      return change( { StepKind::kDeleteColumn, kNone, col } );
   }

   TransactionBuilder&
   aggregateParallelCols( int col, int aux, const REAL& scale,
                          const Extended<REAL>& newLower,
                          const Extended<REAL>& newUpper )
   {
      ReductionStep<REAL> s{ StepKind::kAggregateParallelCols, kNone, col,
                             newLower };
      s.aux = aux;
      s.factor = scale;
      s.value2 = newUpper;
      return change( s );
   }

   TransactionBuilder&
   addScaledRow( int target, int equation, const REAL& scale )
   {
      ReductionStep<REAL> s{ StepKind::kAddScaledRow, target, kNone };
      s.aux = equation;
      s.factor = scale;
      return change( s );
   }

   TransactionBuilder&
   implyIntegral( int col )
   {
      return change( { StepKind::kImplyIntegral, kNone, col } );
   }

   TransactionBuilder&
   infeasible()
   {
      return change( { StepKind::kInfeasible } );
   }

   TransactionBuilder&
   unbounded()
   {
      return change( { StepKind::kUnbounded } );
   }

   bool
   hasChanges() const
   {
      return !changes.empty();
   }

   /// moves the collected steps out; builder is empty afterwards
   Transaction<REAL>
   build()
   {
      Transaction<REAL> t;
      // drop repeated assertions, keep the first occurrence
      std::vector<ReductionStep<REAL>> unique;
      unique.reserve( asserts.size() );
      std::set<std::tuple<int, int, int>> seen;
      for( auto& a : asserts )
         if( seen.emplace( static_cast<int>( a.kind ), a.row, a.col ).second )
            unique.push_back( std::move( a ) );
      t.steps = std::move( unique );
      t.steps.insert( t.steps.end(), changes.begin(), changes.end() );
      asserts.clear();
      changes.clear();
      return t;
   }

   /// appends the transaction to out if it carries at least one change
   void
   emitTo( std::vector<Transaction<REAL>>& out )
   {
      if( hasChanges() )
         out.push_back( build() );
      else
         asserts.clear();
   }

 private:
   TransactionBuilder&
   change( ReductionStep<REAL> s )
   {
      changes.push_back( std::move( s ) );
      return *this;
   }

   std::vector<ReductionStep<REAL>> asserts;
   std::vector<ReductionStep<REAL>> changes;
};

template <typename REAL>
Transaction<REAL>
verdictTransaction( StepKind verdict )
{
   Transaction<REAL> t;
   t.steps.push_back( ReductionStep<REAL>{ verdict } );
   return t;
}

} // namespace parapre

#endif
