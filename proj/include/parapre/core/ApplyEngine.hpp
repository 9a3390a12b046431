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
#ifndef PARAPRE_CORE_APPLY_ENGINE_HPP_
#define PARAPRE_CORE_APPLY_ENGINE_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parapre/core/PostsolveRecord.hpp"
#include "parapre/core/Problem.hpp"
#include "parapre/core/Transaction.hpp"
#include "parapre/misc/Message.hpp"

namespace parapre
{

/// who set a modification flag first in the current batch
struct FlagSetter
{
   int presolver = kNone;
   int applied = -1;

   bool
   isSet() const
   {
      return applied >= 0;
   }
};

/// Per-batch modification flags. Only the apply engine writes them.
class ModificationFlags
{
 public:
   void
   reset( int nrows, int ncols );

   FlagSetter rowModified( int row ) const { return rowMod[row]; }
   FlagSetter rowBoundsModified( int row ) const { return rowBnd[row]; }
   FlagSetter rowDeleted( int row ) const { return rowDel[row]; }
   FlagSetter colModified( int col ) const { return colMod[col]; }
   FlagSetter colBoundsModified( int col ) const { return colBnd[col]; }
   FlagSetter colDeleted( int col ) const { return colDel[col]; }
   FlagSetter colReplaced( int col ) const { return colRep[col]; }

   void setRowModified( int row, FlagSetter s ) { setFirst( rowMod[row], s ); }
   void setRowBoundsModified( int row, FlagSetter s ) { setFirst( rowBnd[row], s ); }
   void setRowDeleted( int row, FlagSetter s ) { setFirst( rowDel[row], s ); }
   void setColModified( int col, FlagSetter s ) { setFirst( colMod[col], s ); }
   void setColBoundsModified( int col, FlagSetter s ) { setFirst( colBnd[col], s ); }
   void setColDeleted( int col, FlagSetter s ) { setFirst( colDel[col], s ); }
   void setColReplaced( int col, FlagSetter s ) { setFirst( colRep[col], s ); }

   bool
   anySet() const;

 private:
   static void
   setFirst( FlagSetter& slot, FlagSetter s )
   {
      if( !slot.isSet() )
         slot = s;
   }

   std::vector<FlagSetter> rowMod;
   std::vector<FlagSetter> rowBnd;
   std::vector<FlagSetter> rowDel;
   std::vector<FlagSetter> colMod;
   std::vector<FlagSetter> colBnd;
   std::vector<FlagSetter> colDel;
   std::vector<FlagSetter> colRep;
};

/// Append-only lists of touched rows and columns. Consumers keep a
/// watermark and ask for everything touched after it.
class ChangeJournal
{
 public:
   static constexpr std::size_t kEverything = static_cast<std::size_t>( -1 );

   void
   touchRow( int row )
   {
      rows.push_back( row );
   }

   void
   touchCol( int col )
   {
      cols.push_back( col );
   }

   std::size_t
   rowMark() const
   {
      return rows.size();
   }

   std::size_t
   colMark() const
   {
      return cols.size();
   }

   /// sorted, unique; kEverything yields all indices below n
   std::vector<int>
   rowsSince( std::size_t mark, int nrows ) const
   {
      return since( rows, mark, nrows );
   }

   std::vector<int>
   colsSince( std::size_t mark, int ncols ) const
   {
      return since( cols, mark, ncols );
   }

 private:
   static std::vector<int>
   since( const std::vector<int>& log, std::size_t mark, int n );

   std::vector<int> rows;
   std::vector<int> cols;
};

/// Reduction counters used by the abort criterion and statistics.
struct ReductionCounts
{
   long boundChanges = 0;
   long deletedCols = 0;
   long sideChanges = 0;
   long deletedRows = 0;
   long coeffChanges = 0;

   ReductionCounts&
   operator+=( const ReductionCounts& o )
   {
      boundChanges += o.boundChanges;
      deletedCols += o.deletedCols;
      sideChanges += o.sideChanges;
      deletedRows += o.deletedRows;
      coeffChanges += o.coeffChanges;
      return *this;
   }

   bool
   any() const
   {
      return boundChanges + deletedCols + sideChanges + deletedRows +
                 coeffChanges >
             0;
   }
};

struct TransactionCounts
{
   long found = 0;
   long applied = 0;
   long discarded = 0;
   long canceled = 0;

   TransactionCounts&
   operator+=( const TransactionCounts& o )
   {
      found += o.found;
      applied += o.applied;
      discarded += o.discarded;
      canceled += o.canceled;
      return *this;
   }
};

enum class TxStatus : std::uint8_t
{
   kApplied,
   kDiscarded,
   kCanceled,
};

std::string_view
txStatusName( TxStatus s );

struct ApplyOutcome
{
   TxStatus status = TxStatus::kApplied;
   int conflictingPresolver = kNone;
   bool redundant = false;
};

enum class ApplyVerdict : std::uint8_t
{
   kOk,
   kInfeasible,
   kUnbounded,
};

/// Validates transactions against the modification flags and applies the
/// valid ones to the problem, in the given order, single-threaded.
template <typename REAL>
class ApplyEngine
{
 public:
   ApplyEngine( Problem<REAL>& problem, PostsolveRecord<REAL>& record,
                std::vector<std::string> presolverNames,
                const Message* msg = nullptr );

   /// clears the modification flags; assertions of transactions applied
   /// afterwards are checked relative to this point
   void
   beginBatch();

   /// applies each transaction in order; outcomes get one entry per
   /// transaction that was looked at. Stops at the first verdict.
   ApplyVerdict
   applyAll( std::span<const Transaction<REAL>> transactions,
             std::vector<ApplyOutcome>& outcomes );

   ApplyVerdict
   apply( const Transaction<REAL>& transaction, ApplyOutcome& outcome,
          int indexInList = 0 );

   /// a discarded transaction is redundant if all its changes already
   /// hold in the current problem
   bool
   classifyRedundant( const Transaction<REAL>& transaction ) const;

   const ModificationFlags&
   getFlags() const
   {
      return flags;
   }

   ChangeJournal&
   getJournal()
   {
      return journal;
   }

   const ChangeJournal&
   getJournal() const
   {
      return journal;
   }

   /// counters since the last call of takeCounts
   ReductionCounts
   takeCounts()
   {
      ReductionCounts c = counts;
      counts = ReductionCounts();
      return c;
   }

   const ReductionCounts&
   peekCounts() const
   {
      return counts;
   }

   const TransactionCounts&
   getTransactionCounts() const
   {
      return txCounts;
   }

   /// applied transactions in application order (presolver, steps)
   const std::vector<std::string>&
   getAppliedLog() const
   {
      return appliedLog;
   }

   void
   setKeepAppliedLog( bool keep )
   {
      keepAppliedLog = keep;
   }

   const std::string&
   presolverName( int id ) const;

   /// nnz change a SUBSTITUTE_COLUMN of col via row would cause
   long
   substitutionFillIn( int row, int col ) const;

   long
   addRowFillIn( int target, int equation, const REAL& scale ) const;

 private:
   FlagSetter
   findConflict( const Transaction<REAL>& t ) const;

   bool
   wouldCancel( const Transaction<REAL>& t ) const;

   bool
   applyStep( const ReductionStep<REAL>& step, FlagSetter me );

   /// true if a CHANGE_LHS/CHANGE_RHS pair of one row must be applied in
   /// reverse to avoid a transient lhs > rhs
   bool
   sidePairCrosses( const ReductionStep<REAL>& first, const ReductionStep<REAL>& second ) const;

   void
   touchColumnRows( int col, FlagSetter me, bool sides );

   void
   logTransaction( const Transaction<REAL>& t, int index,
                   const ApplyOutcome& o ) const;

   Problem<REAL>& problem;
   PostsolveRecord<REAL>& record;
   std::vector<std::string> names;
   const Message* msg;
   ModificationFlags flags;
   ChangeJournal journal;
   ReductionCounts counts;
   TransactionCounts txCounts;
   int appliedInBatch = 0;
   std::vector<int> touchedRows;
   bool keepAppliedLog = false;
   std::vector<std::string> appliedLog;
};

template <typename REAL>
std::string
describeStep( const ReductionStep<REAL>& s );

extern template class ApplyEngine<double>;
extern template class ApplyEngine<Rational>;

} // namespace parapre

#endif
