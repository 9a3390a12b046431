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
#ifndef PARAPRE_CORE_SCHEDULER_HPP_
#define PARAPRE_CORE_SCHEDULER_HPP_

#include <array>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "parapre/core/ApplyEngine.hpp"
#include "parapre/core/PostsolveRecord.hpp"
#include "parapre/core/Presolver.hpp"
#include "parapre/core/Problem.hpp"

namespace parapre
{

struct PresolveOptions
{
   /// 0 picks the hardware concurrency
   int threads = 1;
   double abortFactor = 8e-4;
   /// only honoured with a single thread
   bool applyImmediately = false;
   int verbosity = 2;
   NumericMode numericMode = NumericMode::kFloat64;
   unsigned long randomSeed = 0;
   double epsilon = 1e-9;
   double feastol = 1e-6;
   double hugeval = 1e8;
   int maxRounds = 500;
   /// presolver name -> enabled; missing names keep their default
   std::map<std::string, bool> enabled;
   /// presolver name -> internal parallelism; missing names keep default
   std::map<std::string, bool> internalParallel;
};

enum class PresolveStatus
{
   kReduced,
   kUnchanged,
   kInfeasible,
   kUnbounded,
};

std::string_view
presolveStatusName( PresolveStatus s );

struct PresolverStats
{
   std::string name;
   long calls = 0;
   long found = 0;
   long applied = 0;
   long discarded = 0;
   long canceled = 0;
};

struct PresolveStatistics
{
   int rounds = 0;
   std::array<int, 3> roundsByTier{ 0, 0, 0 };
   TransactionCounts transactions;
   ReductionCounts reductions;
   int nrowsBefore = 0;
   int ncolsBefore = 0;
   int nnzBefore = 0;
   int nrowsAfter = 0;
   int ncolsAfter = 0;
   int nnzAfter = 0;
   int threads = 1;
   double seconds = 0;
   std::vector<PresolverStats> presolvers;
};

template <typename REAL>
struct PresolveResult
{
   PresolveStatus status = PresolveStatus::kUnchanged;
   /// compact copy of the remaining rows and columns
   Problem<REAL> reduced;
   PostsolveRecord<REAL> record;
   PresolveStatistics stats;
   /// applied transactions in application order, one line each
   std::vector<std::string> appliedLog;
};

/// positive sense of the abort criterion: more reductions than the abort
/// factor demands on columns, rows or nonzeros
bool
enoughReductions( const ReductionCounts& counts, int ncols, int nrows, int nnz,
                  double abortFactor );

template <typename REAL>
Num<REAL>
makeNum( const PresolveOptions& options );

/// round based presolve; log receives the verbosity filtered messages
template <typename REAL>
PresolveResult<REAL>
presolve( const Problem<REAL>& problem, const PresolveOptions& options,
          std::ostream* log = nullptr );

/// compacts the active part of a problem; colMap/rowMap get the original
/// index of every kept column/row
template <typename REAL>
Problem<REAL>
extractReduced( const Problem<REAL>& problem, std::vector<int>& colMap,
                std::vector<int>& rowMap );

extern template Num<double>
makeNum<double>( const PresolveOptions& );
extern template Num<Rational>
makeNum<Rational>( const PresolveOptions& );
extern template PresolveResult<double>
presolve<double>( const Problem<double>&, const PresolveOptions&, std::ostream* );
extern template PresolveResult<Rational>
presolve<Rational>( const Problem<Rational>&, const PresolveOptions&, std::ostream* );
extern template Problem<double>
extractReduced<double>( const Problem<double>&, std::vector<int>&, std::vector<int>& );
extern template Problem<Rational>
extractReduced<Rational>( const Problem<Rational>&, std::vector<int>&, std::vector<int>& );

} // namespace parapre

#endif
