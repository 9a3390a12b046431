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
#ifndef PARAPRE_CORE_POSTSOLVE_RECORD_HPP_
#define PARAPRE_CORE_POSTSOLVE_RECORD_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "parapre/core/Num.hpp"
#include "parapre/core/SparseMatrix.hpp"

namespace parapre
{

enum class RecordKind : std::uint8_t
{
   kFixedCol = 1,
   kSubstitutedCol = 2,
   kSingletonCol = 3,
   kAffineCol = 4,
   kParallelCols = 5,
};

/// Generic record entry. Layouts by kind:
///
///   FixedCol        ints {j}                 vals {v}
///   SubstitutedCol  ints {j, row, k...}      vals {b, a_j, l_j, u_j, a_k...}
///   SingletonCol    ints {j, row, k...}      vals {a_j, L, U, l_j, u_j, a_k...}
///   AffineCol       ints {j, k}              vals {alpha, beta, l_j, u_j}
///   ParallelCols    ints {j, k, integral}    vals {s, l_j, u_j, l_k, u_k}
///
/// All indices are original column/row indices.
template <typename REAL>
struct RecordEntry
{
   RecordKind kind;
   std::vector<int> ints;
   std::vector<Extended<REAL>> vals;

   friend bool
   operator==( const RecordEntry&, const RecordEntry& ) = default;
};

/// Append-only log of value-relevant reductions plus the data needed to map
/// reduced solutions back to the original space.
template <typename REAL>
class PostsolveRecord
{
 public:
   PostsolveRecord() = default;

   /// remembers original dimensions, names and objective
   template <typename ProblemT>
   explicit PostsolveRecord( const ProblemT& original )
       : origNRows( original.getNRows() ), origNCols( original.getNCols() ),
         colNames( original.getColNames() ), rowNames( original.getRowNames() ),
         objective( original.getObjective() ),
         objOffset( original.getObjOffset() )
   {
      colMap.resize( origNCols );
      for( int j = 0; j < origNCols; ++j )
         colMap[j] = j;
      rowMap.resize( origNRows );
      for( int i = 0; i < origNRows; ++i )
         rowMap[i] = i;
   }

   void
   addFixedCol( int col, const REAL& value )
   {
      entries.push_back( { RecordKind::kFixedCol, { col }, { value } } );
   }

   void
   addSubstitutedCol( int col, int row, const REAL& side, const REAL& coef,
                      const Extended<REAL>& lb, const Extended<REAL>& ub,
                      const std::vector<MatrixEntry<REAL>>& rest )
   {
      RecordEntry<REAL> e{ RecordKind::kSubstitutedCol, { col, row },
                           { side, coef, lb, ub } };
      for( const auto& r : rest )
      {
         e.ints.push_back( r.index );
         e.vals.push_back( r.value );
      }
      entries.push_back( std::move( e ) );
   }

   void
   addSingletonCol( int col, int row, const REAL& coef,
                    const Extended<REAL>& lhs, const Extended<REAL>& rhs,
                    const Extended<REAL>& lb, const Extended<REAL>& ub,
                    const std::vector<MatrixEntry<REAL>>& rest )
   {
      RecordEntry<REAL> e{ RecordKind::kSingletonCol, { col, row },
                           { coef, lhs, rhs, lb, ub } };
      for( const auto& r : rest )
      {
         e.ints.push_back( r.index );
         e.vals.push_back( r.value );
      }
      entries.push_back( std::move( e ) );
   }

   void
   addAffineCol( int col, int aux, const REAL& alpha, const REAL& beta,
                 const Extended<REAL>& lb, const Extended<REAL>& ub )
   {
      entries.push_back(
          { RecordKind::kAffineCol, { col, aux }, { alpha, beta, lb, ub } } );
   }

   void
   addParallelCols( int colJ, int colK, bool integral, const REAL& scale,
                    const Extended<REAL>& lj, const Extended<REAL>& uj,
                    const Extended<REAL>& lk, const Extended<REAL>& uk )
   {
      entries.push_back( { RecordKind::kParallelCols,
                           { colJ, colK, integral ? 1 : 0 },
                           { scale, lj, uj, lk, uk } } );
   }

   int origNRows = 0;
   int origNCols = 0;
   std::vector<std::string> colNames;
   std::vector<std::string> rowNames;
   std::vector<REAL> objective;
   REAL objOffset{ 0 };
   /// reduced index -> original index
   std::vector<int> colMap;
   std::vector<int> rowMap;
   std::vector<RecordEntry<REAL>> entries;

   friend bool
   operator==( const PostsolveRecord&, const PostsolveRecord& ) = default;
};

} // namespace parapre

#endif
