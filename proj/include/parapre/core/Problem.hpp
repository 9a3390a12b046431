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
#ifndef PARAPRE_CORE_PROBLEM_HPP_
#define PARAPRE_CORE_PROBLEM_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "parapre/core/Num.hpp"
#include "parapre/core/RowActivity.hpp"
#include "parapre/core/SparseMatrix.hpp"

namespace parapre
{

enum class ColFlag : std::uint8_t
{
   kIntegral = 1,
   kFixed = 2,
   kSubstituted = 4,
   kInactive = 8,
};

enum class RowFlag : std::uint8_t
{
   kLhsInf = 1,
   kRhsInf = 2,
   kEquation = 4,
   kRedundant = 8,
};

template <typename E>
class Flags
{
 public:
   bool
   test( E f ) const
   {
      return ( bits & static_cast<std::uint8_t>( f ) ) != 0;
   }

   void
   set( E f )
   {
      bits |= static_cast<std::uint8_t>( f );
   }

   void
   unset( E f )
   {
      bits &= static_cast<std::uint8_t>( ~static_cast<std::uint8_t>( f ) );
   }

   std::uint8_t
   raw() const
   {
      return bits;
   }

   friend bool
   operator==( const Flags&, const Flags& ) = default;

 private:
   std::uint8_t bits = 0;
};

enum class ChangeResult : std::uint8_t
{
   kOk,
   kInfeasible,
};

/// min c^T x + offset  s.t.  L <= Ax <= U,  l <= x <= u,  x_j integral for
/// j in the integral set.
///
/// Row and column indices never change during presolve. Deleted columns are
/// flagged INACTIVE and deleted rows REDUNDANT; their matrix entries stay in
/// storage until compress() and are skipped by the active accessors. All
/// cached data (activities, sizes, locks) covers active entries only.
template <typename REAL>
class Problem
{
 public:
   using Entry = MatrixEntry<REAL>;

   Problem() = default;

   explicit Problem( Num<REAL> numerics ) : num( std::move( numerics ) ) {}

   // ---- construction -----------------------------------------------------

   int
   addCol( std::string colName, const REAL& cost, Extended<REAL> lb,
           Extended<REAL> ub, bool integral );

   int
   addRow( std::string rowName, Extended<REAL> lhs, Extended<REAL> rhs );

   /// duplicate entries are an error; zeros are ignored
   void
   addEntry( int row, int col, const REAL& value );

   /// derives flags, sizes, locks and activities; throws on invalid data
   void
   finalize();

   void
   setName( std::string n )
   {
      probName = std::move( n );
   }

   void
   setObjOffset( const REAL& offset )
   {
      objOffset = offset;
   }

   // ---- queries ----------------------------------------------------------

   const std::string&
   getName() const
   {
      return probName;
   }

   const Num<REAL>&
   getNum() const
   {
      return num;
   }

   int
   getNRows() const
   {
      return matrix.getNRows();
   }

   int
   getNCols() const
   {
      return matrix.getNCols();
   }

   const SparseMatrix<REAL>&
   getMatrix() const
   {
      return matrix;
   }

   const REAL&
   getObj( int col ) const
   {
      return obj[col];
   }

   const std::vector<REAL>&
   getObjective() const
   {
      return obj;
   }

   const REAL&
   getObjOffset() const
   {
      return objOffset;
   }

   const Extended<REAL>&
   getLower( int col ) const
   {
      return lower[col];
   }

   const Extended<REAL>&
   getUpper( int col ) const
   {
      return upper[col];
   }

   const std::vector<Extended<REAL>>&
   getLowerBounds() const
   {
      return lower;
   }

   const std::vector<Extended<REAL>>&
   getUpperBounds() const
   {
      return upper;
   }

   const Extended<REAL>&
   getLhs( int row ) const
   {
      return lhs[row];
   }

   const Extended<REAL>&
   getRhs( int row ) const
   {
      return rhs[row];
   }

   Flags<ColFlag>
   getColFlags( int col ) const
   {
      return colFlags[col];
   }

   Flags<RowFlag>
   getRowFlags( int row ) const
   {
      return rowFlags[row];
   }

   bool
   isIntegral( int col ) const
   {
      return colFlags[col].test( ColFlag::kIntegral );
   }

   bool
   isColActive( int col ) const
   {
      return !colFlags[col].test( ColFlag::kInactive );
   }

   bool
   isRowActive( int row ) const
   {
      return !rowFlags[row].test( RowFlag::kRedundant );
   }

   bool
   isEquation( int row ) const
   {
      return rowFlags[row].test( RowFlag::kEquation );
   }

   /// binary: integral with bounds [0,1]
   bool
   isBinary( int col ) const
   {
      return isIntegral( col ) && lower[col] == Extended<REAL>( 0 ) &&
             upper[col] == Extended<REAL>( 1 );
   }

   const std::string&
   getColName( int col ) const
   {
      return colNames[col];
   }

   const std::string&
   getRowName( int row ) const
   {
      return rowNames[row];
   }

   const std::vector<std::string>&
   getColNames() const
   {
      return colNames;
   }

   const std::vector<std::string>&
   getRowNames() const
   {
      return rowNames;
   }

   int
   getRowSize( int row ) const
   {
      return rowSize[row];
   }

   int
   getColSize( int col ) const
   {
      return colSize[col];
   }

   int
   getActiveNnz() const
   {
      return activeNnz;
   }

   int
   getNActiveRows() const;

   int
   getNActiveCols() const;

   const RowActivity<REAL>&
   getActivity( int row ) const
   {
      return activities[row];
   }

   const std::vector<RowActivity<REAL>>&
   getActivities() const
   {
      return activities;
   }

   int
   getUpLocks( int col ) const
   {
      return upLocks[col];
   }

   int
   getDownLocks( int col ) const
   {
      return downLocks[col];
   }

   /// coefficient of an active entry, nullptr if absent or dead
   const REAL*
   findActive( int row, int col ) const
   {
      if( !isRowActive( row ) || !isColActive( col ) )
         return nullptr;
      return matrix.find( row, col );
   }

   template <typename F>
   void
   forEachInRow( int row, F&& f ) const
   {
      for( const Entry& e : matrix.getRow( row ) )
         if( isColActive( e.index ) )
            f( e.index, e.value );
   }

   template <typename F>
   void
   forEachInCol( int col, F&& f ) const
   {
      for( const Entry& e : matrix.getCol( col ) )
         if( isRowActive( e.index ) )
            f( e.index, e.value );
   }

   /// active entries of a row as a vector
   std::vector<Entry>
   activeRow( int row ) const;

   std::vector<Entry>
   activeCol( int col ) const;

   /// fraction of stored entries that are dead
   double
   deadFraction() const;

   // ---- mutation (called by the apply engine only) -----------------------

   /// fixes the column, shifts row sides, moves c_j v into the offset
   ChangeResult
   fixColumn( int col, const REAL& value );

   /// tighten or relax; integral columns are rounded inward
   ChangeResult
   setLower( int col, Extended<REAL> value );

   ChangeResult
   setUpper( int col, Extended<REAL> value );

   ChangeResult
   setLhs( int row, Extended<REAL> value );

   ChangeResult
   setRhs( int row, Extended<REAL> value );

   /// zero (within epsilon) removes the entry
   void
   setCoefficient( int row, int col, const REAL& value );

   void
   markRowRedundant( int row );

   /// removes the column from all active rows without shifting sides
   void
   deactivateColumn( int col, ColFlag reason );

   void
   setIntegral( int col );

   void
   setObj( int col, const REAL& value )
   {
      obj[col] = value;
   }

   void
   addObjOffset( const REAL& delta )
   {
      objOffset += delta;
   }

   /// physically drops dead entries and recomputes activities from scratch
   void
   compress();

   void
   recomputeActivities();

   /// active row/col sizes, locks, activities and both matrix views agree
   /// with a from-scratch computation
   bool
   checkConsistency( std::string* why = nullptr ) const;

   /// hash of the complete state, used to detect mutation
   std::size_t
   fingerprint() const;

 private:
   void
   updateRowFlags( int row );

   void
   addLocks( int row, int col, const REAL& coef, int sign );

   void
   addEntryToCaches( int row, int col, const REAL& coef, int sign );

   RowActivity<REAL>
   freshActivity( int row ) const;

   std::string probName;
   Num<REAL> num;
   SparseMatrix<REAL> matrix;
   std::vector<REAL> obj;
   REAL objOffset{ 0 };
   std::vector<Extended<REAL>> lower;
   std::vector<Extended<REAL>> upper;
   std::vector<Extended<REAL>> lhs;
   std::vector<Extended<REAL>> rhs;
   std::vector<Flags<ColFlag>> colFlags;
   std::vector<Flags<RowFlag>> rowFlags;
   std::vector<std::string> colNames;
   std::vector<std::string> rowNames;
   std::vector<RowActivity<REAL>> activities;
   std::vector<int> rowSize;
   std::vector<int> colSize;
   std::vector<int> upLocks;
   std::vector<int> downLocks;
   int activeNnz = 0;
};

extern template class Problem<double>;
extern template class Problem<Rational>;

} // namespace parapre

#endif
