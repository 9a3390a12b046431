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
#ifndef PARAPRE_CORE_SPARSE_MATRIX_HPP_
#define PARAPRE_CORE_SPARSE_MATRIX_HPP_

#include <algorithm>
#include <cassert>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "parapre/core/Num.hpp"

namespace parapre
{

template <typename REAL>
struct MatrixEntry
{
   int index;
   REAL value;
};

/// Row-major and column-major copies of the same sparse matrix.
///
/// Entries inside a row are sorted by column, inside a column by row. No
/// stored value is zero. Both views are updated together by every mutator.
template <typename REAL>
class SparseMatrix
{
 public:
   using Entry = MatrixEntry<REAL>;

   SparseMatrix() = default;

   SparseMatrix( int nrows, int ncols ) : rows( nrows ), cols( ncols ) {}

   int
   getNRows() const
   {
      return static_cast<int>( rows.size() );
   }

   int
   getNCols() const
   {
      return static_cast<int>( cols.size() );
   }

   int
   getStoredNnz() const
   {
      return nnz;
   }

   int
   addRow()
   {
      rows.emplace_back();
      return getNRows() - 1;
   }

   int
   addCol()
   {
      cols.emplace_back();
      return getNCols() - 1;
   }

   std::span<const Entry>
   getRow( int row ) const
   {
      return rows[row];
   }

   std::span<const Entry>
   getCol( int col ) const
   {
      return cols[col];
   }

   /// pointer to the stored coefficient or nullptr
   const REAL*
   find( int row, int col ) const
   {
      const auto& r = rows[row];
      auto it = lowerBound( r, col );
      if( it == r.end() || it->index != col )
         return nullptr;
      return &it->value;
   }

   /// inserts or overwrites; a zero value removes the entry
   void
   setEntry( int row, int col, const REAL& value )
   {
      if( value == 0 )
      {
         removeEntry( row, col );
         return;
      }
      const bool inserted = upsert( rows[row], col, value );
      upsert( cols[col], row, value );
      if( inserted )
         ++nnz;
   }

   bool
   removeEntry( int row, int col )
   {
      const bool removed = erase( rows[row], col );
      if( removed )
      {
         erase( cols[col], row );
         --nnz;
      }
      return removed;
   }

   /// drops every entry whose row or column is dead
   template <typename RowDead, typename ColDead>
   void
   compress( RowDead&& rowDead, ColDead&& colDead )
   {
      nnz = 0;
      for( int i = 0; i < getNRows(); ++i )
      {
         auto& r = rows[i];
         if( rowDead( i ) )
         {
            r.clear();
            r.shrink_to_fit();
            continue;
         }
         std::erase_if( r, [&]( const Entry& e ) { return colDead( e.index ); } );
         nnz += static_cast<int>( r.size() );
      }
      for( int j = 0; j < getNCols(); ++j )
      {
         auto& c = cols[j];
         if( colDead( j ) )
         {
            c.clear();
            c.shrink_to_fit();
            continue;
         }
         std::erase_if( c, [&]( const Entry& e ) { return rowDead( e.index ); } );
      }
   }

   /// both views hold the same triples, sorted, without zeros
   bool
   checkConsistency( std::string* why = nullptr ) const
   {
      auto fail = [&]( std::string msg ) {
         if( why )
            *why = std::move( msg );
         return false;
      };
      std::vector<std::tuple<int, int, REAL>> fromRows;
      std::vector<std::tuple<int, int, REAL>> fromCols;
      for( int i = 0; i < getNRows(); ++i )
      {
         for( std::size_t k = 0; k < rows[i].size(); ++k )
         {
            if( rows[i][k].value == 0 )
               return fail( "explicit zero in row " + std::to_string( i ) );
            if( k > 0 && rows[i][k - 1].index >= rows[i][k].index )
               return fail( "row " + std::to_string( i ) + " not sorted" );
            fromRows.emplace_back( i, rows[i][k].index, rows[i][k].value );
         }
      }
      for( int j = 0; j < getNCols(); ++j )
      {
         for( std::size_t k = 0; k < cols[j].size(); ++k )
         {
            if( k > 0 && cols[j][k - 1].index >= cols[j][k].index )
               return fail( "col " + std::to_string( j ) + " not sorted" );
            fromCols.emplace_back( cols[j][k].index, j, cols[j][k].value );
         }
      }
      std::sort( fromCols.begin(), fromCols.end(),
                 []( const auto& a, const auto& b ) {
                    return std::get<0>( a ) != std::get<0>( b )
                               ? std::get<0>( a ) < std::get<0>( b )
                               : std::get<1>( a ) < std::get<1>( b );
                 } );
      if( fromRows.size() != fromCols.size() ||
          static_cast<int>( fromRows.size() ) != nnz )
         return fail( "entry counts differ" );
      for( std::size_t k = 0; k < fromRows.size(); ++k )
         if( fromRows[k] != fromCols[k] )
            return fail( "views differ at triple " + std::to_string( k ) );
      return true;
   }

 private:
   using Line = std::vector<Entry>;

   static typename Line::const_iterator
   lowerBound( const Line& line, int index )
   {
      return std::lower_bound(
          line.begin(), line.end(), index,
          []( const Entry& e, int idx ) { return e.index < idx; } );
   }

   static bool
   upsert( Line& line, int index, const REAL& value )
   {
      auto it = std::lower_bound(
          line.begin(), line.end(), index,
          []( const Entry& e, int idx ) { return e.index < idx; } );
      if( it != line.end() && it->index == index )
      {
         it->value = value;
         return false;
      }
      line.insert( it, Entry{ index, value } );
      return true;
   }

   static bool
   erase( Line& line, int index )
   {
      auto it = std::lower_bound(
          line.begin(), line.end(), index,
          []( const Entry& e, int idx ) { return e.index < idx; } );
      if( it == line.end() || it->index != index )
         return false;
      line.erase( it );
      return true;
   }

   std::vector<Line> rows;
   std::vector<Line> cols;
   int nnz = 0;
};

} // namespace parapre

#endif
