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
#include "parapre/core/Problem.hpp"

#include <functional>

#include <fmt/format.h>

namespace parapre
{

template <typename REAL>
int
Problem<REAL>::addCol( std::string colName, const REAL& cost, Extended<REAL> lb,
                       Extended<REAL> ub, bool integral )
{
   const int col = matrix.addCol();
   colNames.push_back( colName.empty() ? fmt::format( "x{}", col )
                                       : std::move( colName ) );
   obj.push_back( cost );
   lower.push_back( std::move( lb ) );
   upper.push_back( std::move( ub ) );
   Flags<ColFlag> f;
   if( integral )
      f.set( ColFlag::kIntegral );
   colFlags.push_back( f );
   return col;
}

template <typename REAL>
int
Problem<REAL>::addRow( std::string rowName, Extended<REAL> l, Extended<REAL> u )
{
   const int row = matrix.addRow();
   rowNames.push_back( rowName.empty() ? fmt::format( "c{}", row )
                                       : std::move( rowName ) );
   lhs.push_back( std::move( l ) );
   rhs.push_back( std::move( u ) );
   rowFlags.emplace_back();
   return row;
}

template <typename REAL>
void
Problem<REAL>::addEntry( int row, int col, const REAL& value )
{
   if( row < 0 || row >= getNRows() || col < 0 || col >= getNCols() )
      throw std::out_of_range( "matrix entry index out of range" );
   if( value == 0 )
      return;
   if( matrix.find( row, col ) != nullptr )
      throw std::invalid_argument(
          fmt::format( "duplicate entry for row {} column {}", rowNames[row],
                       colNames[col] ) );
   matrix.setEntry( row, col, value );
}

template <typename REAL>
void
Problem<REAL>::finalize()
{
   const int nrows = getNRows();
   const int ncols = getNCols();
   for( int j = 0; j < ncols; ++j )
   {
      if( lower[j].isPosInf() || upper[j].isNegInf() )
         throw std::invalid_argument( "column " + colNames[j] +
                                      " has an infinite bound of wrong sign" );
      if( isIntegral( j ) )
      {
         if( lower[j].isFinite() )
            lower[j] = num.feasCeil( lower[j].value() );
         if( upper[j].isFinite() )
            upper[j] = num.feasFloor( upper[j].value() );
      }
   }
   for( int i = 0; i < nrows; ++i )
   {
      if( lhs[i].isPosInf() || rhs[i].isNegInf() )
         throw std::invalid_argument( "row " + rowNames[i] +
                                      " has an infinite side of wrong sign" );
      updateRowFlags( i );
   }

   rowSize.assign( nrows, 0 );
   colSize.assign( ncols, 0 );
   upLocks.assign( ncols, 0 );
   downLocks.assign( ncols, 0 );
   activeNnz = 0;
   for( int i = 0; i < nrows; ++i )
   {
      if( !isRowActive( i ) )
         continue;
      for( const Entry& e : matrix.getRow( i ) )
      {
         if( !isColActive( e.index ) )
            continue;
         ++rowSize[i];
         ++colSize[e.index];
         ++activeNnz;
         addLocks( i, e.index, e.value, 1 );
      }
   }
   recomputeActivities();
}

template <typename REAL>
int
Problem<REAL>::getNActiveRows() const
{
   int n = 0;
   for( int i = 0; i < getNRows(); ++i )
      n += isRowActive( i ) ? 1 : 0;
   return n;
}

template <typename REAL>
int
Problem<REAL>::getNActiveCols() const
{
   int n = 0;
   for( int j = 0; j < getNCols(); ++j )
      n += isColActive( j ) ? 1 : 0;
   return n;
}

template <typename REAL>
std::vector<MatrixEntry<REAL>>
Problem<REAL>::activeRow( int row ) const
{
   std::vector<Entry> out;
   out.reserve( rowSize[row] );
   forEachInRow( row, [&]( int col, const REAL& a ) {
      out.push_back( Entry{ col, a } );
   } );
   return out;
}

template <typename REAL>
std::vector<MatrixEntry<REAL>>
Problem<REAL>::activeCol( int col ) const
{
   std::vector<Entry> out;
   out.reserve( colSize[col] );
   forEachInCol( col, [&]( int row, const REAL& a ) {
      out.push_back( Entry{ row, a } );
   } );
   return out;
}

template <typename REAL>
double
Problem<REAL>::deadFraction() const
{
   const int stored = matrix.getStoredNnz();
   if( stored == 0 )
      return 0.0;
   return static_cast<double>( stored - activeNnz ) / stored;
}

template <typename REAL>
void
Problem<REAL>::updateRowFlags( int row )
{
   Flags<RowFlag>& f = rowFlags[row];
   const bool redundant = f.test( RowFlag::kRedundant );
   f = Flags<RowFlag>();
   if( redundant )
      f.set( RowFlag::kRedundant );
   if( lhs[row].isInfinite() )
      f.set( RowFlag::kLhsInf );
   if( rhs[row].isInfinite() )
      f.set( RowFlag::kRhsInf );
   if( lhs[row].isFinite() && lhs[row] == rhs[row] )
      f.set( RowFlag::kEquation );
}

template <typename REAL>
void
Problem<REAL>::addLocks( int row, int col, const REAL& coef, int sign )
{
   // a > 0: finite U blocks increasing, finite L blocks decreasing
   const bool finiteU = rhs[row].isFinite();
   const bool finiteL = lhs[row].isFinite();
   if( coef > 0 )
   {
      upLocks[col] += finiteU ? sign : 0;
      downLocks[col] += finiteL ? sign : 0;
   }
   else
   {
      downLocks[col] += finiteU ? sign : 0;
      upLocks[col] += finiteL ? sign : 0;
   }
}

template <typename REAL>
void
Problem<REAL>::addEntryToCaches( int row, int col, const REAL& coef, int sign )
{
   applyEntryToActivity( activities[row], coef, lower[col], upper[col], sign );
   addLocks( row, col, coef, sign );
   rowSize[row] += sign;
   colSize[col] += sign;
   activeNnz += sign;
}

template <typename REAL>
RowActivity<REAL>
Problem<REAL>::freshActivity( int row ) const
{
   return computeRowActivity<REAL>(
       matrix.getRow( row ), lower, upper,
       [this]( int col ) { return isColActive( col ); } );
}

template <typename REAL>
ChangeResult
Problem<REAL>::fixColumn( int col, const REAL& value )
{
   assert( isColActive( col ) );
   ChangeResult result = ChangeResult::kOk;
   if( ( lower[col].isFinite() && num.isFeasLT( value, lower[col].value() ) ) ||
       ( upper[col].isFinite() && num.isFeasGT( value, upper[col].value() ) ) ||
       ( isIntegral( col ) && !num.isIntegral( value ) ) )
      result = ChangeResult::kInfeasible;

   for( const Entry& e : matrix.getCol( col ) )
   {
      const int row = e.index;
      if( !isRowActive( row ) )
         continue;
      addEntryToCaches( row, col, e.value, -1 );
      // sides change finiteness never, so locks of other columns are intact
      const REAL shift = e.value * value;
      if( lhs[row].isFinite() )
         lhs[row] = Extended<REAL>( lhs[row].value() - shift );
      if( rhs[row].isFinite() )
         rhs[row] = Extended<REAL>( rhs[row].value() - shift );
      updateRowFlags( row );
   }
   objOffset += obj[col] * value;
   obj[col] = 0;
   lower[col] = value;
   upper[col] = value;
   colFlags[col].set( ColFlag::kFixed );
   colFlags[col].set( ColFlag::kInactive );
   upLocks[col] = 0;
   downLocks[col] = 0;
   return result;
}

template <typename REAL>
ChangeResult
Problem<REAL>::setLower( int col, Extended<REAL> value )
{
   if( value.isPosInf() )
      return ChangeResult::kInfeasible;
   if( isIntegral( col ) && value.isFinite() )
      value = num.feasCeil( value.value() );
   ChangeResult result = ChangeResult::kOk;
   if( value.isFinite() && upper[col].isFinite() &&
       value.value() > upper[col].value() )
   {
      if( num.isFeasGT( value.value(), upper[col].value() ) )
         result = ChangeResult::kInfeasible;
      else
         value = upper[col];
   }
   if( value == lower[col] )
      return result;
   if( isColActive( col ) )
   {
      for( const Entry& e : matrix.getCol( col ) )
         if( isRowActive( e.index ) )
            updateRowActivity( activities[e.index], e.value, BoundSide::kLower,
                               lower[col], value );
   }
   lower[col] = std::move( value );
   return result;
}

template <typename REAL>
ChangeResult
Problem<REAL>::setUpper( int col, Extended<REAL> value )
{
   if( value.isNegInf() )
      return ChangeResult::kInfeasible;
   if( isIntegral( col ) && value.isFinite() )
      value = num.feasFloor( value.value() );
   ChangeResult result = ChangeResult::kOk;
   if( value.isFinite() && lower[col].isFinite() &&
       value.value() < lower[col].value() )
   {
      if( num.isFeasLT( value.value(), lower[col].value() ) )
         result = ChangeResult::kInfeasible;
      else
         value = lower[col];
   }
   if( value == upper[col] )
      return result;
   if( isColActive( col ) )
   {
      for( const Entry& e : matrix.getCol( col ) )
         if( isRowActive( e.index ) )
            updateRowActivity( activities[e.index], e.value, BoundSide::kUpper,
                               upper[col], value );
   }
   upper[col] = std::move( value );
   return result;
}

template <typename REAL>
ChangeResult
Problem<REAL>::setLhs( int row, Extended<REAL> value )
{
   if( value.isPosInf() )
      return ChangeResult::kInfeasible;
   ChangeResult result = ChangeResult::kOk;
   if( value.isFinite() && rhs[row].isFinite() &&
       value.value() > rhs[row].value() )
   {
      if( num.isFeasGT( value.value(), rhs[row].value() ) )
         result = ChangeResult::kInfeasible;
      else
         value = rhs[row];
   }
   const bool active = isRowActive( row );
   const bool finitenessChanges = value.isFinite() != lhs[row].isFinite();
   if( active && finitenessChanges )
      forEachInRow( row, [&]( int col, const REAL& a ) {
         addLocks( row, col, a, -1 );
      } );
   lhs[row] = std::move( value );
   if( active && finitenessChanges )
      forEachInRow( row,
                    [&]( int col, const REAL& a ) { addLocks( row, col, a, 1 ); } );
   updateRowFlags( row );
   return result;
}

template <typename REAL>
ChangeResult
Problem<REAL>::setRhs( int row, Extended<REAL> value )
{
   if( value.isNegInf() )
      return ChangeResult::kInfeasible;
   ChangeResult result = ChangeResult::kOk;
   if( value.isFinite() && lhs[row].isFinite() &&
       value.value() < lhs[row].value() )
   {
      if( num.isFeasLT( value.value(), lhs[row].value() ) )
         result = ChangeResult::kInfeasible;
      else
         value = lhs[row];
   }
   const bool active = isRowActive( row );
   const bool finitenessChanges = value.isFinite() != rhs[row].isFinite();
   if( active && finitenessChanges )
      forEachInRow( row, [&]( int col, const REAL& a ) {
         addLocks( row, col, a, -1 );
      } );
   rhs[row] = std::move( value );
   if( active && finitenessChanges )
      forEachInRow( row,
                    [&]( int col, const REAL& a ) { addLocks( row, col, a, 1 ); } );
   updateRowFlags( row );
   return result;
}

template <typename REAL>
void
Problem<REAL>::setCoefficient( int row, int col, const REAL& value )
{
   const REAL newValue = num.isZero( value ) ? REAL( 0 ) : value;
   const bool live = isRowActive( row ) && isColActive( col );
   const REAL* old = matrix.find( row, col );
   if( old != nullptr && live )
      addEntryToCaches( row, col, *old, -1 );
   matrix.setEntry( row, col, newValue );
   if( newValue != 0 && live )
      addEntryToCaches( row, col, newValue, 1 );
}

template <typename REAL>
void
Problem<REAL>::markRowRedundant( int row )
{
   if( !isRowActive( row ) )
      return;
   forEachInRow( row, [&]( int col, const REAL& a ) {
      addLocks( row, col, a, -1 );
      --colSize[col];
      --activeNnz;
   } );
   rowSize[row] = 0;
   activities[row] = RowActivity<REAL>();
   rowFlags[row].set( RowFlag::kRedundant );
}

template <typename REAL>
void
Problem<REAL>::deactivateColumn( int col, ColFlag reason )
{
   if( !isColActive( col ) )
      return;
   forEachInCol( col, [&]( int row, const REAL& a ) {
      addEntryToCaches( row, col, a, -1 );
   } );
   colFlags[col].set( reason );
   colFlags[col].set( ColFlag::kInactive );
   upLocks[col] = 0;
   downLocks[col] = 0;
}

template <typename REAL>
void
Problem<REAL>::setIntegral( int col )
{
   colFlags[col].set( ColFlag::kIntegral );
   if( lower[col].isFinite() )
      setLower( col, lower[col] );
   if( upper[col].isFinite() )
      setUpper( col, upper[col] );
}

template <typename REAL>
void
Problem<REAL>::compress()
{
   matrix.compress( [this]( int row ) { return !isRowActive( row ); },
                    [this]( int col ) { return !isColActive( col ); } );
   recomputeActivities();
}

template <typename REAL>
void
Problem<REAL>::recomputeActivities()
{
   activities.assign( getNRows(), RowActivity<REAL>() );
   for( int i = 0; i < getNRows(); ++i )
      if( isRowActive( i ) )
         activities[i] = freshActivity( i );
}

template <typename REAL>
bool
Problem<REAL>::checkConsistency( std::string* why ) const
{
   auto fail = [&]( std::string msg ) {
      if( why )
         *why = std::move( msg );
      return false;
   };
   if( !matrix.checkConsistency( why ) )
      return false;

   std::vector<int> rs( getNRows(), 0 );
   std::vector<int> cs( getNCols(), 0 );
   std::vector<int> up( getNCols(), 0 );
   std::vector<int> down( getNCols(), 0 );
   int nnz = 0;
   for( int i = 0; i < getNRows(); ++i )
   {
      const bool eq = lhs[i].isFinite() && lhs[i] == rhs[i];
      if( eq != isEquation( i ) )
         return fail( fmt::format( "row {} equation flag stale", i ) );
      if( lhs[i].isInfinite() != rowFlags[i].test( RowFlag::kLhsInf ) ||
          rhs[i].isInfinite() != rowFlags[i].test( RowFlag::kRhsInf ) )
         return fail( fmt::format( "row {} side flags stale", i ) );
      if( !isRowActive( i ) )
         continue;
      for( const Entry& e : matrix.getRow( i ) )
      {
         if( !isColActive( e.index ) )
            continue;
         ++rs[i];
         ++cs[e.index];
         ++nnz;
         const bool finiteU = rhs[i].isFinite();
         const bool finiteL = lhs[i].isFinite();
         if( e.value > 0 )
         {
            up[e.index] += finiteU;
            down[e.index] += finiteL;
         }
         else
         {
            down[e.index] += finiteU;
            up[e.index] += finiteL;
         }
      }
      const RowActivity<REAL> fresh = freshActivity( i );
      const RowActivity<REAL>& cached = activities[i];
      if( fresh.ninfmin != cached.ninfmin || fresh.ninfmax != cached.ninfmax )
         return fail( fmt::format( "row {} infinity counters stale", i ) );
      if( !num.isEq( fresh.min, cached.min ) || !num.isEq( fresh.max, cached.max ) )
         return fail( fmt::format( "row {} activity stale", i ) );
   }
   if( nnz != activeNnz )
      return fail( "active nnz stale" );
   for( int i = 0; i < getNRows(); ++i )
      if( isRowActive( i ) && rs[i] != rowSize[i] )
         return fail( fmt::format( "row {} size stale", i ) );
   for( int j = 0; j < getNCols(); ++j )
   {
      if( !isColActive( j ) )
         continue;
      if( cs[j] != colSize[j] )
         return fail( fmt::format( "column {} size stale", j ) );
      if( up[j] != upLocks[j] || down[j] != downLocks[j] )
         return fail( fmt::format( "column {} locks stale", j ) );
   }
   return true;
}

template <typename REAL>
std::size_t
Problem<REAL>::fingerprint() const
{
   std::size_t h = 0;
   auto mix = [&h]( std::size_t v ) {
      h ^= v + 0x9e3779b97f4a7c15ULL + ( h << 6 ) + ( h >> 2 );
   };
   auto mixNum = [&]( const REAL& v ) {
      mix( std::hash<std::string>()( numberToString( v ) ) );
   };
   auto mixExt = [&]( const Extended<REAL>& v ) {
      mix( std::hash<std::string>()( extendedToString( v ) ) );
   };
   mixNum( objOffset );
   for( int j = 0; j < getNCols(); ++j )
   {
      mixNum( obj[j] );
      mixExt( lower[j] );
      mixExt( upper[j] );
      mix( colFlags[j].raw() );
      mix( static_cast<std::size_t>( colSize[j] ) );
      mix( static_cast<std::size_t>( upLocks[j] ) * 31 + downLocks[j] );
      for( const Entry& e : matrix.getCol( j ) )
      {
         mix( static_cast<std::size_t>( e.index ) );
         mixNum( e.value );
      }
   }
   for( int i = 0; i < getNRows(); ++i )
   {
      mixExt( lhs[i] );
      mixExt( rhs[i] );
      mix( rowFlags[i].raw() );
      mixNum( activities[i].min );
      mixNum( activities[i].max );
      mix( static_cast<std::size_t>( activities[i].ninfmin ) * 31 +
           activities[i].ninfmax );
   }
   return h;
}

template class Problem<double>;
template class Problem<Rational>;

} // namespace parapre
