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
#ifndef PARAPRE_TESTS_ORACLE_HPP_
#define PARAPRE_TESTS_ORACLE_HPP_

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "parapre/core/Problem.hpp"

namespace parapre::test
{

/// Exhaustive reference solver for tiny problems, independent of the
/// library's numerics helpers: integral columns are enumerated, the
/// continuous part is solved by enumerating the vertices of its polytope.
/// Infinite continuous bounds are replaced by a box; an optimum on the box
/// is reported as unbounded.

enum class OracleStatus
{
   kOptimal,
   kInfeasible,
   kUnbounded,
};

template <typename REAL>
struct OracleResult
{
   OracleStatus status = OracleStatus::kInfeasible;
   REAL objective{ 0 };
   /// indexed like the problem's columns; inactive columns are zero
   std::vector<REAL> x;
};

template <typename REAL>
REAL
absValue( const REAL& v )
{
   return v < 0 ? REAL( -v ) : v;
}

/// solves the square system M y = b; nullopt if singular
template <typename REAL>
std::optional<std::vector<REAL>>
solveSquare( std::vector<std::vector<REAL>> M, std::vector<REAL> b, const REAL& pivotTol )
{
   const std::size_t n = b.size();
   for( std::size_t c = 0; c < n; ++c )
   {
      std::size_t best = c;
      for( std::size_t r = c + 1; r < n; ++r )
         if( absValue( M[r][c] ) > absValue( M[best][c] ) )
            best = r;
      if( absValue( M[best][c] ) <= pivotTol )
         return std::nullopt;
      std::swap( M[c], M[best] );
      std::swap( b[c], b[best] );
      for( std::size_t r = 0; r < n; ++r )
      {
         if( r == c || M[r][c] == 0 )
            continue;
         const REAL f = M[r][c] / M[c][c];
         for( std::size_t k = c; k < n; ++k )
            M[r][k] -= f * M[c][k];
         b[r] -= f * b[c];
      }
   }
   std::vector<REAL> y( n );
   for( std::size_t c = 0; c < n; ++c )
      y[c] = b[c] / M[c][c];
   return y;
}

template <typename REAL>
class EnumerationOracle
{
 public:
   /// tol is the feasibility tolerance (0 for exact arithmetic)
   EnumerationOracle( const Problem<REAL>& problem, REAL tol, double box = 1e4 )
       : p( problem ), tol( std::move( tol ) ), box( box )
   {
      for( int j = 0; j < p.getNCols(); ++j )
      {
         if( !p.isColActive( j ) )
            continue;
         if( p.isIntegral( j ) )
         {
            if( !p.getLower( j ).isFinite() || !p.getUpper( j ).isFinite() )
               throw std::invalid_argument( "oracle needs finite integral domains" );
            ints.push_back( j );
         }
         else
            conts.push_back( j );
      }
      for( int i = 0; i < p.getNRows(); ++i )
         if( p.isRowActive( i ) )
            rows.push_back( i );
   }

   OracleResult<REAL>
   solve()
   {
      x.assign( p.getNCols(), REAL( 0 ) );
      result = OracleResult<REAL>();
      found = false;
      enumerate( 0 );
      return result;
   }

 private:
   void
   enumerate( std::size_t depth )
   {
      if( depth == ints.size() )
      {
         leaf();
         return;
      }
      const int j = ints[depth];
      const REAL lo = ceilOf( p.getLower( j ).value() );
      const REAL hi = floorOf( p.getUpper( j ).value() );
      for( REAL v = lo; v <= hi; v += 1 )
      {
         x[j] = v;
         enumerate( depth + 1 );
      }
      x[j] = 0;
   }

   static REAL
   floorOf( const REAL& v )
   {
      return NumTraits<REAL>::floor( v );
   }

   static REAL
   ceilOf( const REAL& v )
   {
      return NumTraits<REAL>::ceil( v );
   }

   REAL
   objectiveOf( const std::vector<REAL>& point ) const
   {
      REAL obj = p.getObjOffset();
      for( int j = 0; j < p.getNCols(); ++j )
         if( p.isColActive( j ) )
            obj += p.getObj( j ) * point[j];
      return obj;
   }

   bool
   rowsHold( const std::vector<REAL>& point ) const
   {
      for( int i : rows )
      {
         REAL act = 0;
         p.forEachInRow( i, [&]( int j, const REAL& a ) { act += a * point[j]; } );
         if( p.getLhs( i ).isFinite() && act < p.getLhs( i ).value() - tol )
            return false;
         if( p.getRhs( i ).isFinite() && act > p.getRhs( i ).value() + tol )
            return false;
      }
      return true;
   }

   void
   consider( const std::vector<REAL>& point, bool onBox )
   {
      const REAL obj = objectiveOf( point );
      if( found && ( obj > bestObj || ( obj == bestObj && ( onBox || !bestOnBox ) ) ) )
         return;
      found = true;
      bestObj = obj;
      bestOnBox = onBox;
      result.objective = obj;
      result.x = point;
      result.status = onBox ? OracleStatus::kUnbounded : OracleStatus::kOptimal;
   }

   void
   leaf()
   {
      if( conts.empty() )
      {
         if( rowsHold( x ) )
            consider( x, false );
         return;
      }
      // hyperplanes over the continuous columns: a^T y = b
      struct Plane
      {
         std::vector<REAL> a;
         REAL b;
         bool box;
      };
      const std::size_t n = conts.size();
      std::vector<Plane> planes;
      for( std::size_t k = 0; k < n; ++k )
      {
         const int j = conts[k];
         std::vector<REAL> e( n, REAL( 0 ) );
         e[k] = 1;
         const auto& l = p.getLower( j );
         const auto& u = p.getUpper( j );
         planes.push_back( { e, l.isFinite() ? l.value() : REAL( -box ), !l.isFinite() } );
         planes.push_back( { e, u.isFinite() ? u.value() : REAL( box ), !u.isFinite() } );
      }
      for( int i : rows )
      {
         std::vector<REAL> a( n, REAL( 0 ) );
         REAL fixedPart = 0;
         bool any = false;
         p.forEachInRow( i, [&]( int j, const REAL& v ) {
            for( std::size_t k = 0; k < n; ++k )
               if( conts[k] == j )
               {
                  a[k] = v;
                  any = true;
                  return;
               }
            fixedPart += v * x[j];
         } );
         if( !any )
            continue;
         if( p.getLhs( i ).isFinite() )
            planes.push_back( { a, REAL( p.getLhs( i ).value() - fixedPart ), false } );
         if( p.getRhs( i ).isFinite() )
            planes.push_back( { a, REAL( p.getRhs( i ).value() - fixedPart ), false } );
      }

      std::vector<std::size_t> pick( n );
      std::function<void( std::size_t, std::size_t )> choose = [&]( std::size_t pos,
                                                                    std::size_t start ) {
         if( pos == n )
         {
            std::vector<std::vector<REAL>> M;
            std::vector<REAL> b;
            bool onBox = false;
            for( std::size_t t : pick )
            {
               M.push_back( planes[t].a );
               b.push_back( planes[t].b );
            }
            auto y = solveSquare( M, b, NumTraits<REAL>::exact ? REAL( 0 ) : REAL( 1e-12 ) );
            if( !y )
               return;
            std::vector<REAL> point = x;
            for( std::size_t k = 0; k < n; ++k )
            {
               const int j = conts[k];
               const REAL& v = ( *y )[k];
               const auto& l = p.getLower( j );
               const auto& u = p.getUpper( j );
               const REAL lo = l.isFinite() ? l.value() : REAL( -box );
               const REAL hi = u.isFinite() ? u.value() : REAL( box );
               if( v < lo - tol || v > hi + tol )
                  return;
               if( ( !l.isFinite() && v <= lo + tol ) || ( !u.isFinite() && v >= hi - tol ) )
                  onBox = true;
               point[j] = v;
            }
            if( rowsHold( point ) )
               consider( point, onBox );
            return;
         }
         for( std::size_t t = start; t < planes.size(); ++t )
         {
            pick[pos] = t;
            choose( pos + 1, t + 1 );
         }
      };
      choose( 0, 0 );
   }

   const Problem<REAL>& p;
   REAL tol;
   double box;
   std::vector<int> ints;
   std::vector<int> conts;
   std::vector<int> rows;
   std::vector<REAL> x;
   OracleResult<REAL> result;
   bool found = false;
   bool bestOnBox = false;
   REAL bestObj{ 0 };
};

template <typename REAL>
OracleResult<REAL>
solveByEnumeration( const Problem<REAL>& problem, REAL tol )
{
   EnumerationOracle<REAL> oracle( problem, std::move( tol ) );
   return oracle.solve();
}

/// bounds, integrality and rows of all columns/rows, active or not
template <typename REAL>
bool
isFeasibleFor( const Problem<REAL>& p, const std::vector<REAL>& x, const REAL& tol,
               std::string* why = nullptr )
{
   auto fail = [&]( const std::string& w ) {
      if( why != nullptr )
         *why = w;
      return false;
   };
   if( x.size() != static_cast<std::size_t>( p.getNCols() ) )
      return fail( "wrong dimension" );
   for( int j = 0; j < p.getNCols(); ++j )
   {
      if( p.getLower( j ).isFinite() && x[j] < p.getLower( j ).value() - tol )
         return fail( "lower bound of " + p.getColName( j ) );
      if( p.getUpper( j ).isFinite() && x[j] > p.getUpper( j ).value() + tol )
         return fail( "upper bound of " + p.getColName( j ) );
      if( p.isIntegral( j ) &&
          absValue( REAL( x[j] - NumTraits<REAL>::floor( REAL( x[j] + REAL( 1 ) / 2 ) ) ) ) > tol )
         return fail( "integrality of " + p.getColName( j ) );
   }
   for( int i = 0; i < p.getNRows(); ++i )
   {
      REAL act = 0;
      for( const auto& e : p.getMatrix().getRow( i ) )
         act += e.value * x[e.index];
      if( p.getLhs( i ).isFinite() && act < p.getLhs( i ).value() - tol )
         return fail( "lhs of " + p.getRowName( i ) );
      if( p.getRhs( i ).isFinite() && act > p.getRhs( i ).value() + tol )
         return fail( "rhs of " + p.getRowName( i ) );
   }
   return true;
}

} // namespace parapre::test

#endif
