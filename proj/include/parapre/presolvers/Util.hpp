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
#ifndef PARAPRE_PRESOLVERS_UTIL_HPP_
#define PARAPRE_PRESOLVERS_UTIL_HPP_

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "parapre/core/Problem.hpp"

namespace parapre
{

/// gcd of two integral values; exact for rationals and for doubles below 2^53
template <typename REAL>
REAL
integralGcd( REAL a, REAL b )
{
   a = NumTraits<REAL>::abs( a );
   b = NumTraits<REAL>::abs( b );
   while( b != 0 )
   {
      REAL r = a - NumTraits<REAL>::floor( a / b ) * b;
      a = b;
      b = r;
   }
   return a;
}

/// A row seen as  sum a_k x_k <= rhs  (a >= row is negated). Only rows with
/// exactly one finite side qualify.
template <typename REAL>
struct LeRow
{
   int row;
   /// +1 if the stored row already is <=, -1 if it was a >= row
   int sign;
   REAL rhs;
   std::vector<MatrixEntry<REAL>> entries;
   /// maximal activity of the normalized row, if finite
   std::optional<REAL> maxAct;
   std::optional<REAL> minAct;
};

template <typename REAL>
std::optional<LeRow<REAL>>
oneSidedRow( const Problem<REAL>& problem, int row )
{
   const Extended<REAL>& lhs = problem.getLhs( row );
   const Extended<REAL>& rhs = problem.getRhs( row );
   if( lhs.isFinite() == rhs.isFinite() )
      return std::nullopt;
   LeRow<REAL> r;
   r.row = row;
   r.sign = rhs.isFinite() ? 1 : -1;
   r.rhs = rhs.isFinite() ? rhs.value() : REAL( -lhs.value() );
   r.entries = problem.activeRow( row );
   const RowActivity<REAL>& act = problem.getActivity( row );
   if( r.sign > 0 )
   {
      if( act.ninfmax == 0 )
         r.maxAct = act.max;
      if( act.ninfmin == 0 )
         r.minAct = act.min;
   }
   else
   {
      for( auto& e : r.entries )
         e.value = -e.value;
      if( act.ninfmin == 0 )
         r.maxAct = REAL( -act.min );
      if( act.ninfmax == 0 )
         r.minAct = REAL( -act.max );
   }
   return r;
}

/// true if every active column of the row is integral with an integral
/// coefficient
template <typename REAL>
bool
isIntegralRow( const Problem<REAL>& problem,
               const std::vector<MatrixEntry<REAL>>& entries )
{
   const Num<REAL>& num = problem.getNum();
   for( const auto& e : entries )
      if( !problem.isIntegral( e.index ) || !num.isIntegral( e.value ) )
         return false;
   return true;
}

/// relative improvement test for continuous bound changes
template <typename REAL>
bool
isSignificantBoundChange( const REAL& newBound, const Extended<REAL>& oldBound,
                          bool tighterIsLarger, const Num<REAL>& num )
{
   if( num.isHuge( newBound ) )
      return false;
   if( oldBound.isInfinite() )
      return true;
   const REAL diff = tighterIsLarger ? REAL( newBound - oldBound.value() )
                                     : REAL( oldBound.value() - newBound );
   const REAL scale = Num<REAL>::max( REAL( 1 ), Num<REAL>::abs( oldBound.value() ) );
   return diff > REAL( 1 ) / 1000 * scale;
}

/// bound derived for x_j from row i (a_ij = coef): returns the implied
/// lower and upper bound, each possibly infinite
template <typename REAL>
std::pair<Extended<REAL>, Extended<REAL>>
impliedBounds( const Problem<REAL>& problem, int row, int col, const REAL& coef )
{
   const RowActivity<REAL>& act = problem.getActivity( row );
   const Extended<REAL>& l = problem.getLower( col );
   const Extended<REAL>& u = problem.getUpper( col );
   const Extended<REAL>& lhs = problem.getLhs( row );
   const Extended<REAL>& rhs = problem.getRhs( row );
   Extended<REAL> lo = Extended<REAL>::negInf();
   Extended<REAL> hi = Extended<REAL>::posInf();
   // a x_j <= U - minRest  and  a x_j >= L - maxRest
   if( rhs.isFinite() )
   {
      const Extended<REAL> minRest = residualMinActivity( act, coef, l, u );
      if( minRest.isFinite() )
      {
         const REAL b = ( rhs.value() - minRest.value() ) / coef;
         if( coef > 0 )
            hi = b;
         else
            lo = b;
      }
   }
   if( lhs.isFinite() )
   {
      const Extended<REAL> maxRest = residualMaxActivity( act, coef, l, u );
      if( maxRest.isFinite() )
      {
         const REAL b = ( lhs.value() - maxRest.value() ) / coef;
         if( coef > 0 )
            lo = Num<REAL>::max( lo.isFinite() ? lo.value() : b, b );
         else
            hi = Num<REAL>::min( hi.isFinite() ? hi.value() : b, b );
      }
   }
   return { lo, hi };
}

/// hash of a value rounded to about six significant digits, so that values
/// equal within tolerance usually share a bucket; candidates are verified
/// with exact or tolerance comparisons afterwards
template <typename REAL>
std::size_t
roundedHash( const REAL& v )
{
   const double d = NumTraits<REAL>::toDouble( v );
   if( d == 0 )
      return 0;
   int exp = 0;
   const double mant = std::frexp( d, &exp );
   const auto q = static_cast<std::int64_t>( std::llround( mant * 1e6 ) );
   return std::hash<std::int64_t>()( q ) * 31 + std::hash<int>()( exp );
}

inline void
hashCombine( std::size_t& seed, std::size_t h )
{
   seed ^= h + 0x9e3779b97f4a7c15ULL + ( seed << 6 ) + ( seed >> 2 );
}

} // namespace parapre

#endif
