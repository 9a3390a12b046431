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
#ifndef PARAPRE_CORE_NUM_HPP_
#define PARAPRE_CORE_NUM_HPP_

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/gmp.hpp>

namespace parapre
{

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

enum class NumericMode : std::uint8_t
{
   kFloat64 = 0,
   kRational = 1,
};

/// Per-scalar helpers that differ between the floating point and the exact
/// representation. Everything else in the library is written against these.
template <typename REAL>
struct NumTraits;

template <>
struct NumTraits<double>
{
   static constexpr NumericMode mode = NumericMode::kFloat64;
   static constexpr bool exact = false;

   static double
   floor( double x )
   {
      return std::floor( x );
   }

   static double
   ceil( double x )
   {
      return std::ceil( x );
   }

   static double
   abs( double x )
   {
      return std::fabs( x );
   }

   static double
   toDouble( double x )
   {
      return x;
   }

   static double
   fromDouble( double x )
   {
      return x;
   }

   static double
   parse( std::string_view token );

   /// shortest text that reads back to the same double
   static std::string
   toString( double x );
};

template <>
struct NumTraits<Rational>
{
   static constexpr NumericMode mode = NumericMode::kRational;
   static constexpr bool exact = true;

   static Rational
   floor( const Rational& x )
   {
      const BigInt num = boost::multiprecision::numerator( x );
      const BigInt den = boost::multiprecision::denominator( x );
      BigInt q = num / den;
      if( q * den != num && num < 0 )
         q -= 1;
      return Rational( q );
   }

   static Rational
   ceil( const Rational& x )
   {
      return -floor( -x );
   }

   static Rational
   abs( const Rational& x )
   {
      return x < 0 ? Rational( -x ) : x;
   }

   static double
   toDouble( const Rational& x )
   {
      return x.convert_to<double>();
   }

   /// exact binary value of the double
   static Rational
   fromDouble( double x )
   {
      return Rational( x );
   }

   /// accepts decimal literals with exponent and "p/q" fractions
   static Rational
   parse( std::string_view token );

   /// terminating decimal when the denominator is 2^a 5^b, otherwise "p/q"
   static std::string
   toString( const Rational& x );
};

template <typename REAL>
REAL
parseNumber( std::string_view token )
{
   return NumTraits<REAL>::parse( token );
}

template <typename REAL>
std::string
numberToString( const REAL& x )
{
   return NumTraits<REAL>::toString( x );
}

/// Tolerances shared by all comparisons of one presolve run.
///
/// In rational mode epsilon and feastol are zero, so every predicate below
/// collapses to the exact comparison.
template <typename REAL>
class Num
{
 public:
   Num()
   {
      if constexpr( NumTraits<REAL>::exact )
      {
         epsilon = 0;
         feastol = 0;
      }
      else
      {
         epsilon = REAL( 1e-9 );
         feastol = REAL( 1e-6 );
      }
      hugeval = REAL( 1e8 );
   }

   Num( const REAL& eps, const REAL& ftol, const REAL& huge )
       : epsilon( eps ), feastol( ftol ), hugeval( huge )
   {
      if constexpr( NumTraits<REAL>::exact )
      {
         epsilon = 0;
         feastol = 0;
      }
      if( epsilon < 0 || feastol < 0 || epsilon > feastol )
         throw std::invalid_argument(
             "tolerances must satisfy 0 <= epsilon <= feastol" );
      if( !( hugeval > 0 ) )
         throw std::invalid_argument( "hugeval must be positive" );
   }

   static constexpr NumericMode
   mode()
   {
      return NumTraits<REAL>::mode;
   }

   const REAL&
   getEpsilon() const
   {
      return epsilon;
   }

   const REAL&
   getFeasTol() const
   {
      return feastol;
   }

   const REAL&
   getHugeVal() const
   {
      return hugeval;
   }

   static REAL
   abs( const REAL& x )
   {
      return NumTraits<REAL>::abs( x );
   }

   static REAL
   floor( const REAL& x )
   {
      return NumTraits<REAL>::floor( x );
   }

   static REAL
   ceil( const REAL& x )
   {
      return NumTraits<REAL>::ceil( x );
   }

   static REAL
   round( const REAL& x )
   {
      return floor( x + REAL( 1 ) / 2 );
   }

   static REAL
   max( const REAL& a, const REAL& b )
   {
      return a < b ? b : a;
   }

   static REAL
   min( const REAL& a, const REAL& b )
   {
      return a < b ? a : b;
   }

   bool
   isEq( const REAL& a, const REAL& b ) const
   {
      if constexpr( NumTraits<REAL>::exact )
         return a == b;
      else
         return abs( a - b ) <= epsilon * max( REAL( 1 ), max( abs( a ), abs( b ) ) );
   }

   bool
   isZero( const REAL& a ) const
   {
      return abs( a ) <= epsilon;
   }

   bool
   isGT( const REAL& a, const REAL& b ) const
   {
      return a > b && !isEq( a, b );
   }

   bool
   isGE( const REAL& a, const REAL& b ) const
   {
      return a >= b || isEq( a, b );
   }

   bool
   isLT( const REAL& a, const REAL& b ) const
   {
      return isGT( b, a );
   }

   bool
   isLE( const REAL& a, const REAL& b ) const
   {
      return isGE( b, a );
   }

   bool
   isFeasEq( const REAL& a, const REAL& b ) const
   {
      return abs( a - b ) <= feastol;
   }

   bool
   isFeasGT( const REAL& a, const REAL& b ) const
   {
      return a - b > feastol;
   }

   bool
   isFeasGE( const REAL& a, const REAL& b ) const
   {
      return a - b >= -feastol;
   }

   bool
   isFeasLT( const REAL& a, const REAL& b ) const
   {
      return isFeasGT( b, a );
   }

   bool
   isFeasLE( const REAL& a, const REAL& b ) const
   {
      return isFeasGE( b, a );
   }

   bool
   isIntegral( const REAL& v ) const
   {
      return abs( v - round( v ) ) <= feastol;
   }

   REAL
   feasFloor( const REAL& v ) const
   {
      return floor( v + feastol );
   }

   REAL
   feasCeil( const REAL& v ) const
   {
      return ceil( v - feastol );
   }

   REAL
   epsFloor( const REAL& v ) const
   {
      return floor( v + epsilon );
   }

   REAL
   epsCeil( const REAL& v ) const
   {
      return ceil( v - epsilon );
   }

   bool
   isHuge( const REAL& v ) const
   {
      return abs( v ) >= hugeval;
   }

 private:
   REAL epsilon;
   REAL feastol;
   REAL hugeval;
};

/// |a - b| <= epsilon * max(1, |a|, |b|); exact equality for rationals
template <typename REAL>
bool
approxEq( const REAL& a, const REAL& b, const Num<REAL>& num )
{
   return num.isEq( a, b );
}

template <typename REAL>
bool
isIntegral( const REAL& v, const Num<REAL>& num )
{
   return num.isIntegral( v );
}

/// A number that may be +inf or -inf. Used for bounds, sides and
/// activities. Adding opposite infinities is a logic error.
template <typename REAL>
class Extended
{
 public:
   Extended() = default;

   Extended( REAL v ) : val( std::move( v ) ) {}

   template <typename T>
      requires std::is_arithmetic_v<T>
   Extended( T v ) : val( REAL( v ) )
   {
   }

   static Extended
   posInf()
   {
      Extended e;
      e.inf = 1;
      return e;
   }

   static Extended
   negInf()
   {
      Extended e;
      e.inf = -1;
      return e;
   }

   bool
   isFinite() const
   {
      return inf == 0;
   }

   bool
   isInfinite() const
   {
      return inf != 0;
   }

   bool
   isPosInf() const
   {
      return inf > 0;
   }

   bool
   isNegInf() const
   {
      return inf < 0;
   }

   int
   infSign() const
   {
      return inf;
   }

   const REAL&
   value() const
   {
      assert( isFinite() );
      return val;
   }

   Extended
   operator-() const
   {
      Extended e;
      e.inf = static_cast<std::int8_t>( -inf );
      if( inf == 0 )
         e.val = -val;
      return e;
   }

   friend Extended
   operator+( const Extended& a, const Extended& b )
   {
      if( a.inf != 0 && b.inf != 0 && a.inf != b.inf )
         throw std::domain_error( "inf + (-inf) is undefined" );
      if( a.inf != 0 )
         return a;
      if( b.inf != 0 )
         return b;
      return Extended( a.val + b.val );
   }

   friend Extended
   operator-( const Extended& a, const Extended& b )
   {
      return a + ( -b );
   }

   /// scaling by a finite factor; infinity times zero is zero
   friend Extended
   operator*( const Extended& a, const REAL& s )
   {
      if( a.inf == 0 )
         return Extended( a.val * s );
      if( s == 0 )
         return Extended( REAL( 0 ) );
      return s > 0 ? a : -a;
   }

   friend Extended
   operator*( const REAL& s, const Extended& a )
   {
      return a * s;
   }

   friend Extended
   operator/( const Extended& a, const REAL& s )
   {
      assert( s != 0 );
      if( a.inf == 0 )
         return Extended( a.val / s );
      return s > 0 ? a : -a;
   }

   friend bool
   operator==( const Extended& a, const Extended& b )
   {
      if( a.inf != b.inf )
         return false;
      return a.inf != 0 || a.val == b.val;
   }

   friend bool
   operator<( const Extended& a, const Extended& b )
   {
      if( a.inf != b.inf )
         return a.inf < b.inf;
      if( a.inf != 0 )
         return false;
      return a.val < b.val;
   }

   friend bool
   operator<=( const Extended& a, const Extended& b )
   {
      return a < b || a == b;
   }

   friend bool
   operator>( const Extended& a, const Extended& b )
   {
      return b < a;
   }

   friend bool
   operator>=( const Extended& a, const Extended& b )
   {
      return b <= a;
   }

 private:
   REAL val{ 0 };
   std::int8_t inf = 0;
};

template <typename REAL>
std::string
extendedToString( const Extended<REAL>& v )
{
   if( v.isPosInf() )
      return "inf";
   if( v.isNegInf() )
      return "-inf";
   return numberToString( v.value() );
}

} // namespace parapre

#endif
