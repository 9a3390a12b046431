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
#include "parapre/core/Num.hpp"

#include <charconv>
#include <cctype>
#include <system_error>

namespace parapre
{

namespace
{

[[noreturn]] void
badNumber( std::string_view token )
{
   throw std::invalid_argument( "malformed number '" + std::string( token ) +
                                "'" );
}

BigInt
parseInteger( std::string_view digits, std::string_view token )
{
   if( digits.empty() )
      badNumber( token );
   BigInt value = 0;
   for( char c : digits )
   {
      if( !std::isdigit( static_cast<unsigned char>( c ) ) )
         badNumber( token );
      value = value * 10 + ( c - '0' );
   }
   return value;
}

BigInt
pow10( long e )
{
   BigInt r = 1;
   BigInt base = 10;
   while( e > 0 )
   {
      if( e & 1 )
         r *= base;
      base *= base;
      e >>= 1;
   }
   return r;
}

Rational
parseDecimal( std::string_view token )
{
   std::string_view s = token;
   bool negative = false;
   if( !s.empty() && ( s.front() == '+' || s.front() == '-' ) )
   {
      negative = s.front() == '-';
      s.remove_prefix( 1 );
   }

   long exponent = 0;
   const auto epos = s.find_first_of( "eEdD" );
   if( epos != std::string_view::npos )
   {
      std::string_view e = s.substr( epos + 1 );
      bool eneg = false;
      if( !e.empty() && ( e.front() == '+' || e.front() == '-' ) )
      {
         eneg = e.front() == '-';
         e.remove_prefix( 1 );
      }
      if( e.empty() )
         badNumber( token );
      long parsed = 0;
      auto [ptr, ec] = std::from_chars( e.data(), e.data() + e.size(), parsed );
      if( ec != std::errc() || ptr != e.data() + e.size() )
         badNumber( token );
      exponent = eneg ? -parsed : parsed;
      s = s.substr( 0, epos );
   }

   std::string digits;
   long fracDigits = 0;
   bool seenPoint = false;
   for( char c : s )
   {
      if( c == '.' )
      {
         if( seenPoint )
            badNumber( token );
         seenPoint = true;
         continue;
      }
      if( !std::isdigit( static_cast<unsigned char>( c ) ) )
         badNumber( token );
      digits.push_back( c );
      if( seenPoint )
         ++fracDigits;
   }
   if( digits.empty() )
      badNumber( token );

   BigInt mantissa = parseInteger( digits, token );
   const long shift = exponent - fracDigits;
   Rational result;
   if( shift >= 0 )
      result = Rational( mantissa * pow10( shift ) );
   else
      result = Rational( mantissa, pow10( -shift ) );
   return negative ? Rational( -result ) : result;
}

} // namespace

double
NumTraits<double>::parse( std::string_view token )
{
   const auto slash = token.find( '/' );
   if( slash != std::string_view::npos )
      return parse( token.substr( 0, slash ) ) / parse( token.substr( slash + 1 ) );

   std::string_view s = token;
   if( !s.empty() && s.front() == '+' )
      s.remove_prefix( 1 );
   double value = 0;
   auto [ptr, ec] = std::from_chars( s.data(), s.data() + s.size(), value );
   if( ec != std::errc() || ptr != s.data() + s.size() || s.empty() )
   {
      // Fortran style exponent marker
      std::string copy( s );
      for( char& c : copy )
         if( c == 'd' || c == 'D' )
            c = 'e';
      auto [p2, ec2] =
          std::from_chars( copy.data(), copy.data() + copy.size(), value );
      if( ec2 != std::errc() || p2 != copy.data() + copy.size() || copy.empty() )
         badNumber( token );
   }
   return value;
}

std::string
NumTraits<double>::toString( double x )
{
   if( x == 0 )
      return "0";
   char buf[64];
   auto [ptr, ec] = std::to_chars( buf, buf + sizeof( buf ), x );
   assert( ec == std::errc() );
   return std::string( buf, ptr );
}

Rational
NumTraits<Rational>::parse( std::string_view token )
{
   const auto slash = token.find( '/' );
   if( slash != std::string_view::npos )
   {
      Rational num = parseDecimal( token.substr( 0, slash ) );
      Rational den = parseDecimal( token.substr( slash + 1 ) );
      if( den == 0 )
         badNumber( token );
      return num / den;
   }
   return parseDecimal( token );
}

std::string
NumTraits<Rational>::toString( const Rational& x )
{
   const BigInt num = boost::multiprecision::numerator( x );
   BigInt den = boost::multiprecision::denominator( x );
   if( den == 1 )
      return num.str();

   int twos = 0;
   int fives = 0;
   BigInt rest = den;
   while( rest % 2 == 0 )
   {
      rest /= 2;
      ++twos;
   }
   while( rest % 5 == 0 )
   {
      rest /= 5;
      ++fives;
   }
   if( rest != 1 )
      return num.str() + "/" + den.str();

   const int places = std::max( twos, fives );
   BigInt scaled = num * pow10( places ) / den;
   const bool negative = scaled < 0;
   if( negative )
      scaled = -scaled;
   std::string digits = scaled.str();
   if( static_cast<int>( digits.size() ) <= places )
      digits.insert( 0, places - digits.size() + 1, '0' );
   digits.insert( digits.size() - places, "." );
   return negative ? "-" + digits : digits;
}

} // namespace parapre
