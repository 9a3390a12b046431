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
#include <catch_amalgamated.hpp>

#include "parapre/core/Num.hpp"

using namespace parapre;

TEST_CASE( "float tolerances separate epsilon and feasibility comparisons", "[numerics]" )
{
   const Num<double> num( 1e-9, 1e-6, 1e8 );
   CHECK( num.isEq( 1.0, 1.0 + 1e-10 ) );
   CHECK_FALSE( num.isEq( 1.0, 1.0 + 1e-7 ) );
   CHECK( num.isFeasEq( 1.0, 1.0 + 1e-7 ) );
   CHECK( num.isFeasLE( 1.0 + 1e-7, 1.0 ) );
   CHECK( num.isFeasGT( 1.0 + 1e-5, 1.0 ) );
   CHECK( num.isZero( 5e-10 ) );
   CHECK( num.isIntegral( 3.0 + 1e-7 ) );
   CHECK_FALSE( num.isIntegral( 3.5 ) );
   CHECK( num.feasFloor( 2.9999999 ) == 3.0 );
   CHECK( num.feasCeil( 3.0000001 ) == 3.0 );
   CHECK( num.feasCeil( 3.01 ) == 4.0 );
   CHECK( num.isHuge( 2e8 ) );
   CHECK_FALSE( num.isHuge( 5e7 ) );
}

TEST_CASE( "feasibility tolerance is absolute, epsilon relative above one", "[numerics]" )
{
   const Num<double> num( 1e-9, 1e-6, 1e8 );
   CHECK_FALSE( num.isFeasEq( 1e6, 1e6 + 0.5 ) );
   CHECK( num.isFeasEq( 1e6, 1e6 + 5e-7 ) );
   CHECK( num.isEq( 1e6, 1e6 + 1e-4 ) );
   CHECK_FALSE( num.isEq( 1.0, 1.0 + 1e-4 ) );
}

TEST_CASE( "rational comparisons are exact", "[numerics]" )
{
   const Num<Rational> num;
   const Rational third = Rational( 1 ) / 3;
   CHECK( num.isEq( third * 3, Rational( 1 ) ) );
   CHECK_FALSE( num.isEq( Rational( 1 ), Rational( 1 ) + Rational( 1 ) / Rational( BigInt( "1000000000000000000000" ) ) ) );
   CHECK( num.isFeasGT( Rational( 1 ) + Rational( 1 ) / Rational( BigInt( "1000000000000000000000" ) ), Rational( 1 ) ) );
   CHECK( num.isIntegral( Rational( 6 ) / 3 ) );
   CHECK_FALSE( num.isIntegral( Rational( 7 ) / 3 ) );
   CHECK( num.feasFloor( Rational( 7 ) / 3 ) == 2 );
   CHECK( num.feasCeil( Rational( 7 ) / 3 ) == 3 );
   CHECK( num.feasFloor( Rational( -7 ) / 3 ) == -3 );
   CHECK( num.feasCeil( Rational( -7 ) / 3 ) == -2 );
   CHECK( NumTraits<Rational>::exact );
   CHECK_FALSE( NumTraits<double>::exact );
}

TEST_CASE( "number parsing and printing round trip", "[numerics]" )
{
   CHECK( parseNumber<double>( "2.5" ) == 2.5 );
   CHECK( parseNumber<double>( "-1e3" ) == -1000.0 );
   CHECK( parseNumber<Rational>( "0.1" ) == Rational( 1 ) / 10 );
   CHECK( parseNumber<Rational>( "-1.25e2" ) == Rational( -125 ) );
   CHECK( parseNumber<Rational>( "3/4" ) == Rational( 3 ) / 4 );
   CHECK( numberToString( Rational( 4 ) / 3 ) == "4/3" );
   CHECK( parseNumber<Rational>( numberToString( Rational( -22 ) / 7 ) ) == Rational( -22 ) / 7 );
   const double v = 0.1 + 0.2;
   CHECK( parseNumber<double>( numberToString( v ) ) == v );
   CHECK_THROWS( parseNumber<double>( "abc" ) );
   CHECK_THROWS( parseNumber<Rational>( "1.2.3" ) );
}

TEST_CASE( "extended values order infinities around finite values", "[numerics]" )
{
   using E = Extended<double>;
   const E inf = E::posInf();
   const E ninf = E::negInf();
   CHECK( ninf < E( -1e300 ) );
   CHECK( E( 1e300 ) < inf );
   CHECK( inf.isInfinite() );
   CHECK( inf.infSign() == 1 );
   CHECK( ninf.infSign() == -1 );
   CHECK( ( -inf ).isNegInf() );
   CHECK( ( E( 2 ) + E( 3 ) ).value() == 5 );
   CHECK( ( E( 2 ) + inf ).isPosInf() );
   CHECK( ( inf * -2.0 ).isNegInf() );
   CHECK( ( ninf / -4.0 ).isPosInf() );
   CHECK( E( 3 ) == E( 3 ) );
   CHECK_FALSE( inf == ninf );
   CHECK( extendedToString( inf ) == "inf" );
   CHECK( extendedToString( ninf ) == "-inf" );
}

TEST_CASE( "rational conversions to and from double", "[numerics]" )
{
   CHECK( NumTraits<Rational>::fromDouble( 0.375 ) == Rational( 3 ) / 8 );
   CHECK( NumTraits<Rational>::toDouble( Rational( 1 ) / 4 ) == 0.25 );
   CHECK( NumTraits<Rational>::abs( Rational( -5 ) / 2 ) == Rational( 5 ) / 2 );
}

TEST_CASE( "tolerances are validated and zero in rational mode", "[numerics]" )
{
   CHECK_THROWS_AS( Num<double>( 1e-5, 1e-6, 1e8 ), std::invalid_argument );
   CHECK_THROWS_AS( Num<double>( 1e-9, 1e-6, 0 ), std::invalid_argument );
   const Num<Rational> exact( Rational( 1 ) / 1000, Rational( 1 ) / 100, Rational( 100 ) );
   CHECK( exact.getEpsilon() == 0 );
   CHECK( exact.getFeasTol() == 0 );
}
