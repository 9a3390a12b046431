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

#include "common/Models.hpp"
#include "parapre/core/Problem.hpp"

using namespace parapre;
using namespace parapre::test;

namespace
{

/// x0 in [0, 4] int, x1 in [-1, inf), x2 free;
/// r0: 1 <= x0 + 2 x1 <= 5, r1: x1 - x2 = 2, r2: x0 - 3 x2 >= -inf .. 7
Problem<double>
sample()
{
   Problem<double> p;
   const auto inf = Extended<double>::posInf();
   const auto ninf = Extended<double>::negInf();
   p.addCol( "x0", 1, 0, 4, true );
   p.addCol( "x1", -1, -1, inf, false );
   p.addCol( "x2", 0, ninf, inf, false );
   p.addRow( "r0", 1, 5 );
   p.addRow( "r1", 2, 2 );
   p.addRow( "r2", ninf, 7 );
   p.addEntry( 0, 0, 1 );
   p.addEntry( 0, 1, 2 );
   p.addEntry( 1, 1, 1 );
   p.addEntry( 1, 2, -1 );
   p.addEntry( 2, 0, 1 );
   p.addEntry( 2, 2, -3 );
   p.finalize();
   return p;
}

} // namespace

TEST_CASE( "finalize derives sizes, activities and locks", "[problem]" )
{
   const Problem<double> p = sample();
   CHECK( p.getNRows() == 3 );
   CHECK( p.getNCols() == 3 );
   CHECK( p.getActiveNnz() == 6 );
   CHECK( p.getRowSize( 0 ) == 2 );
   CHECK( p.getColSize( 2 ) == 2 );
   CHECK( p.isEquation( 1 ) );
   CHECK_FALSE( p.isEquation( 0 ) );
   CHECK( p.isIntegral( 0 ) );
   CHECK_FALSE( p.isBinary( 0 ) );

   // r0: min = 0 + 2 * -1 = -2, max = 4 + inf
   const RowActivity<double>& a0 = p.getActivity( 0 );
   CHECK( a0.ninfmin == 0 );
   CHECK( a0.min == -2 );
   CHECK( a0.ninfmax == 1 );
   CHECK( a0.max == 4 );

   // x0: positive in r0 (two sided) and r2 (rhs only) -> up 2, down 1
   CHECK( p.getUpLocks( 0 ) == 2 );
   CHECK( p.getDownLocks( 0 ) == 1 );
   // x2: -1 in an equation, -3 in a <= row -> up 1, down 2
   CHECK( p.getUpLocks( 2 ) == 1 );
   CHECK( p.getDownLocks( 2 ) == 2 );
   std::string why;
   CHECK( p.checkConsistency( &why ) );
}

TEST_CASE( "construction rejects duplicate entries and bad indices", "[problem]" )
{
   Problem<double> p;
   p.addCol( "x", 0, 0, 1, false );
   p.addRow( "r", 0, 1 );
   p.addEntry( 0, 0, 1 );
   CHECK_THROWS( p.addEntry( 0, 0, 2 ) );
   CHECK_THROWS( p.addEntry( 1, 0, 2 ) );
   CHECK_THROWS( p.addEntry( 0, 3, 2 ) );
}

TEST_CASE( "fixing a column shifts sides and the offset", "[problem]" )
{
   Problem<double> p = sample();
   CHECK( p.fixColumn( 0, 3 ) == ChangeResult::kOk );
   CHECK_FALSE( p.isColActive( 0 ) );
   CHECK( p.getLhs( 0 ).value() == -2 );
   CHECK( p.getRhs( 0 ).value() == 2 );
   CHECK( p.getRhs( 2 ).value() == 4 );
   CHECK( p.getObjOffset() == 3 );
   CHECK( p.getRowSize( 0 ) == 1 );
   CHECK( p.findActive( 0, 0 ) == nullptr );
   CHECK( p.checkConsistency() );
}

TEST_CASE( "fixing outside the domain or fractional integral reports infeasible", "[problem]" )
{
   Problem<double> p = sample();
   CHECK( p.fixColumn( 0, 5 ) == ChangeResult::kInfeasible );
   Problem<double> q = sample();
   CHECK( q.fixColumn( 0, 1.5 ) == ChangeResult::kInfeasible );
}

TEST_CASE( "bound changes round integral columns and update activities", "[problem]" )
{
   Problem<double> p = sample();
   CHECK( p.setUpper( 0, 2.5 ) == ChangeResult::kOk );
   CHECK( p.getUpper( 0 ).value() == 2 );
   CHECK( p.getActivity( 0 ).max == 2 );
   CHECK( p.setLower( 1, 0.5 ) == ChangeResult::kOk );
   CHECK( p.getActivity( 0 ).min == 1 );
   CHECK( p.setLower( 0, 3 ) == ChangeResult::kInfeasible );
   CHECK( p.checkConsistency() );
}

TEST_CASE( "side changes flip locks with finiteness", "[problem]" )
{
   Problem<double> p = sample();
   const int up = p.getUpLocks( 0 );
   CHECK( p.setRhs( 0, Extended<double>::posInf() ) == ChangeResult::kOk );
   CHECK( p.getUpLocks( 0 ) == up - 1 );
   CHECK( p.setLhs( 0, Extended<double>::negInf() ) == ChangeResult::kOk );
   CHECK( p.getDownLocks( 0 ) == 0 );
   CHECK( p.checkConsistency() );
   CHECK( p.setRhs( 1, 1 ) == ChangeResult::kInfeasible );
}

TEST_CASE( "coefficient changes and deletion keep both views in sync", "[problem]" )
{
   Problem<double> p = sample();
   p.setCoefficient( 0, 1, 4 );
   CHECK( *p.findActive( 0, 1 ) == 4 );
   p.setCoefficient( 0, 1, 0 );
   CHECK( p.findActive( 0, 1 ) == nullptr );
   CHECK( p.getRowSize( 0 ) == 1 );
   p.setCoefficient( 1, 0, 2 );
   CHECK( *p.findActive( 1, 0 ) == 2 );
   CHECK( p.getColSize( 0 ) == 3 );
   CHECK( p.checkConsistency() );
   p.compress();
   CHECK( p.checkConsistency() );
   CHECK( p.getActiveNnz() == 6 );
}

TEST_CASE( "redundant rows leave the active views", "[problem]" )
{
   Problem<double> p = sample();
   p.markRowRedundant( 2 );
   CHECK_FALSE( p.isRowActive( 2 ) );
   CHECK( p.getNActiveRows() == 2 );
   CHECK( p.getColSize( 2 ) == 1 );
   int seen = 0;
   p.forEachInCol( 2, [&]( int row, const double& ) {
      CHECK( row == 1 );
      ++seen;
   } );
   CHECK( seen == 1 );
   CHECK( p.checkConsistency() );
}

TEST_CASE( "fingerprint changes under mutation only", "[problem]" )
{
   Problem<double> p = sample();
   const Problem<double> copy = p;
   CHECK( p.fingerprint() == copy.fingerprint() );
   p.setUpper( 1, 10 );
   CHECK( p.fingerprint() != copy.fingerprint() );
}

TEST_CASE( "model specs convert identically to both modes", "[problem]" )
{
   for( std::uint64_t seed = 1; seed <= 20; ++seed )
   {
      const ModelSpec spec = randomSmallMip( seed, 8, 6, 2 );
      const Problem<double> d = toProblem<double>( spec );
      const Problem<Rational> r = toProblem<Rational>( spec );
      REQUIRE( d.getNRows() == r.getNRows() );
      REQUIRE( d.getNCols() == r.getNCols() );
      CHECK( d.getActiveNnz() == r.getActiveNnz() );
      for( int j = 0; j < d.getNCols(); ++j )
      {
         CHECK( Rational( d.getObj( j ) ) == r.getObj( j ) );
         CHECK( d.isIntegral( j ) == r.isIntegral( j ) );
         CHECK( d.getUpLocks( j ) == r.getUpLocks( j ) );
      }
      CHECK( d.checkConsistency() );
      CHECK( r.checkConsistency() );
   }
}
