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

#include <string>

#include "common/Helpers.hpp"
#include "common/Models.hpp"
#include "common/Oracle.hpp"
#include "parapre/core/Postsolve.hpp"
#include "parapre/core/Scheduler.hpp"

using namespace parapre;
using namespace parapre::test;

namespace
{

template <typename REAL>
PresolveOptions
quiet()
{
   PresolveOptions o;
   o.verbosity = 0;
   o.numericMode = NumTraits<REAL>::mode;
   return o;
}

} // namespace

TEMPLATE_TEST_CASE( "postsolved optima are feasible and optimal for the original",
                    "[postsolve][oracle]", double, Rational )
{
   const TestType tol = NumTraits<TestType>::exact ? TestType( 0 ) : TestType( 1e-6 );
   int checked = 0;
   for( std::uint64_t seed = 1; seed <= 200; ++seed )
   {
      const ModelSpec spec = randomSmallMip( 30000 + seed, 8, 6, 3 );
      const auto orig = toProblem<TestType>( spec );
      const auto truth = solveByEnumeration( orig, tol );
      if( truth.status != OracleStatus::kOptimal )
         continue;
      const auto res = presolve( orig, quiet<TestType>() );
      INFO( "seed " << 30000 + seed );
      REQUIRE( ( res.status == PresolveStatus::kReduced ||
                 res.status == PresolveStatus::kUnchanged ) );
      const auto reduced = solveByEnumeration( res.reduced, tol );
      REQUIRE( reduced.status == OracleStatus::kOptimal );
      const Solution<TestType> sol = postsolvePrimal( res.record, reduced.x, orig.getNum() );
      std::string why;
      CHECK( isFeasibleFor( orig, sol.values, tol, &why ) );
      INFO( why );
      const TestType obj = originalObjective( res.record, sol.values );
      if constexpr( NumTraits<TestType>::exact )
      {
         CHECK( obj == truth.objective );
         CHECK( sol.objective == truth.objective );
      }
      else
      {
         CHECK( std::abs( obj - truth.objective ) <= 1e-6 );
         CHECK( std::abs( sol.objective - truth.objective ) <= 1e-6 );
      }
      ++checked;
   }
   CHECK( checked > 50 );
}

TEMPLATE_TEST_CASE( "postsolve rejects a solution of the wrong size", "[postsolve]", double,
                    Rational )
{
   const auto orig = toProblem<TestType>( conflictOrdering() );
   const auto res = presolve( orig, quiet<TestType>() );
   REQUIRE( res.status == PresolveStatus::kReduced );
   std::vector<TestType> wrong( res.reduced.getNCols() + 1, TestType( 0 ) );
   CHECK_THROWS_AS( postsolvePrimal( res.record, wrong, orig.getNum() ), PostsolveError );
}

TEST_CASE( "postsolve errors name the record entry", "[postsolve]" )
{
   const PostsolveError e( 7, "value outside bounds" );
   CHECK( e.entry() == 7 );
   CHECK( std::string( e.what() ) == "record entry 7: value outside bounds" );
}

TEMPLATE_TEST_CASE( "an unchanged model postsolves to the identity", "[postsolve]", double,
                    Rational )
{
   ModelSpec m;
   const int x = m.addCol( 1, 0, 3, true );
   const int y = m.addCol( 2, 0, 3, true );
   m.addRow( { { x, 2 }, { y, 3 } }, 4, 11 );
   m.addRow( { { x, 3 }, { y, -2 } }, -5, 4 );
   const auto orig = toProblem<TestType>( m );
   const auto res = presolve( orig, quiet<TestType>() );
   std::vector<TestType> x0( res.reduced.getNCols(), TestType( 1 ) );
   const auto sol = postsolvePrimal( res.record, x0, orig.getNum() );
   REQUIRE( sol.values.size() == 2 );
   for( std::size_t k = 0; k < res.record.colMap.size(); ++k )
      CHECK( sol.values[res.record.colMap[k]] == x0[k] );
}
