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

#include <algorithm>
#include <string>

#include "common/Helpers.hpp"
#include "common/Models.hpp"
#include "common/Oracle.hpp"
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

bool
logMentions( const std::vector<std::string>& log, const std::string& presolver )
{
   return std::any_of( log.begin(), log.end(), [&]( const std::string& line ) {
      return line.rfind( presolver + " ", 0 ) == 0;
   } );
}

} // namespace

TEST_CASE( "enough reductions weighs bound changes by a tenth", "[scheduler]" )
{
   ReductionCounts c;
   c.boundChanges = 9;
   CHECK_FALSE( enoughReductions( c, 1000, 1000, 1000, 1e-3 ) );
   c.boundChanges = 11;
   CHECK( enoughReductions( c, 1000, 1000, 1000, 1e-3 ) );
   ReductionCounts rows;
   rows.deletedRows = 1;
   rows.sideChanges = 1;
   CHECK( enoughReductions( rows, 1000, 1000, 1000, 1e-3 ) );
   ReductionCounts coefs;
   coefs.coeffChanges = 1;
   CHECK_FALSE( enoughReductions( coefs, 1000, 1000, 1000, 1e-3 ) );
   CHECK_FALSE( enoughReductions( ReductionCounts(), 10, 10, 10, 0 ) );
}

TEMPLATE_TEST_CASE( "statistics account for every transaction", "[scheduler]", double,
                    Rational )
{
   for( std::uint64_t seed = 1; seed <= 20; ++seed )
   {
      const auto p = toProblem<TestType>( randomLargeMip( seed, 60, 80 ) );
      const auto res = presolve( p, quiet<TestType>() );
      const auto& s = res.stats;
      const auto& t = s.transactions;
      CHECK( t.found == t.applied + t.discarded + t.canceled );
      long found = 0;
      long applied = 0;
      for( const auto& ps : s.presolvers )
      {
         CHECK( ps.found == ps.applied + ps.discarded + ps.canceled );
         found += ps.found;
         applied += ps.applied;
      }
      CHECK( found == t.found );
      CHECK( applied == t.applied );
      CHECK( s.rounds == s.roundsByTier[0] + s.roundsByTier[1] + s.roundsByTier[2] );
      CHECK( s.nrowsBefore == 60 );
      CHECK( s.ncolsBefore == 80 );
      CHECK( static_cast<long>( res.appliedLog.size() ) == t.applied );
      if( res.status == PresolveStatus::kReduced || res.status == PresolveStatus::kUnchanged )
      {
         CHECK( res.reduced.getNRows() == s.nrowsAfter );
         CHECK( res.reduced.getNCols() == s.ncolsAfter );
         CHECK( res.reduced.getActiveNnz() == s.nnzAfter );
         CHECK( res.reduced.checkConsistency() );
         CHECK( static_cast<int>( res.record.colMap.size() ) == s.ncolsAfter );
      }
   }
}

TEMPLATE_TEST_CASE( "an empty model is unchanged", "[scheduler]", double, Rational )
{
   ModelSpec m;
   const auto res = presolve( toProblem<TestType>( m ), quiet<TestType>() );
   CHECK( res.status == PresolveStatus::kUnchanged );
   CHECK( res.reduced.getNCols() == 0 );
}

TEMPLATE_TEST_CASE( "infeasibility found by presolve is reported", "[scheduler]", double,
                    Rational )
{
   ModelSpec m;
   const int x = m.addCol( 1, 0, 1, true );
   const int y = m.addCol( 1, 0, 1, true );
   m.addRow( { { x, 1 }, { y, 1 } }, 3, kInf );
   const auto res = presolve( toProblem<TestType>( m ), quiet<TestType>() );
   CHECK( res.status == PresolveStatus::kInfeasible );
}

TEMPLATE_TEST_CASE( "an unbounded free column is reported", "[scheduler]", double, Rational )
{
   ModelSpec m;
   const int x = m.addCol( -1, 0, kInf, false );
   const int y = m.addCol( 1, 0, 1, true );
   m.addRow( { { x, -1 }, { y, 1 } }, -kInf, 1 );
   const auto res = presolve( toProblem<TestType>( m ), quiet<TestType>() );
   CHECK( res.status == PresolveStatus::kUnbounded );
}

TEMPLATE_TEST_CASE( "disabled presolvers never appear in the applied log", "[scheduler]",
                    double, Rational )
{
   PresolveOptions o = quiet<TestType>();
   const auto p = toProblem<TestType>( conflictOrdering() );
   const auto base = presolve( p, o );
   REQUIRE( logMentions( base.appliedLog, "simplifyineq" ) );
   o.enabled["simplifyineq"] = false;
   const auto res = presolve( p, o );
   CHECK_FALSE( logMentions( res.appliedLog, "simplifyineq" ) );
   for( const auto& ps : res.stats.presolvers )
      if( ps.name == "simplifyineq" )
         CHECK( ps.calls == 0 );
}

TEMPLATE_TEST_CASE( "round limit stops the loop", "[scheduler]", double, Rational )
{
   PresolveOptions o = quiet<TestType>();
   o.maxRounds = 1;
   const auto p = toProblem<TestType>( randomLargeMip( 3, 80, 100 ) );
   const auto res = presolve( p, o );
   CHECK( res.stats.rounds <= 1 );
   CHECK( res.stats.roundsByTier[0] == res.stats.rounds );
}

TEMPLATE_TEST_CASE( "results are identical for every thread count", "[scheduler]", double,
                    Rational )
{
   for( std::uint64_t seed = 1; seed <= 5; ++seed )
   {
      const auto p = toProblem<TestType>( randomLargeMip( 500 + seed, 120, 150 ) );
      PresolveOptions o = quiet<TestType>();
      const auto ref = presolve( p, o );
      for( int threads : { 2, 3, 4 } )
      {
         o.threads = threads;
         const auto res = presolve( p, o );
         CHECK( res.status == ref.status );
         CHECK( res.appliedLog == ref.appliedLog );
         CHECK( mpsString( res.reduced ) == mpsString( ref.reduced ) );
         CHECK( res.stats.threads == threads );
      }
   }
}

TEMPLATE_TEST_CASE( "presolve preserves the optimum of small models", "[scheduler][oracle]",
                    double, Rational )
{
   const TestType tol = NumTraits<TestType>::exact ? TestType( 0 ) : TestType( 1e-6 );
   for( std::uint64_t seed = 1; seed <= 150; ++seed )
   {
      const ModelSpec spec = randomSmallMip( 90000 + seed, 8, 6, seed % 2 == 0 ? 3 : 0 );
      const auto orig = toProblem<TestType>( spec );
      const auto truth = solveByEnumeration( orig, tol );
      for( bool immediate : { false, true } )
      {
         PresolveOptions o = quiet<TestType>();
         o.applyImmediately = immediate;
         const auto res = presolve( orig, o );
         INFO( "seed " << 90000 + seed << " immediate " << immediate );
         if( res.status == PresolveStatus::kInfeasible )
         {
            CHECK( truth.status == OracleStatus::kInfeasible );
            continue;
         }
         if( res.status == PresolveStatus::kUnbounded )
         {
            CHECK( truth.status != OracleStatus::kOptimal );
            continue;
         }
         const auto reduced = solveByEnumeration( res.reduced, tol );
         REQUIRE( reduced.status == truth.status );
         if( truth.status != OracleStatus::kOptimal )
            continue;
         const double diff =
             NumTraits<TestType>::toDouble( TestType( reduced.objective - truth.objective ) );
         if constexpr( NumTraits<TestType>::exact )
            CHECK( reduced.objective == truth.objective );
         else
            CHECK( std::abs( diff ) <= 1e-6 );
      }
   }
}
