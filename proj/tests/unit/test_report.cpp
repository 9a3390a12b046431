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

#include <sstream>
#include <string>

#include "parapre/io/Report.hpp"

using namespace parapre;

namespace
{

const char* const kLogA = R"(presolving 3 rows 4 cols 8 nonzeros with 1 threads
round 1 tier fast
colsingleton transaction 0 status APPLIED conflict none redundant 0
propagation transaction 1 status APPLIED conflict none redundant 0
propagation transaction 2 status DISCARDED conflict colsingleton redundant 1
round 1 tier trivial
round 2 tier medium
stuffing transaction 0 status APPLIED conflict none redundant 0
dualfix transaction 1 status DISCARDED conflict stuffing redundant 0
dualfix transaction 2 status DISCARDED conflict stuffing redundant 1
)";

const char* const kLogB = R"(round 1 tier fast
propagation transaction 0 status APPLIED conflict none redundant 0
propagation transaction 1 status CANCELED conflict none redundant 0
)";

ConflictReport
sampleReport()
{
   ConflictReport r;
   std::istringstream a( kLogA );
   std::istringstream b( kLogB );
   r.addLog( a );
   r.addLog( b );
   return r;
}

} // namespace

TEST_CASE( "report counts rounds, calls and transactions", "[report]" )
{
   const ConflictReport r = sampleReport();
   CHECK( r.instances() == 2 );
   CHECK( r.rounds( Tier::kFast ) == 2 );
   CHECK( r.rounds( Tier::kMedium ) == 1 );
   CHECK( r.rounds( Tier::kExhaustive ) == 0 );
   CHECK( r.calls( "propagation" ) == 2 );
   CHECK( r.calls( "colsingleton" ) == 1 );
   CHECK( r.calls( "probing" ) == 0 );
   CHECK( r.totalTransactions( "propagation" ) == 4 );
   CHECK( r.totalTransactions( "dualfix" ) == 2 );
}

TEST_CASE( "report pairs calls symmetrically", "[report]" )
{
   const ConflictReport r = sampleReport();
   CHECK( r.commonCalls( "propagation", "colsingleton" ) == 1 );
   CHECK( r.commonCalls( "colsingleton", "propagation" ) == 1 );
   CHECK( r.commonCalls( "propagation", "propagation" ) == 2 );
   CHECK( r.conflictingCalls( "propagation", "colsingleton" ) == 1 );
   CHECK( r.conflictingCalls( "dualfix", "stuffing" ) == 1 );
   CHECK( r.conflictingCalls( "stuffing", "colsingleton" ) == 0 );
}

TEST_CASE( "report ledger averages conflict rates over instances", "[report]" )
{
   const ConflictReport r = sampleReport();
   CHECK( r.conflicts( "propagation", "colsingleton" ) == 1 );
   CHECK( r.redundant( "propagation", "colsingleton" ) == 1 );
   CHECK( r.conflicts( "dualfix", "stuffing" ) == 2 );
   CHECK( r.redundant( "dualfix", "stuffing" ) == 1 );
   const auto rows = r.ledger();
   REQUIRE( rows.size() == 2 );
   CHECK( rows[0].p == "propagation" );
   CHECK( rows[0].q == "colsingleton" );
   CHECK( rows[0].transactions == 4 );
   // 1/2 in the first instance, 0/2 in the second
   CHECK( rows[0].averageRate == Catch::Approx( 0.25 ) );
   CHECK( rows[0].redundantShare == Catch::Approx( 1.0 ) );
   CHECK( rows[1].p == "dualfix" );
   // only the first instance has dualfix transactions
   CHECK( rows[1].averageRate == Catch::Approx( 1.0 ) );
   CHECK( rows[1].redundantShare == Catch::Approx( 0.5 ) );
}

TEST_CASE( "report writes matrices per tier and the ledger", "[report]" )
{
   const ConflictReport r = sampleReport();
   std::ostringstream out;
   r.write( out );
   const std::string text = out.str();
   CHECK( text.rfind( "instances 2\n", 0 ) == 0 );
   CHECK( text.find( "on 2 rounds of fast presolvers" ) != std::string::npos );
   CHECK( text.find( "on 1 rounds of medium presolvers" ) != std::string::npos );
   CHECK( text.find( "propagation (cp)" ) != std::string::npos );
   CHECK( text.find( "propagation-colsingleton" ) != std::string::npos );
   CHECK( text.find( "25.00%" ) != std::string::npos );
   CHECK( text.find( "50.00%" ) != std::string::npos );
   CHECK( r.code( "sparsify" ) == "sy" );
   CHECK( r.code( "unknown" ) == "unknown" );
}

TEST_CASE( "report tiers list presolvers in apply order", "[report]" )
{
   const ConflictReport r;
   const auto fast = r.tierPresolvers( Tier::kFast );
   CHECK( fast == std::vector<std::string>{ "colsingleton", "coefftightening", "propagation" } );
   CHECK( r.tierPresolvers( Tier::kExhaustive ).back() == "sparsify" );
}

TEST_CASE( "report rejects missing log files", "[report]" )
{
   ConflictReport r;
   CHECK_THROWS( r.addPath( "/nonexistent/parapre.log" ) );
}
