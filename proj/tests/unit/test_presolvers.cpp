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
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "common/Helpers.hpp"
#include "common/Models.hpp"
#include "common/Oracle.hpp"
#include "parapre/core/ApplyEngine.hpp"
#include "parapre/presolvers/CoeffTightening.hpp"
#include "parapre/presolvers/ColSingleton.hpp"
#include "parapre/presolvers/DomCol.hpp"
#include "parapre/presolvers/DoubleToNEq.hpp"
#include "parapre/presolvers/DualFix.hpp"
#include "parapre/presolvers/DualInfer.hpp"
#include "parapre/presolvers/FixContinuous.hpp"
#include "parapre/presolvers/ImplInt.hpp"
#include "parapre/presolvers/ParallelCols.hpp"
#include "parapre/presolvers/ParallelRows.hpp"
#include "parapre/presolvers/Probing.hpp"
#include "parapre/presolvers/Propagation.hpp"
#include "parapre/presolvers/Registry.hpp"
#include "parapre/presolvers/SimpleProbing.hpp"
#include "parapre/presolvers/SimplifyIneq.hpp"
#include "parapre/presolvers/Sparsify.hpp"
#include "parapre/presolvers/Stuffing.hpp"
#include "parapre/presolvers/Substitution.hpp"
#include "parapre/presolvers/Trivial.hpp"

using namespace parapre;
using namespace parapre::test;

namespace
{

/// non-assertion steps of all transactions, in order
template <typename REAL>
std::vector<ReductionStep<REAL>>
changes( const std::vector<Transaction<REAL>>& txs )
{
   std::vector<ReductionStep<REAL>> out;
   for( const auto& t : txs )
      for( const auto& s : t.steps )
         if( !isAssertion( s.kind ) )
            out.push_back( s );
   return out;
}

template <typename REAL>
bool
hasStep( const std::vector<Transaction<REAL>>& txs, StepKind kind, int row, int col )
{
   for( const auto& s : changes( txs ) )
      if( s.kind == kind && s.row == row && s.col == col )
         return true;
   return false;
}

template <typename REAL>
std::optional<ReductionStep<REAL>>
findStep( const std::vector<Transaction<REAL>>& txs, StepKind kind, int row, int col )
{
   for( const auto& s : changes( txs ) )
      if( s.kind == kind && s.row == row && s.col == col )
         return s;
   return std::nullopt;
}

/// every transaction asserts something or is a verdict
template <typename REAL>
bool
allGuarded( const std::vector<Transaction<REAL>>& txs )
{
   for( const auto& t : txs )
   {
      const bool guarded = std::any_of( t.steps.begin(), t.steps.end(), []( const auto& s ) {
         return isAssertion( s.kind ) || isVerdict( s.kind );
      } );
      if( !guarded )
         return false;
   }
   return true;
}

template <typename REAL>
REAL
exactly( double v )
{
   return REAL( v );
}

/// x in [2, 5], y in [0, 5] integral: x + y <= 3
ModelSpec
propagationModel()
{
   ModelSpec m;
   const int x = m.addCol( 1, 2, 5, true );
   const int y = m.addCol( -1, 0, 5, true );
   m.addRow( { { x, 1 }, { y, 1 } }, -kInf, 3 );
   return m;
}

/// a + b - 2z = 0 with a, b in [0, 1] continuous and z binary: a = b = z
ModelSpec
simpleProbingModel()
{
   ModelSpec m;
   const int a = m.addCol( 1, 0, 1, false );
   const int b = m.addCol( 1, 0, 1, false );
   const int z = m.addCol( -3, 0, 1, true );
   const int w = m.addCol( 1, 0, 3, true );
   m.addRow( { { a, 1 }, { b, 1 }, { z, -2 } }, 0, 0 );
   m.addRow( { { a, 1 }, { w, 1 } }, -kInf, 3 );
   m.addRow( { { b, 1 }, { w, 1 } }, 1, kInf );
   return m;
}

/// y and z have equal columns and costs
ModelSpec
parallelColsModel()
{
   ModelSpec m;
   const int x = m.addCol( -1, 0, 1, true );
   const int y = m.addCol( 1, 0, 1, true );
   const int z = m.addCol( 1, 0, 1, true );
   m.addRow( { { y, 1 }, { z, 1 }, { x, 1 } }, -kInf, 2 );
   m.addRow( { { x, 1 }, { y, 3 }, { z, 3 } }, -kInf, 4 );
   return m;
}

/// x + s1 + 2 s2 <= 4 with x <= 3: s1 (ratio -2) fits at 1 even with x at
/// its upper bound, s2 (ratio -1/2) does not
ModelSpec
stuffingModel()
{
   ModelSpec m;
   const int x = m.addCol( -1, 0, 3, true );
   const int y = m.addCol( 1, 0, 1, true );
   const int s1 = m.addCol( -2, 0, 1, false );
   const int s2 = m.addCol( -1, 0, 1, false );
   m.addRow( { { x, 1 }, { s1, 1 }, { s2, 2 } }, -kInf, 4 );
   m.addRow( { { x, 1 }, { y, 1 } }, 1, kInf );
   return m;
}

/// s continuous in an all-integral equation
ModelSpec
implIntModel()
{
   ModelSpec m;
   const int x = m.addCol( 1, 0, 3, true );
   const int y = m.addCol( -1, 0, 3, true );
   const int s = m.addCol( 1, 0, 10, false );
   m.addRow( { { x, 1 }, { y, 1 }, { s, 1 } }, 3, 3 );
   m.addRow( { { x, 1 }, { s, 2 } }, -kInf, 5 );
   return m;
}

/// x dominates y: same column, cheaper, unbounded above
ModelSpec
domColModel()
{
   ModelSpec m;
   const int x = m.addCol( 1, 0, kInf, false );
   const int y = m.addCol( 2, 0, kInf, false );
   m.addRow( { { x, 1 }, { y, 1 } }, 2, kInf );
   m.addRow( { { x, 1 }, { y, 1 } }, -kInf, 7 );
   return m;
}

/// free x in x + y + z = 3 and x + w <= 5
ModelSpec
substitutionModel()
{
   ModelSpec m;
   const int x = m.addCol( 1, -kInf, kInf, false );
   const int y = m.addCol( 1, 0, 1, true );
   const int z = m.addCol( 2, 0, 1, true );
   const int w = m.addCol( -1, 0, 4, true );
   m.addRow( { { x, 1 }, { y, 1 }, { z, 1 } }, 3, 3 );
   m.addRow( { { x, 1 }, { w, 1 } }, -kInf, 5 );
   return m;
}

/// equation x + y + z = 3 shares its support with two other rows
ModelSpec
sparsifyModel()
{
   ModelSpec m;
   const int x = m.addCol( 1, 0, 2, false );
   const int y = m.addCol( 1, 0, 2, false );
   const int z = m.addCol( 1, 0, 2, false );
   const int w = m.addCol( -1, 0, 4, true );
   m.addRow( { { x, 1 }, { y, 1 }, { z, 1 } }, 3, 3 );
   m.addRow( { { x, 1 }, { y, 1 }, { z, 1 }, { w, 1 } }, -kInf, 5 );
   m.addRow( { { x, 2 }, { y, 2 }, { z, 2 }, { w, -1 } }, -kInf, 9 );
   return m;
}

/// singleton row 2x <= 5, a redundant row, an empty row and an empty column
ModelSpec
trivialModel()
{
   ModelSpec m;
   const int x = m.addCol( 1, 0, 5, true );
   const int y = m.addCol( -1, 0, 5, true );
   m.addCol( -1, 0, 4, false );
   m.addRow( { { x, 2 } }, -kInf, 5 );
   m.addRow( { { x, 1 }, { y, 1 } }, -kInf, 20 );
   m.addRow( {}, -1, 1 );
   return m;
}

} // namespace

TEMPLATE_TEST_CASE( "colsingleton moves continuous singletons into the objective", "[presolvers]",
                    double, Rational )
{
   const auto p = toProblem<TestType>( twoSingletons() );
   const auto txs = runOnce( ColSingleton<TestType>(), p );
   CHECK( txs.size() == 2 );
   CHECK( hasStep( txs, StepKind::kSubstituteInObjective, 0, 2 ) );
   CHECK( hasStep( txs, StepKind::kSubstituteInObjective, 0, 3 ) );
   CHECK( allGuarded( txs ) );
}

TEMPLATE_TEST_CASE( "coefftightening tightens the knapsack row", "[presolvers]", double,
                    Rational )
{
   const auto p = toProblem<TestType>( smallKnapsack() );
   const auto txs = runOnce( CoeffTightening<TestType>(), p );
   REQUIRE( txs.size() == 1 );
   const auto a0 = findStep( txs, StepKind::kChangeCoeff, 0, 0 );
   REQUIRE( a0.has_value() );
   CHECK( a0->value.value() == exactly<TestType>( 1 ) );
   const auto rhs = findStep( txs, StepKind::kChangeRhs, 0, kNone );
   REQUIRE( rhs.has_value() );
   CHECK( rhs->value.value() == exactly<TestType>( 1 ) );
}

TEMPLATE_TEST_CASE( "coefftightening divides integral rows by their gcd", "[presolvers]", double,
                    Rational )
{
   const auto p = toProblem<TestType>( parallelTriple() );
   const auto txs = runOnce( CoeffTightening<TestType>(), p );
   CHECK( txs.size() == 3 );
   const auto lhs = findStep( txs, StepKind::kChangeLhs, 1, kNone );
   REQUIRE( lhs.has_value() );
   // 6x + 6y >= 4 becomes x + y >= 1 after rounding up 4/6
   CHECK( lhs->value.value() == exactly<TestType>( 1 ) );
}

TEMPLATE_TEST_CASE( "propagation tightens bounds from activities", "[presolvers]", double,
                    Rational )
{
   const auto p = toProblem<TestType>( propagationModel() );
   const auto txs = runOnce( Propagation<TestType>(), p );
   const auto ux = findStep( txs, StepKind::kChangeUpper, kNone, 0 );
   const auto uy = findStep( txs, StepKind::kChangeUpper, kNone, 1 );
   REQUIRE( ux.has_value() );
   CHECK( ux->value.value() == exactly<TestType>( 3 ) );
   REQUIRE( uy.has_value() );
   CHECK( uy->value.value() == exactly<TestType>( 1 ) );
   // implied bounds stay valid under any other reduction: no guards
   CHECK( txs.size() == 2 );
}

TEMPLATE_TEST_CASE( "dualfix fixes columns without locks in the improving direction",
                    "[presolvers]", double, Rational )
{
   const auto p = toProblem<TestType>( propagationModel() );
   const auto txs = runOnce( DualFix<TestType>(), p );
   REQUIRE( txs.size() == 1 );
   const auto fx = findStep( txs, StepKind::kFixColumn, kNone, 0 );
   REQUIRE( fx.has_value() );
   CHECK( fx->value.value() == exactly<TestType>( 2 ) );
}

TEMPLATE_TEST_CASE( "simpleprobing aggregates columns decided by a binary", "[presolvers]",
                    double, Rational )
{
   const auto p = toProblem<TestType>( simpleProbingModel() );
   const auto txs = runOnce( SimpleProbing<TestType>(), p );
   REQUIRE( txs.size() == 1 );
   const auto steps = changes( txs );
   REQUIRE( steps.size() == 2 );
   for( const auto& s : steps )
   {
      CHECK( s.kind == StepKind::kSubstituteAffine );
      CHECK( s.aux == 2 );
      CHECK( s.value.value() == exactly<TestType>( 0 ) );
      CHECK( s.factor == exactly<TestType>( 1 ) );
   }
}

TEMPLATE_TEST_CASE( "parallelrows merges a class in one transaction", "[presolvers]", double,
                    Rational )
{
   const auto p = toProblem<TestType>( parallelTriple() );
   const auto txs = runOnce( ParallelRows<TestType>(), p );
   REQUIRE( txs.size() == 1 );
   CHECK( hasStep( txs, StepKind::kMarkRowRedundant, 1, kNone ) );
   CHECK( hasStep( txs, StepKind::kMarkRowRedundant, 2, kNone ) );
   const auto lhs = findStep( txs, StepKind::kChangeLhs, 0, kNone );
   REQUIRE( lhs.has_value() );
   CHECK( lhs->value.value() == exactly<TestType>( 3 ) );
}

TEMPLATE_TEST_CASE( "parallelcols merges equal columns", "[presolvers]", double, Rational )
{
   const auto p = toProblem<TestType>( parallelColsModel() );
   const auto txs = runOnce( ParallelCols<TestType>(), p );
   REQUIRE( txs.size() == 1 );
   const auto agg = findStep( txs, StepKind::kAggregateParallelCols, kNone, 1 );
   REQUIRE( agg.has_value() );
   CHECK( agg->aux == 2 );
   CHECK( agg->factor == exactly<TestType>( 1 ) );
   // merged column ranges over [0, 2]
   CHECK( agg->value.value() == exactly<TestType>( 0 ) );
   CHECK( agg->value2.value() == exactly<TestType>( 2 ) );
   CHECK( hasStep( txs, StepKind::kDeleteColumn, kNone, 2 ) );
}

TEMPLATE_TEST_CASE( "stuffing fixes the best ratio singleton at its upper bound", "[presolvers]",
                    double, Rational )
{
   const auto p = toProblem<TestType>( stuffingModel() );
   const auto txs = runOnce( Stuffing<TestType>(), p );
   REQUIRE( txs.size() == 1 );
   const auto steps = changes( txs );
   REQUIRE( steps.size() == 1 );
   CHECK( steps[0].kind == StepKind::kFixColumn );
   CHECK( steps[0].col == 2 );
   CHECK( steps[0].value.value() == exactly<TestType>( 1 ) );
}

TEST_CASE( "fixcontinuous fixes nearly equal bounds in float mode", "[presolvers]" )
{
   ModelSpec m;
   const int x = m.addCol( 1, 1, 1 + 1e-10, false );
   const int y = m.addCol( -1, 0, 5, true );
   m.addRow( { { x, 1 }, { y, 1 } }, -kInf, 5 );
   const auto p = toProblem<double>( m );
   const auto txs = runOnce( FixContinuous<double>(), p );
   REQUIRE( txs.size() == 1 );
   CHECK( hasStep( txs, StepKind::kFixColumn, kNone, 0 ) );
   // exact mode needs exactly equal bounds
   const auto q = toProblem<Rational>( m );
   CHECK( runOnce( FixContinuous<Rational>(), q ).empty() );
}

TEMPLATE_TEST_CASE( "simplifyineq drops a coefficient that cannot matter", "[presolvers]",
                    double, Rational )
{
   const auto p = toProblem<TestType>( conflictOrdering() );
   const auto txs = runOnce( SimplifyIneq<TestType>(), p );
   REQUIRE( txs.size() == 1 );
   const auto del = findStep( txs, StepKind::kChangeCoeff, 1, 0 );
   REQUIRE( del.has_value() );
   CHECK( del->value.value() == exactly<TestType>( 0 ) );
   const auto rhs = findStep( txs, StepKind::kChangeRhs, 1, kNone );
   REQUIRE( rhs.has_value() );
   CHECK( rhs->value.value() == exactly<TestType>( 3 ) );
}

TEMPLATE_TEST_CASE( "doubletoneq substitutes one column of a two column equation",
                    "[presolvers]", double, Rational )
{
   const auto p = toProblem<TestType>( conflictOrdering() );
   const auto txs = runOnce( DoubleToNEq<TestType>(), p );
   REQUIRE( txs.size() == 1 );
   const auto steps = changes( txs );
   REQUIRE( steps.size() == 1 );
   // y = 1 - z
   CHECK( steps[0].kind == StepKind::kSubstituteAffine );
   CHECK( steps[0].row == 0 );
   CHECK( steps[0].col == 1 );
   CHECK( steps[0].aux == 2 );
   CHECK( steps[0].value.value() == exactly<TestType>( 1 ) );
   CHECK( steps[0].factor == exactly<TestType>( -1 ) );
}

TEMPLATE_TEST_CASE( "implint marks continuous columns of integral equations", "[presolvers]",
                    double, Rational )
{
   const auto p = toProblem<TestType>( implIntModel() );
   const auto txs = runOnce( ImplInt<TestType>(), p );
   REQUIRE( txs.size() == 1 );
   CHECK( hasStep( txs, StepKind::kImplyIntegral, kNone, 2 ) );
}

TEMPLATE_TEST_CASE( "domcol fixes the dominated column", "[presolvers]", double, Rational )
{
   const auto p = toProblem<TestType>( domColModel() );
   const auto txs = runOnce( DomCol<TestType>(), p );
   REQUIRE( txs.size() == 1 );
   const auto fx = findStep( txs, StepKind::kFixColumn, kNone, 1 );
   REQUIRE( fx.has_value() );
   CHECK( fx->value.value() == exactly<TestType>( 0 ) );
}

TEMPLATE_TEST_CASE( "dualinfer fixes a continuous column with a positive reduced cost",
                    "[presolvers]", double, Rational )
{
   // t is the more expensive continuous singleton of the equation
   const auto p = toProblem<TestType>( twoSingletons() );
   const auto txs = runOnce( DualInfer<TestType>(), p );
   REQUIRE( txs.size() == 1 );
   const auto fx = findStep( txs, StepKind::kFixColumn, kNone, 3 );
   REQUIRE( fx.has_value() );
   CHECK( fx->value.value() == exactly<TestType>( 0 ) );
}

TEMPLATE_TEST_CASE( "probing fixes heads of implication chains", "[presolvers]", double,
                    Rational )
{
   const auto p = toProblem<TestType>( probingChains( 60, 20 ) );
   const auto txs = runOnce( Probing<TestType>(), p );
   for( int head : { 0, 20, 40 } )
   {
      const auto fx = findStep( txs, StepKind::kFixColumn, kNone, head );
      REQUIRE( fx.has_value() );
      CHECK( fx->value.value() == exactly<TestType>( 0 ) );
   }
   for( const auto& s : changes( txs ) )
      CHECK( s.col % 20 == 0 );
}

TEMPLATE_TEST_CASE( "probing is identical with and without internal parallelism",
                    "[presolvers]", double, Rational )
{
   const auto p = toProblem<TestType>( probingChains( 400, 20 ) );
   const auto seq = changes( runOnce( Probing<TestType>(), p, 0, false ) );
   const auto par = changes( runOnce( Probing<TestType>(), p, 0, true ) );
   REQUIRE( seq.size() == par.size() );
   for( std::size_t k = 0; k < seq.size(); ++k )
   {
      CHECK( seq[k].kind == par[k].kind );
      CHECK( seq[k].col == par[k].col );
      CHECK( seq[k].value == par[k].value );
   }
}

TEMPLATE_TEST_CASE( "probing on a binary equation finds the complement", "[presolvers]",
                    double, Rational )
{
   const auto p = toProblem<TestType>( parallelTriple() );
   const auto txs = runOnce( Probing<TestType>(), p );
   // x + y = 1 in effect: each probe yields an aggregation
   CHECK( txs.size() == 2 );
   for( const auto& s : changes( txs ) )
   {
      CHECK( s.kind == StepKind::kSubstituteAffine );
      CHECK( s.value.value() == exactly<TestType>( 1 ) );
      CHECK( s.factor == exactly<TestType>( -1 ) );
   }
}

TEMPLATE_TEST_CASE( "substitution eliminates an implied free column", "[presolvers]", double,
                    Rational )
{
   const auto p = toProblem<TestType>( substitutionModel() );
   const auto txs = runOnce( Substitution<TestType>(), p );
   REQUIRE( txs.size() == 1 );
   CHECK( hasStep( txs, StepKind::kSubstituteColumn, 0, 0 ) );
}

TEMPLATE_TEST_CASE( "sparsify cancels the equation's support in other rows", "[presolvers]",
                    double, Rational )
{
   const auto p = toProblem<TestType>( sparsifyModel() );
   const auto txs = runOnce( Sparsify<TestType>(), p );
   REQUIRE( txs.size() == 2 );
   const auto steps = changes( txs );
   REQUIRE( steps.size() == 2 );
   CHECK( steps[0].kind == StepKind::kAddScaledRow );
   CHECK( steps[0].row == 1 );
   CHECK( steps[0].aux == 0 );
   CHECK( steps[0].factor == exactly<TestType>( -1 ) );
   CHECK( steps[1].row == 2 );
   CHECK( steps[1].factor == exactly<TestType>( -2 ) );
}

TEMPLATE_TEST_CASE( "trivial presolve handles empty and singleton structures", "[presolvers]",
                    double, Rational )
{
   const auto p = toProblem<TestType>( trivialModel() );
   const auto txs = runOnce( Trivial<TestType>(), p );
   // empty column at its cheaper bound
   const auto fx = findStep( txs, StepKind::kFixColumn, kNone, 2 );
   REQUIRE( fx.has_value() );
   CHECK( fx->value.value() == exactly<TestType>( 4 ) );
   // singleton row becomes a bound
   CHECK( hasStep( txs, StepKind::kChangeUpper, kNone, 0 ) );
   CHECK( hasStep( txs, StepKind::kMarkRowRedundant, 0, kNone ) );
   // redundant by activity, and empty
   CHECK( hasStep( txs, StepKind::kMarkRowRedundant, 1, kNone ) );
   CHECK( hasStep( txs, StepKind::kMarkRowRedundant, 2, kNone ) );
}

TEMPLATE_TEST_CASE( "trivial presolve detects an infeasible empty row", "[presolvers]", double,
                    Rational )
{
   ModelSpec m;
   const int x = m.addCol( 1, 0, 1, true );
   m.addRow( { { x, 1 } }, -kInf, 1 );
   m.addRow( {}, 1, 2 );
   const auto p = toProblem<TestType>( m );
   const auto txs = runOnce( Trivial<TestType>(), p );
   const bool verdict = std::any_of( txs.begin(), txs.end(), []( const auto& t ) {
      return !t.steps.empty() && t.steps.back().kind == StepKind::kInfeasible;
   } );
   CHECK( verdict );
}

TEST_CASE( "registry lists every presolver in apply order", "[presolvers]" )
{
   const auto list = makeDefaultPresolvers<double>();
   const std::vector<std::string> expected = {
       "colsingleton",  "coefftightening", "propagation",  "simpleprobing", "parallelrows",
       "parallelcols",  "stuffing",        "dualfix",      "fixcontinuous", "simplifyineq",
       "doubletoneq",   "implint",         "domcol",       "dualinfer",     "probing",
       "substitution",  "sparsify" };
   REQUIRE( list.size() == expected.size() );
   for( std::size_t k = 0; k < list.size(); ++k )
   {
      CHECK( list[k]->name() == expected[k] );
      CHECK( list[k]->descriptor().applyOrder == static_cast<int>( k ) );
      CHECK( list[k]->descriptor().delayed == ( expected[k] == "sparsify" ) );
   }
   CHECK( list[0]->descriptor().tier == Tier::kFast );
   CHECK( list[3]->descriptor().tier == Tier::kMedium );
   CHECK( list[11]->descriptor().tier == Tier::kExhaustive );
   for( const char* parallel : { "probing", "domcol", "sparsify" } )
   {
      const auto it = std::find_if( list.begin(), list.end(),
                                    [&]( const auto& p ) { return p->name() == parallel; } );
      REQUIRE( it != list.end() );
      CHECK( ( *it )->descriptor().internalParallel );
   }
}

TEMPLATE_TEST_CASE( "presolvers do not mutate the problem they read", "[presolvers]", double,
                    Rational )
{
   auto list = makeDefaultPresolvers<TestType>();
   list.push_back( std::make_unique<Trivial<TestType>>() );
   for( std::uint64_t seed = 1; seed <= 30; ++seed )
   {
      const auto p = toProblem<TestType>( randomSmallMip( seed, 8, 6, 3 ) );
      const std::size_t before = p.fingerprint();
      for( const auto& pr : list )
      {
         runOnce( *pr, p, 0, true );
         CHECK( p.fingerprint() == before );
      }
   }
}

namespace
{

/// applies one call of one presolver and compares the oracle before and after
template <typename REAL>
std::string
singleCallSound( const Presolver<REAL>& presolver, const ModelSpec& spec )
{
   Problem<REAL> p = toProblem<REAL>( spec );
   const REAL tol = NumTraits<REAL>::exact ? REAL( 0 ) : REAL( 1e-6 );
   const auto before = solveByEnumeration( p, tol );
   const auto txs = runOnce( presolver, p, 0 );
   PostsolveRecord<REAL> record( p );
   ApplyEngine<REAL> engine( p, record, { presolver.name() } );
   engine.beginBatch();
   std::vector<ApplyOutcome> out;
   const ApplyVerdict verdict = engine.applyAll( txs, out );
   if( verdict == ApplyVerdict::kInfeasible )
      return before.status == OracleStatus::kInfeasible ? "" : "false infeasibility";
   if( verdict == ApplyVerdict::kUnbounded )
      return before.status != OracleStatus::kOptimal ? "" : "false unboundedness";
   std::string why;
   if( !p.checkConsistency( &why ) )
      return "inconsistent caches: " + why;
   const auto after = solveByEnumeration( p, tol );
   if( after.status != before.status )
      return "status changed";
   if( before.status == OracleStatus::kOptimal )
   {
      const double diff =
          NumTraits<REAL>::toDouble( REAL( after.objective - before.objective ) );
      if( NumTraits<REAL>::exact ? after.objective != before.objective : std::abs( diff ) > 1e-6 )
         return "optimum changed by " + std::to_string( diff );
   }
   return "";
}

} // namespace

TEMPLATE_TEST_CASE( "every presolver alone preserves the optimum", "[presolvers][oracle]",
                    double, Rational )
{
   auto list = makeDefaultPresolvers<TestType>();
   list.push_back( std::make_unique<Trivial<TestType>>() );
   for( const auto& pr : list )
   {
      int failures = 0;
      std::string first;
      for( std::uint64_t seed = 1; seed <= 150; ++seed )
      {
         const ModelSpec spec = randomSmallMip( 70000 + seed, 8, 6, seed % 3 == 0 ? 3 : 0 );
         const std::string why = singleCallSound( *pr, spec );
         if( !why.empty() && failures++ == 0 )
            first = "seed " + std::to_string( 70000 + seed ) + ": " + why;
      }
      INFO( pr->name() << " " << first );
      CHECK( failures == 0 );
   }
}
