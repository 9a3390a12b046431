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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#include "common/Oracle.hpp"
#include "parapre/core/Scheduler.hpp"
#include "parapre/io/Mps.hpp"
#include "parapre/io/Solution.hpp"
#include "parapre/io/Statistics.hpp"

using namespace parapre;
using namespace parapre::test;
namespace fs = std::filesystem;

namespace
{

const std::string kCli = PARAPRE_CLI_PATH;
const fs::path kData = PARAPRE_TEST_DATA_DIR;

/// fresh scratch directory per test case
struct Scratch
{
   fs::path dir;

   explicit Scratch( const std::string& tag )
   {
      dir = fs::temp_directory_path() /
            ( "parapre_cli_" + tag + "_" + std::to_string( ::getpid() ) );
      fs::remove_all( dir );
      fs::create_directories( dir );
   }

   ~Scratch()
   {
      std::error_code ec;
      fs::remove_all( dir, ec );
   }

   std::string
   path( const std::string& name ) const
   {
      return ( dir / name ).string();
   }
};

int
run( const std::string& args )
{
   const int status = std::system( ( kCli + " " + args + " 2>/dev/null >/dev/null" ).c_str() );
   return WIFEXITED( status ) ? WEXITSTATUS( status ) : -1;
}

std::string
slurp( const std::string& path )
{
   std::ifstream in( path );
   std::ostringstream s;
   s << in.rdbuf();
   return s.str();
}

void
writeText( const std::string& path, const std::string& text )
{
   std::ofstream( path ) << text;
}

} // namespace

TEST_CASE( "cli presolves and postsolves the knapsack example", "[cli]" )
{
   for( const std::string mode : { "float64", "rational" } )
   {
      Scratch s( "roundtrip_" + mode );
      const std::string in = ( kData / "knapsack.mps" ).string();
      REQUIRE( run( "presolve " + in + " -o " + s.path( "red.mps" ) + " -r " +
                    s.path( "rec" ) + " -s " + s.path( "stats" ) +
                    " --numerics.mode " + mode + " --message.verbosity 0" ) == 0 );
      std::istringstream stats( slurp( s.path( "stats" ) ) );
      const auto kv = readStatistics( stats );
      CHECK( kv.at( "rows.before" ) == "1" );

      // solve the reduced problem independently and postsolve its optimum
      const auto reduced = readMpsFile<Rational>( s.path( "red.mps" ), Num<Rational>() );
      const auto opt = solveByEnumeration( reduced, Rational( 0 ) );
      REQUIRE( opt.status == OracleStatus::kOptimal );
      std::vector<std::string> names;
      for( int j = 0; j < reduced.getNCols(); ++j )
         names.push_back( reduced.getColName( j ) );
      {
         std::ofstream sol( s.path( "red.sol" ) );
         writeSolution( sol, names, opt.x, opt.objective );
      }
      REQUIRE( run( "postsolve --record " + s.path( "rec" ) + " --solution " +
                    s.path( "red.sol" ) + " -o " + s.path( "orig.sol" ) ) == 0 );
      std::istringstream orig( slurp( s.path( "orig.sol" ) ) );
      const auto x = readSolution<Rational>( orig, { "x1", "x2" } );
      CHECK( x == std::vector<Rational>{ Rational( 1 ), Rational( 0 ) } );
      CHECK( slurp( s.path( "orig.sol" ) ).rfind( "=obj= -2\n", 0 ) == 0 );
   }
}

TEST_CASE( "cli exit codes", "[cli]" )
{
   Scratch s( "exit" );
   writeText( s.path( "infeasible.mps" ), "NAME inf\nROWS\n N obj\n G c\nCOLUMNS\n"
                                          " x obj 1 c 1\nRHS\n RHS c 3\nBOUNDS\n"
                                          " UP BND x 1\nENDATA\n" );
   CHECK( run( "presolve " + s.path( "infeasible.mps" ) + " -s " + s.path( "st" ) ) == 2 );
   CHECK( slurp( s.path( "st" ) ).rfind( "status=infeasible", 0 ) == 0 );
   writeText( s.path( "unbounded.mps" ), "NAME unb\nROWS\n N obj\n G c\nCOLUMNS\n"
                                         " x obj -1 c 1\nRHS\n RHS c 0\nENDATA\n" );
   CHECK( run( "presolve " + s.path( "unbounded.mps" ) + " -s " + s.path( "st2" ) ) == 3 );
   CHECK( run( "presolve " + s.path( "missing.mps" ) ) == 1 );
   writeText( s.path( "broken.mps" ), "NAME b\nROWS\n N obj\nWHAT\nENDATA\n" );
   CHECK( run( "presolve " + s.path( "broken.mps" ) ) == 1 );
   CHECK( run( "presolve " + ( kData / "knapsack.mps" ).string() + " --no-such-flag" ) == 1 );
   CHECK( run( "" ) == 1 );
   CHECK( run( "--help" ) == 0 );
}

TEST_CASE( "cli reads parameter files and the environment", "[cli]" )
{
   Scratch s( "params" );
   writeText( s.path( "p.set" ), "presolve.threads = 2\nmessage.verbosity = 0\n" );
   const std::string in = ( kData / "knapsack.mps" ).string();
   REQUIRE( run( "presolve " + in + " -p " + s.path( "p.set" ) + " -o " + s.path( "r.mps" ) +
                 " -r " + s.path( "r" ) + " -s " + s.path( "st" ) ) == 0 );
   CHECK( slurp( s.path( "st" ) ).find( "threads=2\n" ) != std::string::npos );
   REQUIRE( run( "presolve " + in + " -p " + s.path( "p.set" ) + " --presolve.threads 3 -o " +
                 s.path( "r.mps" ) + " -r " + s.path( "r" ) + " -s " + s.path( "st" ) ) == 0 );
   CHECK( slurp( s.path( "st" ) ).find( "threads=3\n" ) != std::string::npos );
   writeText( s.path( "bad.set" ), "presolve.nonsense = 1\n" );
   CHECK( run( "presolve " + in + " -p " + s.path( "bad.set" ) ) == 1 );
   ::setenv( "PARAPRE_PRESOLVE_THREADS", "4", 1 );
   const int code = run( "presolve " + in + " --message.verbosity 0 -o " + s.path( "r.mps" ) +
                         " -r " + s.path( "r" ) + " -s " + s.path( "st" ) );
   ::unsetenv( "PARAPRE_PRESOLVE_THREADS" );
   REQUIRE( code == 0 );
   CHECK( slurp( s.path( "st" ) ).find( "threads=4\n" ) != std::string::npos );
}

TEST_CASE( "cli report summarizes verbose logs", "[cli]" )
{
   Scratch s( "report" );
   const std::string in = ( kData / "knapsack.mps" ).string();
   REQUIRE( run( "presolve " + in + " --message.verbosity 4 -l " + s.path( "a.log" ) + " -o " +
                 s.path( "r.mps" ) + " -r " + s.path( "r" ) + " -s " + s.path( "st" ) ) == 0 );
   REQUIRE( run( "report " + s.path( "a.log" ) + " -o " + s.path( "report.txt" ) ) == 0 );
   const std::string text = slurp( s.path( "report.txt" ) );
   CHECK( text.rfind( "instances 1\n", 0 ) == 0 );
   CHECK( text.find( "coefftightening (co)" ) != std::string::npos );
   CHECK( run( "report " + s.path( "none.log" ) ) == 1 );
}
