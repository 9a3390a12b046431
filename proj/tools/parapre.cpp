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
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parapre/core/Postsolve.hpp"
#include "parapre/core/Scheduler.hpp"
#include "parapre/io/Mps.hpp"
#include "parapre/io/Parameters.hpp"
#include "parapre/io/RecordIO.hpp"
#include "parapre/io/Report.hpp"
#include "parapre/io/Solution.hpp"
#include "parapre/io/Statistics.hpp"

namespace
{

using namespace parapre;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitUnbounded = 3;

struct PresolveArgs
{
   std::string input;
   std::string reduced;
   std::string record;
   std::string statistics;
   std::string log;
   std::string appliedLog;
};

struct PostsolveArgs
{
   std::string record;
   std::string solution;
   std::string output;
};

struct ReportArgs
{
   std::vector<std::string> paths;
   std::string output;
};

/// output stream that is stdout for "-" or an empty path
class Output
{
 public:
   explicit Output( const std::string& path, bool binary = false )
   {
      if( path.empty() || path == "-" )
         return;
      file = std::make_unique<std::ofstream>(
          path, binary ? std::ios::out | std::ios::binary : std::ios::out );
      if( !*file )
         throw std::runtime_error( "cannot write '" + path + "'" );
   }

   std::ostream&
   get()
   {
      return file ? *file : std::cout;
   }

 private:
   std::unique_ptr<std::ofstream> file;
};

std::string
defaultPath( const std::string& input, const std::string& suffix )
{
   std::filesystem::path p( input );
   std::string stem = p.filename().string();
   for( const char* ext : { ".mps", ".MPS" } )
      if( stem.size() > 4 && stem.ends_with( ext ) )
         stem.resize( stem.size() - 4 );
   return ( p.parent_path() / ( stem + suffix ) ).string();
}

template <typename REAL>
int
runPresolve( const PresolveArgs& args, const ParameterSet& params )
{
   const PresolveOptions options = params.presolveOptions();
   const Num<REAL> num = makeNum<REAL>( options );
   MpsInfo info;
   const Problem<REAL> problem =
       readMpsFile<REAL>( args.input, num, params.mpsOptions(), &info );
   if( info.maximize && options.verbosity >= 2 )
      std::cerr << "objective sense is maximize; the reduced problem and all "
                   "objective values are in minimization form\n";

   std::unique_ptr<std::ofstream> logFile;
   std::ostream* log = &std::cerr;
   if( !args.log.empty() )
   {
      logFile = std::make_unique<std::ofstream>( args.log );
      if( !*logFile )
         throw std::runtime_error( "cannot write '" + args.log + "'" );
      log = logFile.get();
   }

   PresolveResult<REAL> result = presolve( problem, options, log );

   {
      Output stats( args.statistics );
      writeStatistics( stats.get(), result.stats, result.status );
   }
   if( !args.appliedLog.empty() )
   {
      Output applied( args.appliedLog );
      for( const std::string& line : result.appliedLog )
         applied.get() << line << '\n';
   }

   switch( result.status )
   {
   case PresolveStatus::kInfeasible:
      std::cerr << "problem is infeasible\n";
      return kExitInfeasible;
   case PresolveStatus::kUnbounded:
      std::cerr << "problem is unbounded or infeasible\n";
      return kExitUnbounded;
   case PresolveStatus::kReduced:
   case PresolveStatus::kUnchanged:
      break;
   }

   const std::string reducedPath =
       args.reduced.empty() ? defaultPath( args.input, ".reduced.mps" ) : args.reduced;
   const std::string recordPath =
       args.record.empty() ? defaultPath( args.input, ".postsolve" ) : args.record;
   writeMpsFile( result.reduced, reducedPath );
   RecordTolerances tol;
   tol.epsilon = options.epsilon;
   tol.feastol = options.feastol;
   tol.hugeval = options.hugeval;
   writeRecordFile( recordPath, result.record, tol, params.recordFormat() );
   return kExitOk;
}

template <typename REAL>
int
runPostsolve( const PostsolveArgs& args )
{
   RecordTolerances tol;
   const PostsolveRecord<REAL> record = readRecordFile<REAL>( args.record, &tol );
   std::vector<std::string> reducedNames;
   reducedNames.reserve( record.colMap.size() );
   for( int j : record.colMap )
      reducedNames.push_back( record.colNames[j] );
   const std::vector<REAL> reduced = readSolutionFile<REAL>( args.solution, reducedNames );
   const Num<REAL> num( REAL( tol.epsilon ), REAL( tol.feastol ), REAL( tol.hugeval ) );
   const Solution<REAL> sol = postsolvePrimal( record, reduced, num );
   Output out( args.output );
   writeSolution( out.get(), record.colNames, sol.values, sol.objective );
   return kExitOk;
}

int
runReport( const ReportArgs& args )
{
   ConflictReport report;
   for( const std::string& p : args.paths )
      report.addPath( p );
   Output out( args.output );
   report.write( out.get() );
   return kExitOk;
}

} // namespace

int
main( int argc, char** argv )
{
   CLI::App app{ "parapre: parallel transaction based presolve for MIP and LP" };
   app.require_subcommand( 1 );

   ParameterSet params;
   std::string paramFile;
   std::map<std::string, std::string> flagValues;

   PresolveArgs pre;
   CLI::App* presolveCmd = app.add_subcommand( "presolve", "presolve an MPS file" );
   presolveCmd->add_option( "input", pre.input, "problem in MPS format" )
       ->required()
       ->check( CLI::ExistingFile );
   presolveCmd->add_option( "-o,--reduced", pre.reduced,
                            "reduced problem (default <input>.reduced.mps)" );
   presolveCmd->add_option( "-r,--record", pre.record,
                            "postsolve record (default <input>.postsolve)" );
   presolveCmd->add_option( "-s,--statistics", pre.statistics,
                            "statistics as key=value lines (default stdout)" );
   presolveCmd->add_option( "-l,--log", pre.log, "log file (default stderr)" );
   presolveCmd->add_option( "--applied-log", pre.appliedLog,
                            "applied transactions, one per line" );
   presolveCmd->add_option( "-p,--parameters", paramFile, "parameter file" )
       ->check( CLI::ExistingFile );
   for( const ParameterInfo& info : params.known() )
      presolveCmd
          ->add_option( "--" + info.key, flagValues[info.key],
                        info.description + " [" + info.defaultValue + "]" )
          ->type_name( "VALUE" );

   PostsolveArgs post;
   CLI::App* postsolveCmd =
       app.add_subcommand( "postsolve", "map a reduced solution back" );
   postsolveCmd->add_option( "--record", post.record, "postsolve record" )
       ->required()
       ->check( CLI::ExistingFile );
   postsolveCmd->add_option( "--solution", post.solution, "solution of the reduced problem" )
       ->required()
       ->check( CLI::ExistingFile );
   postsolveCmd->add_option( "-o,--output", post.output,
                             "original solution (default stdout)" );

   ReportArgs rep;
   CLI::App* reportCmd =
       app.add_subcommand( "report", "conflict tables from verbosity 4 logs" );
   reportCmd->add_option( "logs", rep.paths, "log files or directories, one instance each" )
       ->required()
       ->check( CLI::ExistingPath );
   reportCmd->add_option( "-o,--output", rep.output, "report file (default stdout)" );

   try
   {
      app.parse( argc, argv );
   }
   catch( const CLI::ParseError& e )
   {
      return app.exit( e ) == 0 ? kExitOk : kExitError;
   }

   try
   {
      if( *presolveCmd )
      {
         if( !paramFile.empty() )
            params.loadFile( paramFile );
         params.loadEnvironment();
         for( const ParameterInfo& info : params.known() )
            if( presolveCmd->count( "--" + info.key ) > 0 )
               params.setFlag( info.key, flagValues[info.key] );
         if( params.presolveOptions().numericMode == NumericMode::kRational )
            return runPresolve<Rational>( pre, params );
         return runPresolve<double>( pre, params );
      }
      if( *postsolveCmd )
      {
         if( peekRecordModeFile( post.record ) == NumericMode::kRational )
            return runPostsolve<Rational>( post );
         return runPostsolve<double>( post );
      }
      if( *reportCmd )
         return runReport( rep );
   }
   catch( const std::exception& e )
   {
      std::cerr << "error: " << e.what() << '\n';
      return kExitError;
   }
   return kExitError;
}
