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
#include "parapre/core/Scheduler.hpp"

#include <chrono>
#include <memory>

#include <tbb/info.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

#include "parapre/presolvers/Registry.hpp"
#include "parapre/presolvers/Trivial.hpp"

namespace parapre
{

namespace
{

constexpr int kMaxTrivialPasses = 20;
/// compress once this share of the stored entries is dead
constexpr double kCompressThreshold = 0.15;

} // namespace

std::string_view
presolveStatusName( PresolveStatus s )
{
   switch( s )
   {
   case PresolveStatus::kReduced:
      return "reduced";
   case PresolveStatus::kUnchanged:
      return "unchanged";
   case PresolveStatus::kInfeasible:
      return "infeasible";
   case PresolveStatus::kUnbounded:
      return "unbounded";
   }
   return "unknown";
}

bool
enoughReductions( const ReductionCounts& counts, int ncols, int nrows, int nnz,
                  double abortFactor )
{
   return 0.1 * static_cast<double>( counts.boundChanges ) +
                  static_cast<double>( counts.deletedCols ) >
              abortFactor * ncols ||
          static_cast<double>( counts.sideChanges + counts.deletedRows ) >
              abortFactor * nrows ||
          static_cast<double>( counts.coeffChanges ) > abortFactor * nnz;
}

template <typename REAL>
Num<REAL>
makeNum( const PresolveOptions& options )
{
   if constexpr( NumTraits<REAL>::exact )
      return Num<REAL>( REAL( 0 ), REAL( 0 ), REAL( options.hugeval ) );
   else
      return Num<REAL>( options.epsilon, options.feastol, options.hugeval );
}

template <typename REAL>
Problem<REAL>
extractReduced( const Problem<REAL>& problem, std::vector<int>& colMap,
                std::vector<int>& rowMap )
{
   Problem<REAL> reduced( problem.getNum() );
   reduced.setName( problem.getName() );
   reduced.setObjOffset( problem.getObjOffset() );
   colMap.clear();
   rowMap.clear();
   std::vector<int> newCol( problem.getNCols(), -1 );
   for( int j = 0; j < problem.getNCols(); ++j )
   {
      if( !problem.isColActive( j ) )
         continue;
      newCol[j] = reduced.addCol( problem.getColName( j ), problem.getObj( j ),
                                  problem.getLower( j ), problem.getUpper( j ),
                                  problem.isIntegral( j ) );
      colMap.push_back( j );
   }
   for( int i = 0; i < problem.getNRows(); ++i )
   {
      if( !problem.isRowActive( i ) )
         continue;
      const int r = reduced.addRow( problem.getRowName( i ), problem.getLhs( i ),
                                    problem.getRhs( i ) );
      rowMap.push_back( i );
      problem.forEachInRow( i, [&]( int j, const REAL& a ) {
         reduced.addEntry( r, newCol[j], a );
      } );
   }
   reduced.finalize();
   return reduced;
}

namespace
{

template <typename REAL>
class Driver
{
 public:
   Driver( const Problem<REAL>& original, const PresolveOptions& opts,
           std::ostream* log )
       : options( opts ), problem( original ), record( original ),
         msg( opts.verbosity, log )
   {
      presolvers = makeDefaultPresolvers<REAL>();
      std::vector<std::string> names;
      for( auto& p : presolvers )
      {
         PresolverDescriptor& d = p->descriptor();
         if( auto it = options.enabled.find( d.name ); it != options.enabled.end() )
            d.enabled = it->second;
         if( auto it = options.internalParallel.find( d.name );
             it != options.internalParallel.end() )
            d.internalParallel = it->second;
         names.push_back( d.name );
         stats.presolvers.push_back( { d.name } );
      }
      trivialId = static_cast<int>( names.size() );
      names.push_back( trivial.name() );
      stats.presolvers.push_back( { trivial.name() } );
      rowMarks.assign( presolvers.size(), ChangeJournal::kEverything );
      colMarks.assign( presolvers.size(), ChangeJournal::kEverything );
      threads = options.threads > 0 ? options.threads : tbb::info::default_concurrency();
      engine = std::make_unique<ApplyEngine<REAL>>( problem, record, std::move( names ), &msg );
      engine->setKeepAppliedLog( true );
   }

   PresolveResult<REAL>
   run()
   {
      const auto start = std::chrono::steady_clock::now();
      stats.threads = threads;
      stats.nrowsBefore = problem.getNActiveRows();
      stats.ncolsBefore = problem.getNActiveCols();
      stats.nnzBefore = problem.getActiveNnz();
      msg.info( "presolving {} rows {} cols {} nonzeros with {} threads",
                stats.nrowsBefore, stats.ncolsBefore, stats.nnzBefore, threads );

      ApplyVerdict verdict = runTrivial( 0 );
      Tier tier = Tier::kFast;
      bool delayedEnabled = false;
      bool anyDelayed = false;
      for( const auto& p : presolvers )
         anyDelayed = anyDelayed || ( p->descriptor().enabled && p->descriptor().delayed );

      int round = 0;
      while( verdict == ApplyVerdict::kOk && round < options.maxRounds )
      {
         ++round;
         msg.detailed( "round {} tier {}", round, tierName( tier ) );
         std::vector<int> active;
         for( int p = 0; p < static_cast<int>( presolvers.size() ); ++p )
         {
            const PresolverDescriptor& d = presolvers[p]->descriptor();
            if( d.tier == tier && d.enabled && ( !d.delayed || delayedEnabled ) )
               active.push_back( p );
         }
         if( threads == 1 && options.applyImmediately )
            verdict = runImmediate( active );
         else
            verdict = runParallel( active );
         if( verdict == ApplyVerdict::kOk )
            verdict = runTrivial( round );
         if( problem.deadFraction() >= kCompressThreshold )
            problem.compress();
         ++stats.roundsByTier[static_cast<int>( tier )];
         const ReductionCounts counts = engine->takeCounts();
         stats.reductions += counts;
         if( verdict != ApplyVerdict::kOk )
            break;
         if( enoughReductions( counts, problem.getNActiveCols(), problem.getNActiveRows(),
                               problem.getActiveNnz(), options.abortFactor ) )
            tier = Tier::kFast;
         else if( tier == Tier::kFast )
            tier = Tier::kMedium;
         else if( tier == Tier::kMedium )
            tier = Tier::kExhaustive;
         else if( !delayedEnabled && anyDelayed )
         {
            delayedEnabled = true;
            tier = Tier::kFast;
         }
         else
            break;
      }
      stats.rounds = round;
      stats.transactions = engine->getTransactionCounts();

      PresolveResult<REAL> result;
      switch( verdict )
      {
      case ApplyVerdict::kInfeasible:
         result.status = PresolveStatus::kInfeasible;
         break;
      case ApplyVerdict::kUnbounded:
         result.status = PresolveStatus::kUnbounded;
         break;
      case ApplyVerdict::kOk:
         result.status = stats.transactions.applied > 0 ? PresolveStatus::kReduced
                                                         : PresolveStatus::kUnchanged;
         problem.compress();
         result.reduced = extractReduced( problem, record.colMap, record.rowMap );
         break;
      }
      stats.nrowsAfter = problem.getNActiveRows();
      stats.ncolsAfter = problem.getNActiveCols();
      stats.nnzAfter = problem.getActiveNnz();
      stats.seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start )
                          .count();
      msg.info( "presolve {} after {} rounds: {} rows {} cols {} nonzeros",
                presolveStatusName( result.status ), stats.rounds, stats.nrowsAfter,
                stats.ncolsAfter, stats.nnzAfter );
      result.record = std::move( record );
      result.stats = std::move( stats );
      result.appliedLog = engine->getAppliedLog();
      return result;
   }

 private:
   PresolveView<REAL>
   makeView( int p, std::vector<int>& rows, std::vector<int>& cols )
   {
      const ChangeJournal& journal = engine->getJournal();
      rows = journal.rowsSince( rowMarks[p], problem.getNRows() );
      cols = journal.colsSince( colMarks[p], problem.getNCols() );
      rowMarks[p] = journal.rowMark();
      colMarks[p] = journal.colMark();
      const PresolverDescriptor& d = presolvers[p]->descriptor();
      return PresolveView<REAL>{ problem, rows, cols, threads > 1 && d.internalParallel };
   }

   ApplyVerdict
   applyBatch( std::vector<Transaction<REAL>>& list )
   {
      engine->beginBatch();
      std::vector<ApplyOutcome> outcomes;
      const ApplyVerdict v = engine->applyAll( list, outcomes );
      for( std::size_t t = 0; t < outcomes.size(); ++t )
      {
         PresolverStats& ps = stats.presolvers[list[t].presolver];
         ++ps.found;
         switch( outcomes[t].status )
         {
         case TxStatus::kApplied:
            ++ps.applied;
            break;
         case TxStatus::kDiscarded:
            ++ps.discarded;
            break;
         case TxStatus::kCanceled:
            ++ps.canceled;
            break;
         }
      }
      return v;
   }

   static void
   tag( std::vector<Transaction<REAL>>& list, int id )
   {
      for( auto& t : list )
         t.presolver = id;
   }

   ApplyVerdict
   runTrivial( int round )
   {
      for( int pass = 0; pass < kMaxTrivialPasses; ++pass )
      {
         const long before = engine->getTransactionCounts().applied;
         std::vector<Transaction<REAL>> list;
         const PresolveView<REAL> view{ problem, {}, {}, false };
         trivial.run( view, list );
         if( list.empty() )
            break;
         tag( list, trivialId );
         msg.detailed( "round {} tier trivial", round );
         const ApplyVerdict v = applyBatch( list );
         if( v != ApplyVerdict::kOk )
            return v;
         if( engine->getTransactionCounts().applied == before )
            break;
      }
      return ApplyVerdict::kOk;
   }

   ApplyVerdict
   runParallel( const std::vector<int>& active )
   {
      const std::size_t n = active.size();
      std::vector<std::vector<Transaction<REAL>>> slots( n );
      std::vector<std::vector<int>> rows( n );
      std::vector<std::vector<int>> cols( n );
      std::vector<PresolveView<REAL>> views;
      views.reserve( n );
      for( std::size_t s = 0; s < n; ++s )
         views.push_back( makeView( active[s], rows[s], cols[s] ) );
      auto body = [&]( std::size_t s ) { presolvers[active[s]]->run( views[s], slots[s] ); };
      if( threads > 1 )
      {
         tbb::task_arena arena( threads );
         arena.execute( [&] { tbb::parallel_for( std::size_t( 0 ), n, body ); } );
      }
      else
         for( std::size_t s = 0; s < n; ++s )
            body( s );

      std::vector<Transaction<REAL>> list;
      for( std::size_t s = 0; s < n; ++s )
      {
         tag( slots[s], active[s] );
         if( !slots[s].empty() )
            ++stats.presolvers[active[s]].calls;
         std::move( slots[s].begin(), slots[s].end(), std::back_inserter( list ) );
      }
      return applyBatch( list );
   }

   ApplyVerdict
   runImmediate( const std::vector<int>& active )
   {
      for( int p : active )
      {
         std::vector<int> rows;
         std::vector<int> cols;
         const PresolveView<REAL> view = makeView( p, rows, cols );
         std::vector<Transaction<REAL>> list;
         presolvers[p]->run( view, list );
         if( list.empty() )
            continue;
         ++stats.presolvers[p].calls;
         tag( list, p );
         const ApplyVerdict v = applyBatch( list );
         if( v != ApplyVerdict::kOk )
            return v;
      }
      return ApplyVerdict::kOk;
   }

   const PresolveOptions& options;
   Problem<REAL> problem;
   PostsolveRecord<REAL> record;
   Message msg;
   std::vector<std::unique_ptr<Presolver<REAL>>> presolvers;
   Trivial<REAL> trivial;
   int trivialId = 0;
   std::vector<std::size_t> rowMarks;
   std::vector<std::size_t> colMarks;
   int threads = 1;
   std::unique_ptr<ApplyEngine<REAL>> engine;
   PresolveStatistics stats;
};

} // namespace

template <typename REAL>
PresolveResult<REAL>
presolve( const Problem<REAL>& problem, const PresolveOptions& options,
          std::ostream* log )
{
   Driver<REAL> driver( problem, options, log );
   return driver.run();
}

template Num<double>
makeNum<double>( const PresolveOptions& );
template Num<Rational>
makeNum<Rational>( const PresolveOptions& );
template PresolveResult<double>
presolve<double>( const Problem<double>&, const PresolveOptions&, std::ostream* );
template PresolveResult<Rational>
presolve<Rational>( const Problem<Rational>&, const PresolveOptions&, std::ostream* );
template Problem<double>
extractReduced<double>( const Problem<double>&, std::vector<int>&, std::vector<int>& );
template Problem<Rational>
extractReduced<Rational>( const Problem<Rational>&, std::vector<int>&, std::vector<int>& );

} // namespace parapre
