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
#include "parapre/io/Statistics.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace parapre
{

void
writeStatistics( std::ostream& out, const PresolveStatistics& s,
                 PresolveStatus status )
{
   auto kv = [&]( std::string_view key, const auto& value ) {
      out << key << '=' << value << '\n';
   };
   kv( "status", presolveStatusName( status ) );
   kv( "threads", s.threads );
   kv( "time.seconds", fmt::format( "{:.6f}", s.seconds ) );
   kv( "rounds", s.rounds );
   kv( "rounds.fast", s.roundsByTier[0] );
   kv( "rounds.medium", s.roundsByTier[1] );
   kv( "rounds.exhaustive", s.roundsByTier[2] );
   kv( "transactions.found", s.transactions.found );
   kv( "transactions.applied", s.transactions.applied );
   kv( "transactions.discarded", s.transactions.discarded );
   kv( "transactions.canceled", s.transactions.canceled );
   kv( "reductions.bound_changes", s.reductions.boundChanges );
   kv( "reductions.deleted_cols", s.reductions.deletedCols );
   kv( "reductions.side_changes", s.reductions.sideChanges );
   kv( "reductions.deleted_rows", s.reductions.deletedRows );
   kv( "reductions.coeff_changes", s.reductions.coeffChanges );
   kv( "rows.before", s.nrowsBefore );
   kv( "rows.after", s.nrowsAfter );
   kv( "cols.before", s.ncolsBefore );
   kv( "cols.after", s.ncolsAfter );
   kv( "nnz.before", s.nnzBefore );
   kv( "nnz.after", s.nnzAfter );
   for( const PresolverStats& p : s.presolvers )
   {
      const std::string prefix = "presolver." + p.name + ".";
      kv( prefix + "calls", p.calls );
      kv( prefix + "found", p.found );
      kv( prefix + "applied", p.applied );
      kv( prefix + "discarded", p.discarded );
      kv( prefix + "canceled", p.canceled );
   }
}

std::map<std::string, std::string>
readStatistics( std::istream& in )
{
   std::map<std::string, std::string> out;
   std::string line;
   long lineNo = 0;
   while( std::getline( in, line ) )
   {
      ++lineNo;
      if( line.empty() )
         continue;
      const auto eq = line.find( '=' );
      if( eq == std::string::npos )
         throw std::runtime_error( "statistics line " + std::to_string( lineNo ) +
                                   ": expected key=value" );
      out[line.substr( 0, eq )] = line.substr( eq + 1 );
   }
   return out;
}

double
shiftedGeomean( const std::vector<double>& values, double shift )
{
   if( values.empty() )
      throw std::invalid_argument( "shifted geometric mean of an empty list" );
   if( !( shift > 0 ) )
      throw std::invalid_argument( "shift must be positive" );
   double logSum = 0;
   for( double v : values )
   {
      if( !( v >= 0 ) )
         throw std::invalid_argument( "shifted geometric mean needs values >= 0" );
      logSum += std::log( v + shift );
   }
   return std::exp( logSum / static_cast<double>( values.size() ) ) - shift;
}

} // namespace parapre
