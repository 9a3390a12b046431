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
#include "parapre/io/Report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "parapre/presolvers/Registry.hpp"

namespace parapre
{

namespace
{

constexpr std::pair<const char*, const char*> kCodes[] = {
    { "colsingleton", "cs" },  { "coefftightening", "co" },
    { "propagation", "cp" },   { "simpleprobing", "sp" },
    { "parallelrows", "pr" },  { "parallelcols", "pc" },
    { "stuffing", "st" },      { "dualfix", "d" },
    { "fixcontinuous", "f" },  { "simplifyineq", "si" },
    { "doubletoneq", "dt" },   { "implint", "ii" },
    { "domcol", "dc" },        { "dualinfer", "di" },
    { "probing", "po" },       { "substitution", "su" },
    { "sparsify", "sy" },
};

std::vector<std::string>
tokens( const std::string& line )
{
   std::istringstream ls( line );
   std::vector<std::string> out;
   std::string t;
   while( ls >> t )
      out.push_back( t );
   return out;
}

std::string
percent( double v )
{
   return fmt::format( "{:.2f}%", 100.0 * v );
}

} // namespace

ConflictReport::ConflictReport()
{
   order.push_back( "trivial" );
   for( const auto& p : makeDefaultPresolvers<double>() )
   {
      order.push_back( p->name() );
      tiers.emplace( p->name(), p->descriptor().tier );
   }
   for( const auto& [name, c] : kCodes )
      codes.emplace( name, c );
}

int
ConflictReport::orderOf( const std::string& presolver ) const
{
   auto it = std::find( order.begin(), order.end(), presolver );
   return it == order.end() ? static_cast<int>( order.size() )
                            : static_cast<int>( it - order.begin() );
}

std::pair<std::string, std::string>
ConflictReport::unordered( const std::string& p, const std::string& q ) const
{
   // the later presolver in apply order first, as in the matrix rows
   if( orderOf( p ) >= orderOf( q ) )
      return { p, q };
   return { q, p };
}

void
ConflictReport::addLog( std::istream& log )
{
   Instance inst;
   std::set<std::string> emitted;
   std::set<std::pair<std::string, std::string>> conflictPairs;
   bool inRound = false;

   auto closeRound = [&]() {
      if( !inRound )
         return;
      for( const std::string& p : emitted )
      {
         ++callCount[p];
         for( const std::string& q : emitted )
            if( orderOf( q ) <= orderOf( p ) )
               ++common[unordered( p, q )];
      }
      for( const auto& pq : conflictPairs )
         if( emitted.count( pq.first ) != 0 && emitted.count( pq.second ) != 0 )
            ++conflicting[pq];
      emitted.clear();
      conflictPairs.clear();
      inRound = false;
   };

   std::string line;
   while( std::getline( log, line ) )
   {
      const std::vector<std::string> t = tokens( line );
      if( t.size() == 4 && t[0] == "round" && t[2] == "tier" )
      {
         if( t[3] == "trivial" )
         {
            // trivial passes belong to no tier and carry no calls
            closeRound();
            continue;
         }
         closeRound();
         inRound = true;
         for( Tier tier : { Tier::kFast, Tier::kMedium, Tier::kExhaustive } )
            if( tierName( tier ) == t[3] )
               ++tierRounds[tier];
         continue;
      }
      // <p> transaction <k> status <S> conflict <q|none> redundant <0|1>
      if( t.size() != 9 || t[1] != "transaction" || t[3] != "status" ||
          t[5] != "conflict" || t[7] != "redundant" )
         continue;
      const std::string& p = t[0];
      if( orderOf( p ) == static_cast<int>( order.size() ) )
         order.push_back( p );
      ++inst.transactions[p];
      if( inRound )
         emitted.insert( p );
      if( t[4] == "DISCARDED" && t[6] != "none" )
      {
         const std::string& q = t[6];
         if( orderOf( q ) == static_cast<int>( order.size() ) )
            order.push_back( q );
         ++inst.conflicts[{ p, q }];
         if( t[8] == "1" )
            ++inst.redundant[{ p, q }];
         if( inRound )
            conflictPairs.insert( unordered( p, q ) );
      }
   }
   closeRound();
   perInstance.push_back( std::move( inst ) );
   ++ninstances;
}

void
ConflictReport::addPath( const std::string& path )
{
   namespace fs = std::filesystem;
   std::vector<fs::path> files;
   if( fs::is_directory( path ) )
   {
      for( const auto& e : fs::directory_iterator( path ) )
         if( e.is_regular_file() )
            files.push_back( e.path() );
      std::sort( files.begin(), files.end() );
   }
   else
      files.emplace_back( path );
   for( const fs::path& f : files )
   {
      std::ifstream in( f );
      if( !in )
         throw std::runtime_error( "cannot open log '" + f.string() + "'" );
      addLog( in );
   }
}

long
ConflictReport::rounds( Tier tier ) const
{
   auto it = tierRounds.find( tier );
   return it == tierRounds.end() ? 0 : it->second;
}

long
ConflictReport::calls( const std::string& presolver ) const
{
   auto it = callCount.find( presolver );
   return it == callCount.end() ? 0 : it->second;
}

long
ConflictReport::commonCalls( const std::string& p, const std::string& q ) const
{
   auto it = common.find( unordered( p, q ) );
   return it == common.end() ? 0 : it->second;
}

long
ConflictReport::conflictingCalls( const std::string& p, const std::string& q ) const
{
   auto it = conflicting.find( unordered( p, q ) );
   return it == conflicting.end() ? 0 : it->second;
}

long
ConflictReport::totalTransactions( const std::string& p ) const
{
   long sum = 0;
   for( const Instance& i : perInstance )
   {
      auto it = i.transactions.find( p );
      if( it != i.transactions.end() )
         sum += it->second;
   }
   return sum;
}

long
ConflictReport::conflicts( const std::string& p, const std::string& q ) const
{
   long sum = 0;
   for( const Instance& i : perInstance )
   {
      auto it = i.conflicts.find( { p, q } );
      if( it != i.conflicts.end() )
         sum += it->second;
   }
   return sum;
}

long
ConflictReport::redundant( const std::string& p, const std::string& q ) const
{
   long sum = 0;
   for( const Instance& i : perInstance )
   {
      auto it = i.redundant.find( { p, q } );
      if( it != i.redundant.end() )
         sum += it->second;
   }
   return sum;
}

std::vector<LedgerRow>
ConflictReport::ledger() const
{
   std::set<std::pair<std::string, std::string>> pairs;
   for( const Instance& i : perInstance )
      for( const auto& [pq, c] : i.conflicts )
         if( c > 0 )
            pairs.insert( pq );
   std::vector<std::pair<std::string, std::string>> sorted( pairs.begin(), pairs.end() );
   std::sort( sorted.begin(), sorted.end(), [&]( const auto& a, const auto& b ) {
      const int pa = orderOf( a.first );
      const int pb = orderOf( b.first );
      if( pa != pb )
         return pa < pb;
      return orderOf( a.second ) < orderOf( b.second );
   } );

   std::vector<LedgerRow> rows;
   for( const auto& [p, q] : sorted )
   {
      LedgerRow r;
      r.p = p;
      r.q = q;
      r.transactions = totalTransactions( p );
      r.conflicts = conflicts( p, q );
      r.redundant = redundant( p, q );
      double rateSum = 0;
      int withTransactions = 0;
      for( const Instance& i : perInstance )
      {
         auto t = i.transactions.find( p );
         if( t == i.transactions.end() || t->second == 0 )
            continue;
         ++withTransactions;
         auto c = i.conflicts.find( { p, q } );
         if( c != i.conflicts.end() )
            rateSum += static_cast<double>( c->second ) / static_cast<double>( t->second );
      }
      r.averageRate = withTransactions > 0 ? rateSum / withTransactions : 0.0;
      r.redundantShare = r.conflicts > 0 ? static_cast<double>( r.redundant ) /
                                               static_cast<double>( r.conflicts )
                                         : 0.0;
      rows.push_back( std::move( r ) );
   }
   return rows;
}

std::vector<std::string>
ConflictReport::tierPresolvers( Tier tier ) const
{
   std::vector<std::string> out;
   for( const std::string& name : order )
   {
      auto it = tiers.find( name );
      if( it != tiers.end() && it->second == tier )
         out.push_back( name );
   }
   return out;
}

std::string
ConflictReport::code( const std::string& presolver ) const
{
   auto it = codes.find( presolver );
   return it == codes.end() ? presolver : it->second;
}

void
ConflictReport::write( std::ostream& out ) const
{
   out << "instances " << ninstances << "\n";
   for( Tier tier : { Tier::kFast, Tier::kMedium, Tier::kExhaustive } )
   {
      const std::vector<std::string> names = tierPresolvers( tier );
      out << "\nconflicting calls/common calls on " << rounds( tier ) << " rounds of "
          << tierName( tier ) << " presolvers\n";
      std::vector<std::vector<std::string>> table;
      std::vector<std::string> header{ "presolver", "calls" };
      for( const std::string& q : names )
         header.push_back( code( q ) );
      table.push_back( header );
      for( std::size_t r = 0; r < names.size(); ++r )
      {
         std::vector<std::string> row{ names[r] + " (" + code( names[r] ) + ")",
                                       std::to_string( calls( names[r] ) ) };
         for( std::size_t c = 0; c < names.size(); ++c )
            row.push_back( c <= r ? fmt::format( "{}/{}",
                                                 conflictingCalls( names[r], names[c] ),
                                                 commonCalls( names[r], names[c] ) )
                                  : "-" );
         table.push_back( std::move( row ) );
      }
      std::vector<std::size_t> width( header.size(), 0 );
      for( const auto& row : table )
         for( std::size_t c = 0; c < row.size(); ++c )
            width[c] = std::max( width[c], row[c].size() );
      for( const auto& row : table )
      {
         std::string line;
         for( std::size_t c = 0; c < row.size(); ++c )
         {
            if( c > 0 )
               line += "  ";
            line += c == 0 ? fmt::format( "{:<{}}", row[c], width[c] )
                           : fmt::format( "{:>{}}", row[c], width[c] );
         }
         out << line << '\n';
      }
   }

   out << "\nconflicts between presolvers (p-q: transactions of p discarded "
          "because of q)\n";
   std::vector<std::vector<std::string>> table{
       { "p-q", "sum_t_p", "sum_c_pq", "avg_c_pq/t_p", "sum_r_pq/sum_c_pq" } };
   for( const LedgerRow& r : ledger() )
      table.push_back( { r.p + "-" + r.q, std::to_string( r.transactions ),
                         std::to_string( r.conflicts ), percent( r.averageRate ),
                         percent( r.redundantShare ) } );
   std::vector<std::size_t> width( 5, 0 );
   for( const auto& row : table )
      for( std::size_t c = 0; c < row.size(); ++c )
         width[c] = std::max( width[c], row[c].size() );
   for( const auto& row : table )
   {
      std::string line;
      for( std::size_t c = 0; c < row.size(); ++c )
      {
         if( c > 0 )
            line += "  ";
         line += c == 0 ? fmt::format( "{:<{}}", row[c], width[c] )
                        : fmt::format( "{:>{}}", row[c], width[c] );
      }
      out << line << '\n';
   }
}

} // namespace parapre
