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
#include "parapre/io/Parameters.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>

#include "parapre/presolvers/Registry.hpp"

namespace parapre
{

namespace
{

std::string
trim( const std::string& s )
{
   const auto b = s.find_first_not_of( " \t\r" );
   if( b == std::string::npos )
      return {};
   const auto e = s.find_last_not_of( " \t\r" );
   return s.substr( b, e - b + 1 );
}

std::string
lower( std::string s )
{
   for( char& c : s )
      c = static_cast<char>( std::tolower( static_cast<unsigned char>( c ) ) );
   return s;
}

bool
parseBool( const std::string& key, const std::string& value )
{
   const std::string v = lower( value );
   if( v == "1" || v == "true" || v == "on" || v == "yes" )
      return true;
   if( v == "0" || v == "false" || v == "off" || v == "no" )
      return false;
   throw ParameterError( key + ": expected a boolean, got '" + value + "'" );
}

long long
parseInt( const std::string& key, const std::string& value, long long lo,
          long long hi )
{
   long long v = 0;
   auto [ptr, ec] = std::from_chars( value.data(), value.data() + value.size(), v );
   if( ec != std::errc() || ptr != value.data() + value.size() )
      throw ParameterError( key + ": expected an integer, got '" + value + "'" );
   if( v < lo || v > hi )
      throw ParameterError( key + ": " + value + " is out of range [" +
                            std::to_string( lo ) + ", " + std::to_string( hi ) +
                            "]" );
   return v;
}

double
parseDouble( const std::string& key, const std::string& value )
{
   double v = 0;
   auto [ptr, ec] = std::from_chars( value.data(), value.data() + value.size(), v );
   if( ec != std::errc() || ptr != value.data() + value.size() )
      throw ParameterError( key + ": expected a number, got '" + value + "'" );
   return v;
}

} // namespace

ParameterSet::ParameterSet()
{
   infos = {
       { "presolve.threads", "1", "worker threads, 0 picks the hardware concurrency" },
       { "presolve.abortfac", "0.0008",
         "a round is successful if it reduces more than this fraction of rows, "
         "columns or nonzeros" },
       { "presolve.apply_results_immediately_if_run_sequentially", "false",
         "with one thread, apply each presolver's transactions before the next "
         "presolver runs" },
       { "presolve.maxrounds", "500", "hard cap on presolve rounds" },
       { "presolve.randomseed", "0", "seed for randomized tie breaking" },
       { "message.verbosity", "2",
         "0 quiet, 1 errors, 2 summary, 3 rounds, 4 transaction log" },
       { "numerics.mode", "float64", "float64 or rational" },
       { "numerics.epsilon", "1e-09", "zero tolerance in float64 mode" },
       { "numerics.feastol", "1e-06", "feasibility tolerance in float64 mode" },
       { "numerics.hugeval", "1e+08", "values beyond this are not used as bounds" },
       { "mps.format", "free", "free or fixed" },
       { "mps.legacy_int_bounds", "false",
         "integral columns without bounds default to [0, 1]" },
       { "record.format", "binary", "binary or text" },
   };
   for( const auto& p : makeDefaultPresolvers<double>() )
   {
      const PresolverDescriptor& d = p->descriptor();
      infos.push_back( { d.name + ".enabled", d.enabled ? "true" : "false",
                         "run " + d.name } );
      infos.push_back( { d.name + ".parallel", d.internalParallel ? "true" : "false",
                         "let " + d.name + " use threads internally" } );
   }
   for( std::size_t k = 0; k < infos.size(); ++k )
      index.emplace( infos[k].key, k );
}

bool
ParameterSet::isKnown( const std::string& key ) const
{
   return index.count( key ) != 0;
}

void
ParameterSet::require( const std::string& key ) const
{
   if( !isKnown( key ) )
      throw ParameterError( "unknown parameter '" + key + "'" );
}

void
ParameterSet::loadFile( const std::string& path )
{
   std::ifstream in( path );
   if( !in )
      throw ParameterError( "cannot open parameter file '" + path + "'" );
   loadStream( in, path );
}

void
ParameterSet::loadStream( std::istream& in, const std::string& sourceName )
{
   std::string line;
   long lineNo = 0;
   while( std::getline( in, line ) )
   {
      ++lineNo;
      const auto hash = line.find( '#' );
      if( hash != std::string::npos )
         line.erase( hash );
      if( trim( line ).empty() )
         continue;
      const auto eq = line.find( '=' );
      if( eq == std::string::npos )
         throw ParameterError( sourceName + ":" + std::to_string( lineNo ) +
                               ": expected key = value" );
      const std::string key = trim( line.substr( 0, eq ) );
      if( !isKnown( key ) )
         throw ParameterError( sourceName + ":" + std::to_string( lineNo ) +
                               ": unknown parameter '" + key + "'" );
      fileValues[key] = trim( line.substr( eq + 1 ) );
   }
}

const char*
ParameterSet::defaultLookup( const char* name )
{
   return std::getenv( name );
}

void
ParameterSet::loadEnvironment(
    const std::function<const char*( const char* )>& lookup )
{
   for( const ParameterInfo& p : infos )
      if( const char* v = lookup( envName( p.key ).c_str() ) )
         envValues[p.key] = trim( v );
}

void
ParameterSet::setFlag( const std::string& key, const std::string& value )
{
   require( key );
   flagValues[key] = value;
}

std::string
ParameterSet::get( const std::string& key ) const
{
   require( key );
   for( const auto* layer : { &flagValues, &envValues, &fileValues } )
   {
      auto it = layer->find( key );
      if( it != layer->end() )
         return it->second;
   }
   return infos[index.at( key )].defaultValue;
}

ParameterSource
ParameterSet::sourceOf( const std::string& key ) const
{
   require( key );
   if( flagValues.count( key ) != 0 )
      return ParameterSource::kFlag;
   if( envValues.count( key ) != 0 )
      return ParameterSource::kEnvironment;
   if( fileValues.count( key ) != 0 )
      return ParameterSource::kFile;
   return ParameterSource::kDefault;
}

std::string
ParameterSet::envName( const std::string& key )
{
   std::string out = "PARAPRE_";
   for( char c : key )
      out.push_back( c == '.' ? '_'
                              : static_cast<char>(
                                    std::toupper( static_cast<unsigned char>( c ) ) ) );
   return out;
}

PresolveOptions
ParameterSet::presolveOptions() const
{
   PresolveOptions o;
   o.threads = static_cast<int>(
       parseInt( "presolve.threads", get( "presolve.threads" ), 0, 1024 ) );
   o.abortFactor = parseDouble( "presolve.abortfac", get( "presolve.abortfac" ) );
   if( !( o.abortFactor >= 0 && o.abortFactor < 1 ) )
      throw ParameterError( "presolve.abortfac: must lie in [0, 1)" );
   o.applyImmediately =
       parseBool( "presolve.apply_results_immediately_if_run_sequentially",
                  get( "presolve.apply_results_immediately_if_run_sequentially" ) );
   o.maxRounds = static_cast<int>(
       parseInt( "presolve.maxrounds", get( "presolve.maxrounds" ), 1, 1000000 ) );
   o.randomSeed = static_cast<unsigned long>( parseInt(
       "presolve.randomseed", get( "presolve.randomseed" ), 0, 1LL << 62 ) );
   o.verbosity = static_cast<int>(
       parseInt( "message.verbosity", get( "message.verbosity" ), 0, 4 ) );
   const std::string mode = lower( get( "numerics.mode" ) );
   if( mode == "float64" )
      o.numericMode = NumericMode::kFloat64;
   else if( mode == "rational" )
      o.numericMode = NumericMode::kRational;
   else
      throw ParameterError( "numerics.mode: expected float64 or rational" );
   o.epsilon = parseDouble( "numerics.epsilon", get( "numerics.epsilon" ) );
   o.feastol = parseDouble( "numerics.feastol", get( "numerics.feastol" ) );
   o.hugeval = parseDouble( "numerics.hugeval", get( "numerics.hugeval" ) );
   if( !( o.epsilon >= 0 && o.epsilon <= o.feastol && o.hugeval > 0 ) )
      throw ParameterError(
          "numerics: need 0 <= epsilon <= feastol and hugeval > 0" );
   for( const ParameterInfo& p : infos )
   {
      const auto dot = p.key.rfind( '.' );
      const std::string prefix = p.key.substr( 0, dot );
      const std::string suffix = p.key.substr( dot + 1 );
      if( sourceOf( p.key ) == ParameterSource::kDefault )
         continue;
      if( suffix == "enabled" )
         o.enabled[prefix] = parseBool( p.key, get( p.key ) );
      else if( suffix == "parallel" )
         o.internalParallel[prefix] = parseBool( p.key, get( p.key ) );
   }
   return o;
}

MpsOptions
ParameterSet::mpsOptions() const
{
   MpsOptions o;
   const std::string format = lower( get( "mps.format" ) );
   if( format == "free" )
      o.format = MpsFormat::kFree;
   else if( format == "fixed" )
      o.format = MpsFormat::kFixed;
   else
      throw ParameterError( "mps.format: expected free or fixed" );
   o.legacyIntegerBounds =
       parseBool( "mps.legacy_int_bounds", get( "mps.legacy_int_bounds" ) );
   return o;
}

RecordFormat
ParameterSet::recordFormat() const
{
   const std::string format = lower( get( "record.format" ) );
   if( format == "binary" )
      return RecordFormat::kBinary;
   if( format == "text" )
      return RecordFormat::kText;
   throw ParameterError( "record.format: expected binary or text" );
}

void
ParameterSet::write( std::ostream& out ) const
{
   for( const ParameterInfo& p : infos )
      out << p.key << " = " << get( p.key ) << '\n';
}

} // namespace parapre
