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
#include "parapre/io/Solution.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace parapre
{

template <typename REAL>
void
writeSolution( std::ostream& out, const std::vector<std::string>& names,
               const std::vector<REAL>& values, const REAL& objective )
{
   if( names.size() != values.size() )
      throw std::invalid_argument( "solution size does not match the names" );
   out << "=obj= " << numberToString( objective ) << '\n';
   for( std::size_t j = 0; j < names.size(); ++j )
      out << names[j] << ' ' << numberToString( values[j] ) << '\n';
}

template <typename REAL>
std::vector<REAL>
readSolution( std::istream& in, const std::vector<std::string>& names )
{
   std::unordered_map<std::string, std::size_t> index;
   for( std::size_t j = 0; j < names.size(); ++j )
      index.emplace( names[j], j );
   std::vector<REAL> values( names.size(), REAL( 0 ) );
   std::vector<bool> seen( names.size(), false );
   std::string line;
   long lineNo = 0;
   while( std::getline( in, line ) )
   {
      ++lineNo;
      std::istringstream ls( line );
      std::string name;
      std::string value;
      if( !( ls >> name ) || name[0] == '#' )
         continue;
      if( !( ls >> value ) )
         throw std::runtime_error( "solution line " + std::to_string( lineNo ) +
                                   ": missing value" );
      if( name == "=obj=" )
         continue;
      auto it = index.find( name );
      if( it == index.end() )
         throw std::runtime_error( "solution line " + std::to_string( lineNo ) +
                                   ": unknown column '" + name + "'" );
      if( seen[it->second] )
         throw std::runtime_error( "solution line " + std::to_string( lineNo ) +
                                   ": duplicate column '" + name + "'" );
      seen[it->second] = true;
      try
      {
         values[it->second] = parseNumber<REAL>( value );
      }
      catch( const std::invalid_argument& e )
      {
         throw std::runtime_error( "solution line " + std::to_string( lineNo ) +
                                   ": " + e.what() );
      }
   }
   return values;
}

template <typename REAL>
std::vector<REAL>
readSolutionFile( const std::string& path, const std::vector<std::string>& names )
{
   std::ifstream in( path );
   if( !in )
      throw std::runtime_error( "cannot open '" + path + "'" );
   return readSolution<REAL>( in, names );
}

template void
writeSolution<double>( std::ostream&, const std::vector<std::string>&,
                       const std::vector<double>&, const double& );
template void
writeSolution<Rational>( std::ostream&, const std::vector<std::string>&,
                         const std::vector<Rational>&, const Rational& );
template std::vector<double>
readSolution<double>( std::istream&, const std::vector<std::string>& );
template std::vector<Rational>
readSolution<Rational>( std::istream&, const std::vector<std::string>& );
template std::vector<double>
readSolutionFile<double>( const std::string&, const std::vector<std::string>& );
template std::vector<Rational>
readSolutionFile<Rational>( const std::string&, const std::vector<std::string>& );

} // namespace parapre
