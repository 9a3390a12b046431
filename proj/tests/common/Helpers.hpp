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
#ifndef PARAPRE_TESTS_HELPERS_HPP_
#define PARAPRE_TESTS_HELPERS_HPP_

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "parapre/core/ApplyEngine.hpp"
#include "parapre/core/Presolver.hpp"
#include "parapre/core/Problem.hpp"
#include "parapre/io/Mps.hpp"

namespace parapre::test
{

/// one call of a presolver on a problem where everything counts as changed
template <typename REAL>
std::vector<Transaction<REAL>>
runOnce( const Presolver<REAL>& presolver, const Problem<REAL>& problem, int id = 0,
         bool parallel = false )
{
   std::vector<int> rows( problem.getNRows() );
   std::vector<int> cols( problem.getNCols() );
   std::iota( rows.begin(), rows.end(), 0 );
   std::iota( cols.begin(), cols.end(), 0 );
   const PresolveView<REAL> view{ problem, rows, cols, parallel };
   std::vector<Transaction<REAL>> out;
   presolver.run( view, out );
   for( auto& t : out )
      t.presolver = id;
   return out;
}

/// copy with every column continuous
template <typename REAL>
Problem<REAL>
relaxation( const Problem<REAL>& p )
{
   Problem<REAL> r( p.getNum() );
   for( int j = 0; j < p.getNCols(); ++j )
      r.addCol( p.getColName( j ), p.getObj( j ), p.getLower( j ), p.getUpper( j ), false );
   for( int i = 0; i < p.getNRows(); ++i )
      r.addRow( p.getRowName( i ), p.getLhs( i ), p.getRhs( i ) );
   for( int i = 0; i < p.getNRows(); ++i )
      p.forEachInRow( i, [&]( int j, const REAL& v ) { r.addEntry( i, j, v ); } );
   r.setObjOffset( p.getObjOffset() );
   r.finalize();
   return r;
}

template <typename REAL>
std::string
mpsString( const Problem<REAL>& p )
{
   std::ostringstream out;
   writeMps( p, out );
   return out.str();
}

/// applied log lines reduced to presolver, step kinds and indices
inline std::vector<std::string>
appliedKinds( const std::vector<std::string>& appliedLog )
{
   std::vector<std::string> out;
   for( const std::string& line : appliedLog )
   {
      std::string kinds;
      std::size_t pos = 0;
      bool first = true;
      while( pos != std::string::npos )
      {
         const std::size_t next = line.find( " | ", pos );
         const std::string part =
             line.substr( pos, next == std::string::npos ? std::string::npos : next - pos );
         std::istringstream ps( part );
         std::string kind;
         std::string rowKey;
         std::string row;
         std::string colKey;
         std::string col;
         if( first )
         {
            ps >> kind;
            kinds += kind;
            // verdict lines are "<name> <KIND row r col c ...>"
            if( ps >> kind >> rowKey >> row >> colKey >> col )
               kinds += " " + kind + " " + row + " " + col;
         }
         else
         {
            ps >> kind >> rowKey >> row >> colKey >> col;
            kinds += " | " + kind + " " + row + " " + col;
         }
         first = false;
         pos = next == std::string::npos ? next : next + 3;
      }
      out.push_back( std::move( kinds ) );
   }
   return out;
}

} // namespace parapre::test

#endif
