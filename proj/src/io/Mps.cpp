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
#include "parapre/io/Mps.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include <fmt/format.h>

namespace parapre
{

MpsError::MpsError( long line, const std::string& what )
    : std::runtime_error( line > 0 ? fmt::format( "line {}: {}", line, what )
                                   : what ),
      lineNo( line )
{
}

namespace
{

/// values at or beyond this magnitude mean infinity, as in most MPS writers
constexpr double kMpsInfinity = 1e30;

enum class Section
{
   kNone,
   kName,
   kObjSense,
   kRows,
   kColumns,
   kRhs,
   kRanges,
   kBounds,
   kEnd,
};

std::string
trim( std::string_view s )
{
   const auto b = s.find_first_not_of( " \t\r" );
   if( b == std::string_view::npos )
      return {};
   const auto e = s.find_last_not_of( " \t\r" );
   return std::string( s.substr( b, e - b + 1 ) );
}

std::vector<std::string>
splitFree( std::string_view line )
{
   std::vector<std::string> out;
   std::size_t i = 0;
   while( i < line.size() )
   {
      while( i < line.size() && std::isspace( static_cast<unsigned char>( line[i] ) ) )
         ++i;
      std::size_t j = i;
      while( j < line.size() && !std::isspace( static_cast<unsigned char>( line[j] ) ) )
         ++j;
      if( j > i )
         out.emplace_back( line.substr( i, j - i ) );
      i = j;
   }
   return out;
}

/// fields 1..6 at columns 2-3, 5-12, 15-22, 25-36, 40-47, 50-61; empty
/// fields are dropped so the result looks like a free format split
std::vector<std::string>
splitFixed( std::string_view line )
{
   static constexpr std::pair<std::size_t, std::size_t> kFields[] = {
       { 1, 2 }, { 4, 8 }, { 14, 8 }, { 24, 12 }, { 39, 8 }, { 49, 12 } };
   std::vector<std::string> out;
   for( const auto& [pos, len] : kFields )
   {
      if( pos >= line.size() )
         break;
      std::string f = trim( line.substr( pos, len ) );
      if( !f.empty() )
         out.push_back( std::move( f ) );
   }
   return out;
}

std::string
upper( std::string s )
{
   for( char& c : s )
      c = static_cast<char>( std::toupper( static_cast<unsigned char>( c ) ) );
   return s;
}

template <typename REAL>
struct RawRow
{
   std::string name;
   char type;
   std::optional<REAL> rhs;
   std::optional<REAL> range;
};

template <typename REAL>
struct RawCol
{
   std::string name;
   REAL cost{ 0 };
   bool integral = false;
   std::optional<Extended<REAL>> lower;
   std::optional<Extended<REAL>> upper;
};

template <typename REAL>
class MpsReader
{
 public:
   MpsReader( const Num<REAL>& num, const MpsOptions& options )
       : num( num ), options( options )
   {
   }

   Problem<REAL>
   read( std::istream& in, MpsInfo* info )
   {
      std::string line;
      while( std::getline( in, line ) )
      {
         ++lineNo;
         if( !line.empty() && line.back() == '\r' )
            line.pop_back();
         if( trim( line ).empty() || line[0] == '*' )
            continue;
         if( !std::isspace( static_cast<unsigned char>( line[0] ) ) )
         {
            header( line );
            if( section == Section::kEnd )
               break;
            continue;
         }
         body( line );
      }
      if( section != Section::kEnd )
         throw MpsError( lineNo, "missing ENDATA" );
      if( info != nullptr )
         info->maximize = maximize;
      return build();
   }

 private:
   [[noreturn]] void
   fail( const std::string& what ) const
   {
      throw MpsError( lineNo, what );
   }

   REAL
   number( const std::string& token ) const
   {
      try
      {
         return parseNumber<REAL>( token );
      }
      catch( const std::invalid_argument& e )
      {
         fail( e.what() );
      }
   }

   /// bound or side value; huge magnitudes and inf literals are infinite
   Extended<REAL>
   extended( const std::string& token ) const
   {
      const std::string u = upper( token );
      if( u == "INF" || u == "+INF" || u == "INFINITY" || u == "+INFINITY" )
         return Extended<REAL>::posInf();
      if( u == "-INF" || u == "-INFINITY" )
         return Extended<REAL>::negInf();
      const REAL v = number( token );
      const double d = NumTraits<REAL>::toDouble( v );
      if( d >= kMpsInfinity )
         return Extended<REAL>::posInf();
      if( d <= -kMpsInfinity )
         return Extended<REAL>::negInf();
      return Extended<REAL>( v );
   }

   void
   header( const std::string& line )
   {
      const std::vector<std::string> f = splitFree( line );
      const std::string key = upper( f[0] );
      if( key == "NAME" )
      {
         name = f.size() > 1 ? trim( std::string_view( line ).substr( 4 ) ) : "";
         section = Section::kName;
      }
      else if( key == "OBJSENSE" )
      {
         section = Section::kObjSense;
         if( f.size() > 1 )
            objSense( f[1] );
      }
      else if( key == "OBJSENS" )
         section = Section::kObjSense;
      else if( key == "ROWS" )
         section = Section::kRows;
      else if( key == "COLUMNS" )
         section = Section::kColumns;
      else if( key == "RHS" )
         section = Section::kRhs;
      else if( key == "RANGES" )
         section = Section::kRanges;
      else if( key == "BOUNDS" )
         section = Section::kBounds;
      else if( key == "ENDATA" )
         section = Section::kEnd;
      else
         fail( "unknown section '" + f[0] + "'" );
   }

   void
   objSense( const std::string& token )
   {
      const std::string s = upper( token );
      if( s == "MAX" || s == "MAXIMIZE" )
         maximize = true;
      else if( s == "MIN" || s == "MINIMIZE" )
         maximize = false;
      else
         fail( "unknown objective sense '" + token + "'" );
   }

   std::vector<std::string>
   fields( const std::string& line ) const
   {
      return options.format == MpsFormat::kFixed ? splitFixed( line )
                                                 : splitFree( line );
   }

   void
   body( const std::string& line )
   {
      const std::vector<std::string> f = fields( line );
      if( f.empty() )
         fail( "no fields found" );
      switch( section )
      {
      case Section::kObjSense:
         objSense( f[0] );
         break;
      case Section::kRows:
         rowsLine( f );
         break;
      case Section::kColumns:
         columnsLine( f );
         break;
      case Section::kRhs:
         rhsLine( f, false );
         break;
      case Section::kRanges:
         rhsLine( f, true );
         break;
      case Section::kBounds:
         boundsLine( f );
         break;
      case Section::kName:
      case Section::kNone:
      case Section::kEnd:
         fail( "data line outside of a section" );
      }
   }

   void
   rowsLine( const std::vector<std::string>& f )
   {
      if( f.size() != 2 )
         fail( "ROWS line needs a type and a name" );
      const std::string type = upper( f[0] );
      if( type.size() != 1 || std::string_view( "NLGE" ).find( type[0] ) ==
                                  std::string_view::npos )
         fail( "unknown row type '" + f[0] + "'" );
      if( rowIndex.count( f[1] ) != 0 || f[1] == objName )
         fail( "duplicate row '" + f[1] + "'" );
      if( type[0] == 'N' && objName.empty() )
      {
         objName = f[1];
         return;
      }
      rowIndex.emplace( f[1], static_cast<int>( rows.size() ) );
      rows.push_back( { f[1], type[0], std::nullopt, std::nullopt } );
   }

   /// -1 for the objective, -2 for an unknown row
   int
   rowOf( const std::string& rowName ) const
   {
      if( rowName == objName )
         return -1;
      auto it = rowIndex.find( rowName );
      if( it == rowIndex.end() )
         fail( "unknown row '" + rowName + "'" );
      return it->second;
   }

   void
   columnsLine( const std::vector<std::string>& f )
   {
      if( f.size() >= 3 && upper( f[1] ) == "'MARKER'" )
      {
         const std::string m = upper( f[2] );
         if( m == "'INTORG'" )
            inIntBlock = true;
         else if( m == "'INTEND'" )
            inIntBlock = false;
         else
            fail( "unknown marker " + f[2] );
         return;
      }
      if( f.size() != 3 && f.size() != 5 )
         fail( "COLUMNS line needs a column and one or two row/value pairs" );
      int col;
      auto it = colIndex.find( f[0] );
      if( it == colIndex.end() )
      {
         col = static_cast<int>( cols.size() );
         colIndex.emplace( f[0], col );
         RawCol<REAL> c;
         c.name = f[0];
         c.integral = inIntBlock;
         cols.push_back( std::move( c ) );
      }
      else
      {
         col = it->second;
         if( col != static_cast<int>( cols.size() ) - 1 )
            fail( "column '" + f[0] + "' is not contiguous" );
      }
      for( std::size_t k = 1; k + 1 < f.size(); k += 2 )
      {
         const int row = rowOf( f[k] );
         const REAL v = number( f[k + 1] );
         if( row == -1 )
         {
            if( seenCost.count( col ) != 0 )
               fail( "duplicate objective entry for column '" + f[0] + "'" );
            seenCost.insert( col );
            cols[col].cost = v;
            continue;
         }
         const auto key = ( static_cast<std::uint64_t>( row ) << 32 ) |
                          static_cast<std::uint32_t>( col );
         if( !seenEntries.insert( key ).second )
            fail( "duplicate entry for row '" + f[k] + "' column '" + f[0] +
                  "'" );
         entries.push_back( { row, col, v } );
      }
   }

   void
   rhsLine( const std::vector<std::string>& f, bool ranges )
   {
      // the set name is optional
      const std::size_t first = f.size() % 2 == 1 ? 1 : 0;
      if( f.size() < 2 || f.size() > 5 )
         fail( ranges ? "malformed RANGES line" : "malformed RHS line" );
      for( std::size_t k = first; k + 1 < f.size(); k += 2 )
      {
         const int row = rowOf( f[k] );
         const REAL v = number( f[k + 1] );
         if( row == -1 )
         {
            if( ranges )
               fail( "RANGES entry for the objective" );
            objOffset = -v;
            continue;
         }
         auto& target = ranges ? rows[row].range : rows[row].rhs;
         if( target.has_value() )
            fail( "duplicate value for row '" + f[k] + "'" );
         target = v;
      }
   }

   void
   boundsLine( const std::vector<std::string>& f )
   {
      if( f.size() < 2 )
         fail( "malformed BOUNDS line" );
      const std::string type = upper( f[0] );
      static const std::unordered_set<std::string> kValued = {
          "UP", "LO", "FX", "LI", "UI" };
      static const std::unordered_set<std::string> kPlain = { "FR", "MI", "PL",
                                                              "BV" };
      std::string colName;
      std::optional<std::string> value;
      if( kValued.count( type ) != 0 )
      {
         if( f.size() == 4 )
         {
            colName = f[2];
            value = f[3];
         }
         else if( f.size() == 3 )
         {
            colName = f[1];
            value = f[2];
         }
         else
            fail( "bound " + type + " needs a value" );
      }
      else if( kPlain.count( type ) != 0 )
      {
         if( f.size() == 2 )
            colName = f[1];
         else if( f.size() == 3 || f.size() == 4 )
            colName = f[2];
         else
            fail( "malformed bound " + type );
      }
      else if( type == "SC" )
         fail( "semi-continuous bounds are not supported" );
      else
         fail( "unknown bound type '" + f[0] + "'" );

      auto it = colIndex.find( colName );
      if( it == colIndex.end() )
         fail( "unknown column '" + colName + "'" );
      RawCol<REAL>& c = cols[it->second];

      if( type == "UP" || type == "UI" )
      {
         const Extended<REAL> v = extended( *value );
         c.upper = v;
         // a negative upper bound with the default lower bound frees it below
         if( !c.lower.has_value() && v.isFinite() && v.value() < 0 )
            c.lower = Extended<REAL>::negInf();
         if( type == "UI" )
            c.integral = true;
      }
      else if( type == "LO" || type == "LI" )
      {
         c.lower = extended( *value );
         if( type == "LI" )
            c.integral = true;
      }
      else if( type == "FX" )
      {
         const REAL v = number( *value );
         c.lower = Extended<REAL>( v );
         c.upper = Extended<REAL>( v );
      }
      else if( type == "FR" )
      {
         c.lower = Extended<REAL>::negInf();
         c.upper = Extended<REAL>::posInf();
      }
      else if( type == "MI" )
         c.lower = Extended<REAL>::negInf();
      else if( type == "PL" )
         c.upper = Extended<REAL>::posInf();
      else if( type == "BV" )
      {
         c.integral = true;
         c.lower = Extended<REAL>( REAL( 0 ) );
         c.upper = Extended<REAL>( REAL( 1 ) );
      }
   }

   Problem<REAL>
   build()
   {
      Problem<REAL> p( num );
      p.setName( name );
      const REAL sign = maximize ? REAL( -1 ) : REAL( 1 );
      for( const RawCol<REAL>& c : cols )
      {
         Extended<REAL> lb = c.lower.value_or( Extended<REAL>( REAL( 0 ) ) );
         Extended<REAL> ub = c.upper.value_or( Extended<REAL>::posInf() );
         if( c.integral && options.legacyIntegerBounds && !c.upper.has_value() )
            ub = Extended<REAL>( REAL( 1 ) );
         p.addCol( c.name, REAL( sign * c.cost ), lb, ub, c.integral );
      }
      for( const RawRow<REAL>& r : rows )
      {
         const REAL b = r.rhs.value_or( REAL( 0 ) );
         const double bd = NumTraits<REAL>::toDouble( b );
         // a huge side of an inequality drops that side
         const bool hugeSide = bd >= kMpsInfinity || bd <= -kMpsInfinity;
         Extended<REAL> lhs = Extended<REAL>::negInf();
         Extended<REAL> rhs = Extended<REAL>::posInf();
         switch( r.type )
         {
         case 'L':
            if( hugeSide )
               rhs = bd > 0 ? Extended<REAL>::posInf() : Extended<REAL>::negInf();
            else
               rhs = b;
            if( r.range && !hugeSide )
               lhs = Extended<REAL>( REAL( b - NumTraits<REAL>::abs( *r.range ) ) );
            break;
         case 'G':
            if( hugeSide )
               lhs = bd > 0 ? Extended<REAL>::posInf() : Extended<REAL>::negInf();
            else
               lhs = b;
            if( r.range && !hugeSide )
               rhs = Extended<REAL>( REAL( b + NumTraits<REAL>::abs( *r.range ) ) );
            break;
         case 'E':
            if( hugeSide )
               throw MpsError( 0, "infinite right hand side of equation '" + r.name + "'" );
            lhs = b;
            rhs = b;
            if( r.range && *r.range > 0 )
               rhs = Extended<REAL>( REAL( b + *r.range ) );
            else if( r.range && *r.range < 0 )
               lhs = Extended<REAL>( REAL( b + *r.range ) );
            break;
         default:
            // further N rows are kept as free rows
            break;
         }
         p.addRow( r.name, lhs, rhs );
      }
      for( const auto& [row, col, v] : entries )
         p.addEntry( row, col, v );
      p.setObjOffset( REAL( sign * objOffset ) );
      try
      {
         p.finalize();
      }
      catch( const std::invalid_argument& e )
      {
         throw MpsError( 0, e.what() );
      }
      return p;
   }

   struct RawEntry
   {
      int row;
      int col;
      REAL value;
   };

   const Num<REAL>& num;
   MpsOptions options;
   long lineNo = 0;
   Section section = Section::kNone;
   std::string name;
   std::string objName;
   bool maximize = false;
   bool inIntBlock = false;
   REAL objOffset{ 0 };
   std::vector<RawRow<REAL>> rows;
   std::vector<RawCol<REAL>> cols;
   std::vector<RawEntry> entries;
   std::unordered_map<std::string, int> rowIndex;
   std::unordered_map<std::string, int> colIndex;
   std::unordered_set<std::uint64_t> seenEntries;
   std::unordered_set<int> seenCost;
};

template <typename REAL>
std::string
boundValue( const Extended<REAL>& v )
{
   if( v.isPosInf() )
      return "1e+30";
   if( v.isNegInf() )
      return "-1e+30";
   return numberToString( v.value() );
}

} // namespace

template <typename REAL>
Problem<REAL>
readMps( std::istream& in, const Num<REAL>& num, const MpsOptions& options,
         MpsInfo* info )
{
   MpsReader<REAL> reader( num, options );
   return reader.read( in, info );
}

template <typename REAL>
Problem<REAL>
readMpsFile( const std::string& path, const Num<REAL>& num,
             const MpsOptions& options, MpsInfo* info )
{
   std::ifstream in( path );
   if( !in )
      throw MpsError( 0, "cannot open '" + path + "'" );
   return readMps( in, num, options, info );
}

template <typename REAL>
void
writeMps( const Problem<REAL>& problem, std::ostream& out )
{
   const std::string objName = "obj";
   out << "NAME " << ( problem.getName().empty() ? "problem" : problem.getName() )
       << '\n';
   out << "ROWS\n N " << objName << '\n';
   for( int i = 0; i < problem.getNRows(); ++i )
   {
      if( !problem.isRowActive( i ) )
         continue;
      const Extended<REAL>& lhs = problem.getLhs( i );
      const Extended<REAL>& rhs = problem.getRhs( i );
      char type = 'N';
      if( lhs.isFinite() && rhs.isFinite() && lhs.value() == rhs.value() )
         type = 'E';
      else if( lhs.isFinite() )
         type = 'G';
      else if( rhs.isFinite() )
         type = 'L';
      out << ' ' << type << ' ' << problem.getRowName( i ) << '\n';
   }

   out << "COLUMNS\n";
   bool inInt = false;
   int marker = 0;
   std::vector<std::pair<int, REAL>> col;
   for( int j = 0; j < problem.getNCols(); ++j )
   {
      if( !problem.isColActive( j ) )
         continue;
      if( problem.isIntegral( j ) != inInt )
      {
         inInt = !inInt;
         out << " MARKER" << marker++ << " 'MARKER' "
             << ( inInt ? "'INTORG'" : "'INTEND'" ) << '\n';
      }
      col.clear();
      problem.forEachInCol( j, [&]( int i, const REAL& v ) { col.emplace_back( i, v ); } );
      std::sort( col.begin(), col.end(),
                 []( const auto& a, const auto& b ) { return a.first < b.first; } );
      const std::string& name = problem.getColName( j );
      if( problem.getObj( j ) != 0 )
         out << ' ' << name << ' ' << objName << ' '
             << numberToString( problem.getObj( j ) ) << '\n';
      for( const auto& [i, v] : col )
         out << ' ' << name << ' ' << problem.getRowName( i ) << ' '
             << numberToString( v ) << '\n';
      // keep columns without any entry
      if( problem.getObj( j ) == 0 && col.empty() )
         out << ' ' << name << ' ' << objName << " 0\n";
   }
   if( inInt )
      out << " MARKER" << marker++ << " 'MARKER' 'INTEND'\n";

   out << "RHS\n";
   if( problem.getObjOffset() != 0 )
      out << " RHS " << objName << ' '
          << numberToString( REAL( -problem.getObjOffset() ) ) << '\n';
   for( int i = 0; i < problem.getNRows(); ++i )
   {
      if( !problem.isRowActive( i ) )
         continue;
      const Extended<REAL>& lhs = problem.getLhs( i );
      const Extended<REAL>& rhs = problem.getRhs( i );
      const Extended<REAL>& side = lhs.isFinite() ? lhs : rhs;
      if( side.isFinite() && side.value() != 0 )
         out << " RHS " << problem.getRowName( i ) << ' '
             << numberToString( side.value() ) << '\n';
   }

   bool rangesHeader = false;
   for( int i = 0; i < problem.getNRows(); ++i )
   {
      if( !problem.isRowActive( i ) )
         continue;
      const Extended<REAL>& lhs = problem.getLhs( i );
      const Extended<REAL>& rhs = problem.getRhs( i );
      if( !lhs.isFinite() || !rhs.isFinite() || lhs.value() == rhs.value() )
         continue;
      if( !rangesHeader )
      {
         out << "RANGES\n";
         rangesHeader = true;
      }
      out << " RNG " << problem.getRowName( i ) << ' '
          << numberToString( REAL( rhs.value() - lhs.value() ) ) << '\n';
   }

   out << "BOUNDS\n";
   for( int j = 0; j < problem.getNCols(); ++j )
   {
      if( !problem.isColActive( j ) )
         continue;
      const std::string& name = problem.getColName( j );
      const Extended<REAL>& l = problem.getLower( j );
      const Extended<REAL>& u = problem.getUpper( j );
      if( l.isFinite() && u.isFinite() && l.value() == u.value() )
      {
         out << " FX BND " << name << ' ' << numberToString( l.value() ) << '\n';
         continue;
      }
      if( l.isNegInf() && u.isPosInf() )
      {
         out << " FR BND " << name << '\n';
         continue;
      }
      if( l.isNegInf() )
         out << " MI BND " << name << '\n';
      else if( l.value() != 0 || ( u.isFinite() && u.value() < 0 ) )
         out << " LO BND " << name << ' ' << boundValue( l ) << '\n';
      if( u.isFinite() )
         out << " UP BND " << name << ' ' << boundValue( u ) << '\n';
      else if( problem.isIntegral( j ) )
         out << " PL BND " << name << '\n';
   }
   out << "ENDATA\n";
}

template <typename REAL>
void
writeMpsFile( const Problem<REAL>& problem, const std::string& path )
{
   std::ofstream out( path );
   if( !out )
      throw std::runtime_error( "cannot write '" + path + "'" );
   writeMps( problem, out );
   if( !out )
      throw std::runtime_error( "write to '" + path + "' failed" );
}

template Problem<double>
readMps<double>( std::istream&, const Num<double>&, const MpsOptions&, MpsInfo* );
template Problem<Rational>
readMps<Rational>( std::istream&, const Num<Rational>&, const MpsOptions&,
                   MpsInfo* );
template Problem<double>
readMpsFile<double>( const std::string&, const Num<double>&, const MpsOptions&,
                     MpsInfo* );
template Problem<Rational>
readMpsFile<Rational>( const std::string&, const Num<Rational>&,
                       const MpsOptions&, MpsInfo* );
template void
writeMps<double>( const Problem<double>&, std::ostream& );
template void
writeMps<Rational>( const Problem<Rational>&, std::ostream& );
template void
writeMpsFile<double>( const Problem<double>&, const std::string& );
template void
writeMpsFile<Rational>( const Problem<Rational>&, const std::string& );

} // namespace parapre
