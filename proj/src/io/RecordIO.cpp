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
#include "parapre/io/RecordIO.hpp"

#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

namespace parapre
{

namespace
{

constexpr char kMagic[] = "PPREC";
constexpr std::size_t kMagicLen = 5;
constexpr char kTextMagic[] = "PPREC-TEXT";
constexpr std::uint32_t kVersion = 1;
/// guards allocations driven by corrupt length fields
constexpr std::uint32_t kMaxCount = 1u << 28;

enum ExtTag : std::uint8_t
{
   kFiniteTag = 0,
   kPosInfTag = 1,
   kNegInfTag = 2,
};

[[noreturn]] void
corrupt( const std::string& what )
{
   throw RecordFormatError( "postsolve record: " + what );
}

std::string_view
modeName( NumericMode m )
{
   return m == NumericMode::kRational ? "rational" : "float64";
}

NumericMode
modeFromName( const std::string& s )
{
   if( s == "float64" )
      return NumericMode::kFloat64;
   if( s == "rational" )
      return NumericMode::kRational;
   corrupt( "unknown numeric mode '" + s + "'" );
}

std::string_view
kindName( RecordKind k )
{
   switch( k )
   {
   case RecordKind::kFixedCol:
      return "fixed";
   case RecordKind::kSubstitutedCol:
      return "substituted";
   case RecordKind::kSingletonCol:
      return "singleton";
   case RecordKind::kAffineCol:
      return "affine";
   case RecordKind::kParallelCols:
      return "parallel";
   }
   return "unknown";
}

RecordKind
kindFromName( const std::string& s )
{
   for( int k = 1; k <= 5; ++k )
      if( kindName( static_cast<RecordKind>( k ) ) == s )
         return static_cast<RecordKind>( k );
   corrupt( "unknown entry kind '" + s + "'" );
}

RecordKind
kindFromByte( std::uint8_t b )
{
   if( b < 1 || b > 5 )
      corrupt( "unknown entry kind " + std::to_string( b ) );
   return static_cast<RecordKind>( b );
}

std::string
doubleToString( double x )
{
   char buf[64];
   auto [ptr, ec] = std::to_chars( buf, buf + sizeof( buf ), x );
   return std::string( buf, ptr );
}

double
doubleFromString( const std::string& s )
{
   double v = 0;
   auto [ptr, ec] = std::from_chars( s.data(), s.data() + s.size(), v );
   if( ec != std::errc() || ptr != s.data() + s.size() )
      corrupt( "malformed number '" + s + "'" );
   return v;
}

// ---- binary primitives ---------------------------------------------------

class BinaryWriter
{
 public:
   explicit BinaryWriter( std::ostream& out ) : out( out ) {}

   void
   u8( std::uint8_t v )
   {
      out.put( static_cast<char>( v ) );
   }

   void
   u32( std::uint32_t v )
   {
      for( int b = 0; b < 4; ++b )
         u8( static_cast<std::uint8_t>( v >> ( 8 * b ) ) );
   }

   void
   i32( int v )
   {
      u32( static_cast<std::uint32_t>( v ) );
   }

   void
   u64( std::uint64_t v )
   {
      for( int b = 0; b < 8; ++b )
         u8( static_cast<std::uint8_t>( v >> ( 8 * b ) ) );
   }

   void
   f64( double v )
   {
      u64( std::bit_cast<std::uint64_t>( v ) );
   }

   void
   str( const std::string& s )
   {
      u32( static_cast<std::uint32_t>( s.size() ) );
      out.write( s.data(), static_cast<std::streamsize>( s.size() ) );
   }

   template <typename REAL>
   void
   scalar( const REAL& v )
   {
      if constexpr( NumTraits<REAL>::exact )
         str( numberToString( v ) );
      else
         f64( v );
   }

   template <typename REAL>
   void
   extended( const Extended<REAL>& v )
   {
      if( v.isPosInf() )
         u8( kPosInfTag );
      else if( v.isNegInf() )
         u8( kNegInfTag );
      else
      {
         u8( kFiniteTag );
         scalar( v.value() );
      }
   }

 private:
   std::ostream& out;
};

class BinaryReader
{
 public:
   explicit BinaryReader( std::istream& in ) : in( in ) {}

   std::uint8_t
   u8()
   {
      const int c = in.get();
      if( c == std::char_traits<char>::eof() )
         corrupt( "truncated" );
      return static_cast<std::uint8_t>( c );
   }

   std::uint32_t
   u32()
   {
      std::uint32_t v = 0;
      for( int b = 0; b < 4; ++b )
         v |= static_cast<std::uint32_t>( u8() ) << ( 8 * b );
      return v;
   }

   std::uint32_t
   count()
   {
      const std::uint32_t n = u32();
      if( n > kMaxCount )
         corrupt( "implausible length " + std::to_string( n ) );
      return n;
   }

   int
   i32()
   {
      return static_cast<int>( u32() );
   }

   std::uint64_t
   u64()
   {
      std::uint64_t v = 0;
      for( int b = 0; b < 8; ++b )
         v |= static_cast<std::uint64_t>( u8() ) << ( 8 * b );
      return v;
   }

   double
   f64()
   {
      return std::bit_cast<double>( u64() );
   }

   std::string
   str()
   {
      const std::uint32_t n = count();
      std::string s( n, '\0' );
      in.read( s.data(), n );
      if( static_cast<std::uint32_t>( in.gcount() ) != n )
         corrupt( "truncated" );
      return s;
   }

   template <typename REAL>
   REAL
   scalar()
   {
      if constexpr( NumTraits<REAL>::exact )
      {
         const std::string s = str();
         try
         {
            return parseNumber<REAL>( s );
         }
         catch( const std::invalid_argument& e )
         {
            corrupt( e.what() );
         }
      }
      else
         return f64();
   }

   template <typename REAL>
   Extended<REAL>
   extended()
   {
      switch( u8() )
      {
      case kFiniteTag:
         return Extended<REAL>( scalar<REAL>() );
      case kPosInfTag:
         return Extended<REAL>::posInf();
      case kNegInfTag:
         return Extended<REAL>::negInf();
      default:
         corrupt( "bad value tag" );
      }
   }

 private:
   std::istream& in;
};

template <typename REAL>
void
writeBinary( std::ostream& out, const PostsolveRecord<REAL>& r,
             const RecordTolerances& tol )
{
   BinaryWriter w( out );
   out.write( kMagic, kMagicLen );
   w.u32( kVersion );
   w.u8( static_cast<std::uint8_t>( NumTraits<REAL>::mode ) );
   w.f64( tol.epsilon );
   w.f64( tol.feastol );
   w.f64( tol.hugeval );
   w.i32( r.origNRows );
   w.i32( r.origNCols );
   w.u32( static_cast<std::uint32_t>( r.colNames.size() ) );
   for( const auto& s : r.colNames )
      w.str( s );
   w.u32( static_cast<std::uint32_t>( r.rowNames.size() ) );
   for( const auto& s : r.rowNames )
      w.str( s );
   w.u32( static_cast<std::uint32_t>( r.objective.size() ) );
   for( const REAL& c : r.objective )
      w.scalar( c );
   w.scalar( r.objOffset );
   for( const auto* map : { &r.colMap, &r.rowMap } )
   {
      w.u32( static_cast<std::uint32_t>( map->size() ) );
      for( int v : *map )
         w.i32( v );
   }
   w.u32( static_cast<std::uint32_t>( r.entries.size() ) );
   for( const RecordEntry<REAL>& e : r.entries )
   {
      w.u8( static_cast<std::uint8_t>( e.kind ) );
      w.u32( static_cast<std::uint32_t>( e.ints.size() ) );
      for( int v : e.ints )
         w.i32( v );
      w.u32( static_cast<std::uint32_t>( e.vals.size() ) );
      for( const auto& v : e.vals )
         w.extended( v );
   }
}

template <typename REAL>
PostsolveRecord<REAL>
readBinary( std::istream& in, RecordTolerances* tol )
{
   BinaryReader rd( in );
   char magic[kMagicLen];
   in.read( magic, kMagicLen );
   if( in.gcount() != static_cast<std::streamsize>( kMagicLen ) ||
       std::memcmp( magic, kMagic, kMagicLen ) != 0 )
      corrupt( "bad magic" );
   const std::uint32_t version = rd.u32();
   if( version != kVersion )
      corrupt( "unsupported version " + std::to_string( version ) );
   const auto mode = static_cast<NumericMode>( rd.u8() );
   if( mode != NumTraits<REAL>::mode )
      corrupt( std::string( "stored in " ) + std::string( modeName( mode ) ) +
               " mode" );
   RecordTolerances t;
   t.epsilon = rd.f64();
   t.feastol = rd.f64();
   t.hugeval = rd.f64();
   if( tol != nullptr )
      *tol = t;

   PostsolveRecord<REAL> r;
   r.origNRows = rd.i32();
   r.origNCols = rd.i32();
   r.colNames.resize( rd.count() );
   for( auto& s : r.colNames )
      s = rd.str();
   r.rowNames.resize( rd.count() );
   for( auto& s : r.rowNames )
      s = rd.str();
   r.objective.resize( rd.count() );
   for( REAL& c : r.objective )
      c = rd.scalar<REAL>();
   r.objOffset = rd.scalar<REAL>();
   for( auto* map : { &r.colMap, &r.rowMap } )
   {
      map->resize( rd.count() );
      for( int& v : *map )
         v = rd.i32();
   }
   r.entries.resize( rd.count() );
   for( RecordEntry<REAL>& e : r.entries )
   {
      e.kind = kindFromByte( rd.u8() );
      e.ints.resize( rd.count() );
      for( int& v : e.ints )
         v = rd.i32();
      e.vals.resize( rd.count() );
      for( auto& v : e.vals )
         v = rd.extended<REAL>();
   }
   return r;
}

// ---- text ----------------------------------------------------------------

template <typename REAL>
std::string
textValue( const Extended<REAL>& v )
{
   if( v.isPosInf() )
      return "inf";
   if( v.isNegInf() )
      return "-inf";
   return numberToString( v.value() );
}

template <typename REAL>
void
writeText( std::ostream& out, const PostsolveRecord<REAL>& r,
           const RecordTolerances& tol )
{
   out << kTextMagic << ' ' << kVersion << '\n';
   out << "mode " << modeName( NumTraits<REAL>::mode ) << '\n';
   out << "tolerances " << doubleToString( tol.epsilon ) << ' '
       << doubleToString( tol.feastol ) << ' ' << doubleToString( tol.hugeval )
       << '\n';
   out << "dims " << r.origNRows << ' ' << r.origNCols << '\n';
   out << "colnames " << r.colNames.size() << '\n';
   for( const auto& s : r.colNames )
      out << s << '\n';
   out << "rownames " << r.rowNames.size() << '\n';
   for( const auto& s : r.rowNames )
      out << s << '\n';
   out << "objective " << r.objective.size();
   for( const REAL& c : r.objective )
      out << ' ' << numberToString( c );
   out << '\n';
   out << "offset " << numberToString( r.objOffset ) << '\n';
   out << "colmap " << r.colMap.size();
   for( int v : r.colMap )
      out << ' ' << v;
   out << '\n';
   out << "rowmap " << r.rowMap.size();
   for( int v : r.rowMap )
      out << ' ' << v;
   out << '\n';
   out << "entries " << r.entries.size() << '\n';
   for( const RecordEntry<REAL>& e : r.entries )
   {
      out << kindName( e.kind ) << ' ' << e.ints.size();
      for( int v : e.ints )
         out << ' ' << v;
      out << ' ' << e.vals.size();
      for( const auto& v : e.vals )
         out << ' ' << textValue( v );
      out << '\n';
   }
   out << "end\n";
}

class TextReader
{
 public:
   explicit TextReader( std::istream& in ) : in( in ) {}

   /// next line split into a keyword check plus a token stream
   std::istringstream
   line( const std::string& keyword )
   {
      std::string l;
      if( !std::getline( in, l ) )
         corrupt( "truncated, expected '" + keyword + "'" );
      ++lineNo;
      std::istringstream ls( l );
      std::string k;
      ls >> k;
      if( k != keyword )
         corrupt( "line " + std::to_string( lineNo ) + ": expected '" + keyword +
                  "'" );
      return ls;
   }

   std::string
   rawLine()
   {
      std::string l;
      if( !std::getline( in, l ) )
         corrupt( "truncated" );
      ++lineNo;
      if( !l.empty() && l.back() == '\r' )
         l.pop_back();
      return l;
   }

   template <typename T>
   static T
   get( std::istringstream& ls )
   {
      T v;
      if( !( ls >> v ) )
         corrupt( "malformed field" );
      return v;
   }

   static std::size_t
   count( std::istringstream& ls )
   {
      const auto n = get<long long>( ls );
      if( n < 0 || n > static_cast<long long>( kMaxCount ) )
         corrupt( "implausible length" );
      return static_cast<std::size_t>( n );
   }

   template <typename REAL>
   static Extended<REAL>
   value( std::istringstream& ls )
   {
      const std::string s = get<std::string>( ls );
      if( s == "inf" )
         return Extended<REAL>::posInf();
      if( s == "-inf" )
         return Extended<REAL>::negInf();
      try
      {
         return Extended<REAL>( parseNumber<REAL>( s ) );
      }
      catch( const std::invalid_argument& e )
      {
         corrupt( e.what() );
      }
   }

 private:
   std::istream& in;
   long lineNo = 0;
};

template <typename REAL>
PostsolveRecord<REAL>
readText( std::istream& in, RecordTolerances* tol )
{
   TextReader rd( in );
   {
      auto ls = rd.line( kTextMagic );
      const auto version = TextReader::get<std::uint32_t>( ls );
      if( version != kVersion )
         corrupt( "unsupported version " + std::to_string( version ) );
   }
   {
      auto ls = rd.line( "mode" );
      const NumericMode mode = modeFromName( TextReader::get<std::string>( ls ) );
      if( mode != NumTraits<REAL>::mode )
         corrupt( std::string( "stored in " ) + std::string( modeName( mode ) ) +
                  " mode" );
   }
   {
      auto ls = rd.line( "tolerances" );
      RecordTolerances t;
      t.epsilon = doubleFromString( TextReader::get<std::string>( ls ) );
      t.feastol = doubleFromString( TextReader::get<std::string>( ls ) );
      t.hugeval = doubleFromString( TextReader::get<std::string>( ls ) );
      if( tol != nullptr )
         *tol = t;
   }
   PostsolveRecord<REAL> r;
   {
      auto ls = rd.line( "dims" );
      r.origNRows = TextReader::get<int>( ls );
      r.origNCols = TextReader::get<int>( ls );
   }
   {
      auto ls = rd.line( "colnames" );
      r.colNames.resize( TextReader::count( ls ) );
      for( auto& s : r.colNames )
         s = rd.rawLine();
   }
   {
      auto ls = rd.line( "rownames" );
      r.rowNames.resize( TextReader::count( ls ) );
      for( auto& s : r.rowNames )
         s = rd.rawLine();
   }
   {
      auto ls = rd.line( "objective" );
      r.objective.resize( TextReader::count( ls ) );
      for( REAL& c : r.objective )
      {
         const Extended<REAL> v = TextReader::value<REAL>( ls );
         if( !v.isFinite() )
            corrupt( "infinite objective coefficient" );
         c = v.value();
      }
   }
   {
      auto ls = rd.line( "offset" );
      const Extended<REAL> v = TextReader::value<REAL>( ls );
      if( !v.isFinite() )
         corrupt( "infinite objective offset" );
      r.objOffset = v.value();
   }
   for( auto [key, map] : { std::pair{ "colmap", &r.colMap },
                            std::pair{ "rowmap", &r.rowMap } } )
   {
      auto ls = rd.line( key );
      map->resize( TextReader::count( ls ) );
      for( int& v : *map )
         v = TextReader::get<int>( ls );
   }
   {
      auto ls = rd.line( "entries" );
      r.entries.resize( TextReader::count( ls ) );
   }
   for( RecordEntry<REAL>& e : r.entries )
   {
      std::istringstream ls( rd.rawLine() );
      e.kind = kindFromName( TextReader::get<std::string>( ls ) );
      e.ints.resize( TextReader::count( ls ) );
      for( int& v : e.ints )
         v = TextReader::get<int>( ls );
      e.vals.resize( TextReader::count( ls ) );
      for( auto& v : e.vals )
         v = TextReader::value<REAL>( ls );
   }
   rd.line( "end" );
   return r;
}

/// index sanity so postsolve never reads out of range
template <typename REAL>
void
validate( const PostsolveRecord<REAL>& r )
{
   const auto inRange = []( int v, int n ) { return v >= 0 && v < n; };
   if( r.origNRows < 0 || r.origNCols < 0 ||
       r.colNames.size() != static_cast<std::size_t>( r.origNCols ) ||
       r.rowNames.size() != static_cast<std::size_t>( r.origNRows ) ||
       r.objective.size() != static_cast<std::size_t>( r.origNCols ) )
      corrupt( "inconsistent dimensions" );
   for( int v : r.colMap )
      if( !inRange( v, r.origNCols ) )
         corrupt( "column map out of range" );
   for( int v : r.rowMap )
      if( !inRange( v, r.origNRows ) )
         corrupt( "row map out of range" );
   for( std::size_t k = 0; k < r.entries.size(); ++k )
   {
      const RecordEntry<REAL>& e = r.entries[k];
      std::size_t nints = 0;
      std::size_t nvals = 0;
      switch( e.kind )
      {
      case RecordKind::kFixedCol:
         nints = 1;
         nvals = 1;
         break;
      case RecordKind::kSubstitutedCol:
         nints = 2;
         nvals = 4;
         break;
      case RecordKind::kSingletonCol:
         nints = 2;
         nvals = 5;
         break;
      case RecordKind::kAffineCol:
         nints = 2;
         nvals = 4;
         break;
      case RecordKind::kParallelCols:
         nints = 3;
         nvals = 5;
         break;
      }
      const bool variadic = e.kind == RecordKind::kSubstitutedCol ||
                            e.kind == RecordKind::kSingletonCol;
      if( variadic ? ( e.ints.size() < nints ||
                       e.ints.size() - nints != e.vals.size() - nvals ||
                       e.vals.size() < nvals )
                   : ( e.ints.size() != nints || e.vals.size() != nvals ) )
         corrupt( "entry " + std::to_string( k ) + " has a bad layout" );
      for( std::size_t i = 0; i < e.ints.size(); ++i )
      {
         const bool isRow = variadic && i == 1;
         const bool isFlag = e.kind == RecordKind::kParallelCols && i == 2;
         if( isFlag )
            continue;
         if( !inRange( e.ints[i], isRow ? r.origNRows : r.origNCols ) )
            corrupt( "entry " + std::to_string( k ) + " index out of range" );
      }
   }
}

bool
isTextStream( std::istream& in )
{
   const auto start = in.tellg();
   char buf[sizeof( kTextMagic ) - 1];
   in.read( buf, sizeof( buf ) );
   const bool text = in.gcount() == static_cast<std::streamsize>( sizeof( buf ) ) &&
                     std::memcmp( buf, kTextMagic, sizeof( buf ) ) == 0;
   in.clear();
   in.seekg( start );
   return text;
}

} // namespace

template <typename REAL>
void
writeRecord( std::ostream& out, const PostsolveRecord<REAL>& record,
             const RecordTolerances& tolerances, RecordFormat format )
{
   if( format == RecordFormat::kBinary )
      writeBinary( out, record, tolerances );
   else
      writeText( out, record, tolerances );
}

template <typename REAL>
void
writeRecordFile( const std::string& path, const PostsolveRecord<REAL>& record,
                 const RecordTolerances& tolerances, RecordFormat format )
{
   std::ofstream out( path, std::ios::binary );
   if( !out )
      throw std::runtime_error( "cannot write '" + path + "'" );
   writeRecord( out, record, tolerances, format );
   if( !out )
      throw std::runtime_error( "write to '" + path + "' failed" );
}

NumericMode
peekRecordMode( std::istream& in )
{
   const auto start = in.tellg();
   NumericMode mode;
   if( isTextStream( in ) )
   {
      std::string header;
      std::string key;
      std::string name;
      std::getline( in, header );
      if( !( in >> key >> name ) || key != "mode" )
         corrupt( "missing mode line" );
      mode = modeFromName( name );
   }
   else
   {
      char magic[kMagicLen];
      in.read( magic, kMagicLen );
      if( in.gcount() != static_cast<std::streamsize>( kMagicLen ) ||
          std::memcmp( magic, kMagic, kMagicLen ) != 0 )
         corrupt( "bad magic" );
      BinaryReader rd( in );
      rd.u32();
      const std::uint8_t m = rd.u8();
      if( m > 1 )
         corrupt( "unknown numeric mode" );
      mode = static_cast<NumericMode>( m );
   }
   in.clear();
   in.seekg( start );
   return mode;
}

NumericMode
peekRecordModeFile( const std::string& path )
{
   std::ifstream in( path, std::ios::binary );
   if( !in )
      throw std::runtime_error( "cannot open '" + path + "'" );
   return peekRecordMode( in );
}

template <typename REAL>
PostsolveRecord<REAL>
readRecord( std::istream& in, RecordTolerances* tolerances )
{
   PostsolveRecord<REAL> r = isTextStream( in ) ? readText<REAL>( in, tolerances )
                                                : readBinary<REAL>( in, tolerances );
   validate( r );
   return r;
}

template <typename REAL>
PostsolveRecord<REAL>
readRecordFile( const std::string& path, RecordTolerances* tolerances )
{
   std::ifstream in( path, std::ios::binary );
   if( !in )
      throw std::runtime_error( "cannot open '" + path + "'" );
   return readRecord<REAL>( in, tolerances );
}

template void
writeRecord<double>( std::ostream&, const PostsolveRecord<double>&,
                     const RecordTolerances&, RecordFormat );
template void
writeRecord<Rational>( std::ostream&, const PostsolveRecord<Rational>&,
                       const RecordTolerances&, RecordFormat );
template void
writeRecordFile<double>( const std::string&, const PostsolveRecord<double>&,
                         const RecordTolerances&, RecordFormat );
template void
writeRecordFile<Rational>( const std::string&, const PostsolveRecord<Rational>&,
                           const RecordTolerances&, RecordFormat );
template PostsolveRecord<double>
readRecord<double>( std::istream&, RecordTolerances* );
template PostsolveRecord<Rational>
readRecord<Rational>( std::istream&, RecordTolerances* );
template PostsolveRecord<double>
readRecordFile<double>( const std::string&, RecordTolerances* );
template PostsolveRecord<Rational>
readRecordFile<Rational>( const std::string&, RecordTolerances* );

} // namespace parapre
