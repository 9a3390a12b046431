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
#include "parapre/core/Postsolve.hpp"

#include <fmt/format.h>

namespace parapre
{

namespace
{

template <typename REAL>
class Walker
{
 public:
   Walker( const PostsolveRecord<REAL>& rec, const Num<REAL>& n )
       : record( rec ), num( n ), x( rec.origNCols, REAL( 0 ) ),
         known( rec.origNCols, false )
   {
   }

   Solution<REAL>
   run( const std::vector<REAL>& reduced )
   {
      if( reduced.size() != record.colMap.size() )
         throw PostsolveError( -1, fmt::format( "reduced solution has {} values, expected {}",
                                                reduced.size(), record.colMap.size() ) );
      for( std::size_t r = 0; r < reduced.size(); ++r )
         set( record.colMap[r], reduced[r] );
      for( int e = static_cast<int>( record.entries.size() ) - 1; e >= 0; --e )
      {
         entry = e;
         const RecordEntry<REAL>& re = record.entries[e];
         switch( re.kind )
         {
         case RecordKind::kFixedCol:
            set( re.ints[0], re.vals[0].value() );
            break;
         case RecordKind::kSubstitutedCol:
            substituted( re );
            break;
         case RecordKind::kSingletonCol:
            singleton( re );
            break;
         case RecordKind::kAffineCol:
            affine( re );
            break;
         case RecordKind::kParallelCols:
            parallel( re );
            break;
         default:
            throw PostsolveError( e, "unknown record kind" );
         }
      }
      for( int j = 0; j < record.origNCols; ++j )
         if( !known[j] )
            throw PostsolveError( -1, "no value for column " + record.colNames[j] );
      Solution<REAL> sol;
      sol.objective = originalObjective( record, x );
      sol.values = std::move( x );
      return sol;
   }

 private:
   void
   set( int j, const REAL& v )
   {
      x[j] = v;
      known[j] = true;
   }

   const REAL&
   get( int j ) const
   {
      if( !known[j] )
         throw PostsolveError( entry, "column " + record.colNames[j] +
                                          " is used before it has a value" );
      return x[j];
   }

   void
   checkBounds( int j, const REAL& v, const Extended<REAL>& l, const Extended<REAL>& u ) const
   {
      if( ( l.isFinite() && num.isFeasLT( v, l.value() ) ) ||
          ( u.isFinite() && num.isFeasGT( v, u.value() ) ) )
         throw PostsolveError( entry, fmt::format( "value {} of column {} violates its bounds",
                                                   NumTraits<REAL>::toDouble( v ),
                                                   record.colNames[j] ) );
   }

   /// sum over k of a_k x_k for ints/vals starting at the given offsets
   REAL
   restActivity( const RecordEntry<REAL>& re, std::size_t firstInt, std::size_t firstVal ) const
   {
      REAL r{ 0 };
      for( std::size_t p = firstInt; p < re.ints.size(); ++p )
         r += re.vals[firstVal + p - firstInt].value() * get( re.ints[p] );
      return r;
   }

   void
   substituted( const RecordEntry<REAL>& re )
   {
      // x_j = (b - sum a_k x_k) / a_j
      const int j = re.ints[0];
      const REAL v = ( re.vals[0].value() - restActivity( re, 2, 4 ) ) / re.vals[1].value();
      checkBounds( j, v, re.vals[2], re.vals[3] );
      set( j, v );
   }

   void
   singleton( const RecordEntry<REAL>& re )
   {
      // L <= a_j x_j + rest <= U with x_j in [l_j, u_j]; x_j had no cost
      // unless the row was an equation, so any feasible value will do
      const int j = re.ints[0];
      const REAL& a = re.vals[0].value();
      const REAL rest = restActivity( re, 2, 5 );
      const Extended<REAL> s1 = ( re.vals[1] - Extended<REAL>( rest ) ) / a;
      const Extended<REAL> s2 = ( re.vals[2] - Extended<REAL>( rest ) ) / a;
      Extended<REAL> lo = a > 0 ? s1 : s2;
      Extended<REAL> hi = a > 0 ? s2 : s1;
      if( re.vals[3] > lo )
         lo = re.vals[3];
      if( re.vals[4] < hi )
         hi = re.vals[4];
      if( lo.isFinite() && hi.isFinite() && num.isFeasGT( lo.value(), hi.value() ) )
         throw PostsolveError( entry, "no feasible value for singleton column " +
                                          record.colNames[j] );
      // value closest to zero
      REAL v{ 0 };
      if( lo.isFinite() && lo.value() > 0 )
         v = lo.value();
      else if( hi.isFinite() && hi.value() < 0 )
         v = hi.value();
      if( lo.isFinite() && hi.isFinite() && lo.value() > hi.value() )
         v = hi.value();
      set( j, v );
   }

   void
   affine( const RecordEntry<REAL>& re )
   {
      const int j = re.ints[0];
      const REAL v = re.vals[0].value() + re.vals[1].value() * get( re.ints[1] );
      checkBounds( j, v, re.vals[2], re.vals[3] );
      set( j, v );
   }

   void
   parallel( const RecordEntry<REAL>& re )
   {
      // y = x_j + s x_k with x_j in [l_j, u_j] and x_k in [l_k, u_k]
      const int j = re.ints[0];
      const int k = re.ints[1];
      const bool integral = re.ints[2] != 0;
      const REAL& s = re.vals[0].value();
      const REAL y = get( j );
      const Extended<REAL>& lk = re.vals[3];
      const Extended<REAL>& uk = re.vals[4];
      Extended<REAL> lo = s > 0 ? Extended<REAL>( y ) - uk * s : Extended<REAL>( y ) - lk * s;
      Extended<REAL> hi = s > 0 ? Extended<REAL>( y ) - lk * s : Extended<REAL>( y ) - uk * s;
      if( re.vals[1] > lo )
         lo = re.vals[1];
      if( re.vals[2] < hi )
         hi = re.vals[2];
      if( integral )
      {
         if( lo.isFinite() )
            lo = num.feasCeil( lo.value() );
         if( hi.isFinite() )
            hi = num.feasFloor( hi.value() );
      }
      if( lo.isFinite() && hi.isFinite() && num.isFeasGT( lo.value(), hi.value() ) )
         throw PostsolveError( entry, "merged value of columns " + record.colNames[j] + " and " +
                                          record.colNames[k] + " cannot be split" );
      // the lower index column takes the largest share
      const bool maximizeXj = j < k || s < 0;
      const Extended<REAL>& start = maximizeXj ? hi : lo;
      const Extended<REAL>& other = maximizeXj ? lo : hi;
      REAL xj = start.isFinite() ? start.value() : other.isFinite() ? other.value() : REAL( 0 );
      if( integral )
      {
         // step towards the other end until x_k = (y - x_j) / s is integral
         const REAL step = maximizeXj ? REAL( -1 ) : REAL( 1 );
         const REAL as = Num<REAL>::abs( s );
         REAL tries{ 0 };
         while( !num.isIntegral( REAL( ( y - xj ) / s ) ) && tries < as )
         {
            xj += step;
            tries += 1;
         }
         if( !num.isIntegral( REAL( ( y - xj ) / s ) ) ||
             ( lo.isFinite() && num.isFeasLT( xj, lo.value() ) ) ||
             ( hi.isFinite() && num.isFeasGT( xj, hi.value() ) ) )
            throw PostsolveError( entry, "no integral split for columns " + record.colNames[j] +
                                             " and " + record.colNames[k] );
      }
      set( j, xj );
      set( k, ( y - xj ) / s );
   }

   const PostsolveRecord<REAL>& record;
   const Num<REAL>& num;
   std::vector<REAL> x;
   std::vector<bool> known;
   int entry = -1;
};

} // namespace

template <typename REAL>
REAL
originalObjective( const PostsolveRecord<REAL>& record, const std::vector<REAL>& x )
{
   REAL obj = record.objOffset;
   for( std::size_t j = 0; j < record.objective.size(); ++j )
      obj += record.objective[j] * x[j];
   return obj;
}

template <typename REAL>
Solution<REAL>
postsolvePrimal( const PostsolveRecord<REAL>& record, const std::vector<REAL>& reducedValues,
                 const Num<REAL>& num )
{
   Walker<REAL> walker( record, num );
   return walker.run( reducedValues );
}

template Solution<double>
postsolvePrimal<double>( const PostsolveRecord<double>&, const std::vector<double>&,
                         const Num<double>& );
template Solution<Rational>
postsolvePrimal<Rational>( const PostsolveRecord<Rational>&, const std::vector<Rational>&,
                           const Num<Rational>& );
template double
originalObjective<double>( const PostsolveRecord<double>&, const std::vector<double>& );
template Rational
originalObjective<Rational>( const PostsolveRecord<Rational>&, const std::vector<Rational>& );

} // namespace parapre
