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
#include "parapre/presolvers/Sparsify.hpp"

#include <algorithm>
#include <map>

#include "parapre/misc/Parallel.hpp"

namespace parapre
{

template <typename REAL>
Sparsify<REAL>::Sparsify()
    : Presolver<REAL>( { "sparsify", Tier::kExhaustive, true, 16, true, true } )
{
}

namespace
{

constexpr int kMaxColumnScan = 1000;
constexpr int kMaxTargetsPerEquation = 200;
constexpr int kEquationsPerChunk = 32;

template <typename REAL>
struct SparsifyStep
{
   int target;
   int equation;
   REAL scale;
};

} // namespace

template <typename REAL>
void
Sparsify<REAL>::run( const PresolveView<REAL>& view,
                     std::vector<Transaction<REAL>>& out ) const
{
   const Problem<REAL>& problem = view.problem;
   const Num<REAL>& num = view.num();

   std::vector<int> equations;
   for( int i = 0; i < problem.getNRows(); ++i )
      if( problem.isRowActive( i ) && problem.isEquation( i ) && problem.getRowSize( i ) >= 2 )
         equations.push_back( i );

   const std::vector<SparsifyStep<REAL>> steps = chunkedCollect<SparsifyStep<REAL>>(
       static_cast<int>( equations.size() ), kEquationsPerChunk, view.parallel,
       [&]( int begin, int end, std::vector<SparsifyStep<REAL>>& res ) {
          for( int p = begin; p < end; ++p )
          {
             const int e = equations[p];
             const std::vector<MatrixEntry<REAL>> eq = problem.activeRow( e );
             // rows sharing at least two columns with the equation
             std::map<int, int> shared;
             for( const auto& entry : eq )
             {
                if( problem.getColSize( entry.index ) > kMaxColumnScan )
                   continue;
                problem.forEachInCol( entry.index, [&]( int t, const REAL& ) {
                   if( t != e )
                      ++shared[t];
                } );
             }
             int ntargets = 0;
             for( const auto& [t, count] : shared )
             {
                if( count < 2 )
                   continue;
                if( ++ntargets > kMaxTargetsPerEquation )
                   break;
                // try each scale that cancels one shared entry
                long bestGain = 0;
                REAL bestScale{ 0 };
                for( const auto& entry : eq )
                {
                   const REAL* at = problem.findActive( t, entry.index );
                   if( at == nullptr )
                      continue;
                   const REAL s = -*at / entry.value;
                   long gain = 0;
                   for( const auto& f : eq )
                   {
                      const REAL* tf = problem.findActive( t, f.index );
                      if( tf == nullptr )
                         --gain;
                      else if( num.isZero( REAL( *tf + s * f.value ) ) )
                         ++gain;
                   }
                   if( gain > bestGain )
                   {
                      bestGain = gain;
                      bestScale = s;
                   }
                }
                if( bestGain > 0 )
                   res.push_back( { t, e, bestScale } );
             }
          }
       } );

   TransactionBuilder<REAL> tb;
   for( const SparsifyStep<REAL>& s : steps )
   {
      tb.assertRow( s.target );
      tb.assertRow( s.equation );
      tb.addScaledRow( s.target, s.equation, s.scale );
      tb.emitTo( out );
   }
}

template class Sparsify<double>;
template class Sparsify<Rational>;

} // namespace parapre
