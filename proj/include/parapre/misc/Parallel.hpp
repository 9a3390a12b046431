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
#ifndef PARAPRE_MISC_PARALLEL_HPP_
#define PARAPRE_MISC_PARALLEL_HPP_

#include <algorithm>
#include <iterator>
#include <vector>

#include <tbb/parallel_for.h>

namespace parapre
{

/// Splits [0, n) into chunks of fixed size, runs body(begin, end, out) per
/// chunk and concatenates the outputs in chunk order. The chunk size does
/// not depend on the thread count, so the result is the same whether the
/// chunks run concurrently or not.
template <typename T, typename Body>
std::vector<T>
chunkedCollect( int n, int chunkSize, bool parallel, Body&& body )
{
   std::vector<T> result;
   if( n <= 0 )
      return result;
   const int nchunks = ( n + chunkSize - 1 ) / chunkSize;
   std::vector<std::vector<T>> parts( nchunks );
   auto runChunk = [&]( int c ) {
      const int begin = c * chunkSize;
      const int end = std::min( n, begin + chunkSize );
      body( begin, end, parts[c] );
   };
   if( parallel && nchunks > 1 )
      tbb::parallel_for( 0, nchunks, runChunk );
   else
      for( int c = 0; c < nchunks; ++c )
         runChunk( c );
   std::size_t total = 0;
   for( const auto& p : parts )
      total += p.size();
   result.reserve( total );
   for( auto& p : parts )
      std::move( p.begin(), p.end(), std::back_inserter( result ) );
   return result;
}

} // namespace parapre

#endif
