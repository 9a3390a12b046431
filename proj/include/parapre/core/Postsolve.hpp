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
#ifndef PARAPRE_CORE_POSTSOLVE_HPP_
#define PARAPRE_CORE_POSTSOLVE_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "parapre/core/PostsolveRecord.hpp"

namespace parapre
{

template <typename REAL>
struct Solution
{
   std::vector<REAL> values;
   REAL objective{ 0 };
};

/// raised when the reduced solution does not fit a record entry
class PostsolveError : public std::runtime_error
{
 public:
   PostsolveError( int entry, const std::string& what )
       : std::runtime_error( "record entry " + std::to_string( entry ) + ": " + what ),
         entryIndex( entry )
   {
   }

   int
   entry() const
   {
      return entryIndex;
   }

 private:
   int entryIndex;
};

/// maps a solution of the reduced problem (indexed like its columns) to
/// the original column space, walking the record backwards
template <typename REAL>
Solution<REAL>
postsolvePrimal( const PostsolveRecord<REAL>& record,
                 const std::vector<REAL>& reducedValues, const Num<REAL>& num );

/// c^T x + offset of the original objective
template <typename REAL>
REAL
originalObjective( const PostsolveRecord<REAL>& record, const std::vector<REAL>& x );

extern template Solution<double>
postsolvePrimal<double>( const PostsolveRecord<double>&, const std::vector<double>&,
                         const Num<double>& );
extern template Solution<Rational>
postsolvePrimal<Rational>( const PostsolveRecord<Rational>&, const std::vector<Rational>&,
                           const Num<Rational>& );
extern template double
originalObjective<double>( const PostsolveRecord<double>&, const std::vector<double>& );
extern template Rational
originalObjective<Rational>( const PostsolveRecord<Rational>&, const std::vector<Rational>& );

} // namespace parapre

#endif
