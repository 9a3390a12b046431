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
#ifndef PARAPRE_IO_MPS_HPP_
#define PARAPRE_IO_MPS_HPP_

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "parapre/core/Problem.hpp"

namespace parapre
{

enum class MpsFormat
{
   /// whitespace separated fields
   kFree,
   /// fields at the classic column positions; names may contain spaces
   kFixed,
};

struct MpsOptions
{
   MpsFormat format = MpsFormat::kFree;
   /// integral columns without bounds default to [0, 1] instead of [0, inf)
   bool legacyIntegerBounds = false;
};

/// set by the reader; the stored problem is always a minimization
struct MpsInfo
{
   bool maximize = false;
};

class MpsError : public std::runtime_error
{
 public:
   MpsError( long line, const std::string& what );

   /// 1-based line number, 0 if not tied to a line
   long
   line() const
   {
      return lineNo;
   }

 private:
   long lineNo;
};

/// reads a problem; a maximization objective is negated
template <typename REAL>
Problem<REAL>
readMps( std::istream& in, const Num<REAL>& num, const MpsOptions& options = {},
         MpsInfo* info = nullptr );

template <typename REAL>
Problem<REAL>
readMpsFile( const std::string& path, const Num<REAL>& num,
             const MpsOptions& options = {}, MpsInfo* info = nullptr );

/// free format in canonical order: columns by index, entries of a column by
/// row index; only active rows and columns are written
template <typename REAL>
void
writeMps( const Problem<REAL>& problem, std::ostream& out );

template <typename REAL>
void
writeMpsFile( const Problem<REAL>& problem, const std::string& path );

extern template Problem<double>
readMps<double>( std::istream&, const Num<double>&, const MpsOptions&, MpsInfo* );
extern template Problem<Rational>
readMps<Rational>( std::istream&, const Num<Rational>&, const MpsOptions&,
                   MpsInfo* );
extern template Problem<double>
readMpsFile<double>( const std::string&, const Num<double>&, const MpsOptions&,
                     MpsInfo* );
extern template Problem<Rational>
readMpsFile<Rational>( const std::string&, const Num<Rational>&,
                       const MpsOptions&, MpsInfo* );
extern template void
writeMps<double>( const Problem<double>&, std::ostream& );
extern template void
writeMps<Rational>( const Problem<Rational>&, std::ostream& );
extern template void
writeMpsFile<double>( const Problem<double>&, const std::string& );
extern template void
writeMpsFile<Rational>( const Problem<Rational>&, const std::string& );

} // namespace parapre

#endif
