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
#ifndef PARAPRE_IO_SOLUTION_HPP_
#define PARAPRE_IO_SOLUTION_HPP_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "parapre/core/Num.hpp"

namespace parapre
{

/// one `<name> <value>` line per column after an `=obj= <value>` line
template <typename REAL>
void
writeSolution( std::ostream& out, const std::vector<std::string>& names,
               const std::vector<REAL>& values, const REAL& objective );

/// values by column name; columns missing from the file are zero, unknown
/// names and malformed lines are errors
template <typename REAL>
std::vector<REAL>
readSolution( std::istream& in, const std::vector<std::string>& names );

template <typename REAL>
std::vector<REAL>
readSolutionFile( const std::string& path, const std::vector<std::string>& names );

extern template void
writeSolution<double>( std::ostream&, const std::vector<std::string>&,
                       const std::vector<double>&, const double& );
extern template void
writeSolution<Rational>( std::ostream&, const std::vector<std::string>&,
                         const std::vector<Rational>&, const Rational& );
extern template std::vector<double>
readSolution<double>( std::istream&, const std::vector<std::string>& );
extern template std::vector<Rational>
readSolution<Rational>( std::istream&, const std::vector<std::string>& );
extern template std::vector<double>
readSolutionFile<double>( const std::string&, const std::vector<std::string>& );
extern template std::vector<Rational>
readSolutionFile<Rational>( const std::string&, const std::vector<std::string>& );

} // namespace parapre

#endif
