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
#ifndef PARAPRE_IO_STATISTICS_HPP_
#define PARAPRE_IO_STATISTICS_HPP_

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "parapre/core/Scheduler.hpp"

namespace parapre
{

/// one key=value line per figure; per presolver keys are
/// presolver.<name>.<field>
void
writeStatistics( std::ostream& out, const PresolveStatistics& stats,
                 PresolveStatus status );

/// inverse of writeStatistics at the key=value level
std::map<std::string, std::string>
readStatistics( std::istream& in );

/// exp(mean(log(v + shift))) - shift; values must be >= 0, shift > 0
double
shiftedGeomean( const std::vector<double>& values, double shift = 1.0 );

} // namespace parapre

#endif
