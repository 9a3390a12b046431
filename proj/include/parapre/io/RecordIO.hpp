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
#ifndef PARAPRE_IO_RECORD_IO_HPP_
#define PARAPRE_IO_RECORD_IO_HPP_

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "parapre/core/PostsolveRecord.hpp"

namespace parapre
{

enum class RecordFormat
{
   /// versioned, little endian, length prefixed
   kBinary,
   /// line based, for inspection
   kText,
};

/// tolerances the record was produced with, stored alongside it
struct RecordTolerances
{
   double epsilon = 1e-9;
   double feastol = 1e-6;
   double hugeval = 1e8;
};

class RecordFormatError : public std::runtime_error
{
 public:
   using std::runtime_error::runtime_error;
};

template <typename REAL>
void
writeRecord( std::ostream& out, const PostsolveRecord<REAL>& record,
             const RecordTolerances& tolerances, RecordFormat format );

template <typename REAL>
void
writeRecordFile( const std::string& path, const PostsolveRecord<REAL>& record,
                 const RecordTolerances& tolerances, RecordFormat format );

/// numeric mode of a record stream without consuming it; either format
NumericMode
peekRecordMode( std::istream& in );

NumericMode
peekRecordModeFile( const std::string& path );

/// reads either format; the stored mode must match REAL
template <typename REAL>
PostsolveRecord<REAL>
readRecord( std::istream& in, RecordTolerances* tolerances = nullptr );

template <typename REAL>
PostsolveRecord<REAL>
readRecordFile( const std::string& path, RecordTolerances* tolerances = nullptr );

extern template void
writeRecord<double>( std::ostream&, const PostsolveRecord<double>&,
                     const RecordTolerances&, RecordFormat );
extern template void
writeRecord<Rational>( std::ostream&, const PostsolveRecord<Rational>&,
                       const RecordTolerances&, RecordFormat );
extern template void
writeRecordFile<double>( const std::string&, const PostsolveRecord<double>&,
                         const RecordTolerances&, RecordFormat );
extern template void
writeRecordFile<Rational>( const std::string&, const PostsolveRecord<Rational>&,
                           const RecordTolerances&, RecordFormat );
extern template PostsolveRecord<double>
readRecord<double>( std::istream&, RecordTolerances* );
extern template PostsolveRecord<Rational>
readRecord<Rational>( std::istream&, RecordTolerances* );
extern template PostsolveRecord<double>
readRecordFile<double>( const std::string&, RecordTolerances* );
extern template PostsolveRecord<Rational>
readRecordFile<Rational>( const std::string&, RecordTolerances* );

} // namespace parapre

#endif
