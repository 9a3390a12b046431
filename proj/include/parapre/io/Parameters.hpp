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
#ifndef PARAPRE_IO_PARAMETERS_HPP_
#define PARAPRE_IO_PARAMETERS_HPP_

#include <functional>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "parapre/core/Scheduler.hpp"
#include "parapre/io/Mps.hpp"
#include "parapre/io/RecordIO.hpp"

namespace parapre
{

class ParameterError : public std::runtime_error
{
 public:
   using std::runtime_error::runtime_error;
};

struct ParameterInfo
{
   std::string key;
   std::string defaultValue;
   std::string description;
};

enum class ParameterSource
{
   kDefault,
   kFile,
   kEnvironment,
   kFlag,
};

/// Named string parameters resolved with the precedence
/// flags > environment > file > defaults, independent of load order.
class ParameterSet
{
 public:
   ParameterSet();

   const std::vector<ParameterInfo>&
   known() const
   {
      return infos;
   }

   bool
   isKnown( const std::string& key ) const;

   /// `key = value` lines, `#` starts a comment
   void
   loadFile( const std::string& path );

   void
   loadStream( std::istream& in, const std::string& sourceName );

   /// looks up PARAPRE_<KEY> for every known key, see envName()
   void
   loadEnvironment(
       const std::function<const char*( const char* )>& lookup = defaultLookup );

   void
   setFlag( const std::string& key, const std::string& value );

   std::string
   get( const std::string& key ) const;

   ParameterSource
   sourceOf( const std::string& key ) const;

   /// PARAPRE_ followed by the key in upper case with dots as underscores
   static std::string
   envName( const std::string& key );

   /// throws ParameterError on values that do not parse or are out of range
   PresolveOptions
   presolveOptions() const;

   MpsOptions
   mpsOptions() const;

   RecordFormat
   recordFormat() const;

   /// all resolved values as key = value lines, in registration order
   void
   write( std::ostream& out ) const;

 private:
   static const char*
   defaultLookup( const char* name );

   void
   require( const std::string& key ) const;

   std::vector<ParameterInfo> infos;
   std::map<std::string, std::size_t> index;
   std::map<std::string, std::string> fileValues;
   std::map<std::string, std::string> envValues;
   std::map<std::string, std::string> flagValues;
};

} // namespace parapre

#endif
