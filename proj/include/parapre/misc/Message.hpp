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
#ifndef PARAPRE_MISC_MESSAGE_HPP_
#define PARAPRE_MISC_MESSAGE_HPP_

#include <cstdio>
#include <ostream>
#include <string_view>

#include <fmt/format.h>

namespace parapre
{

enum class VerbosityLevel : int
{
   kQuiet = 0,
   kError = 1,
   kInfo = 2,
   kDetailed = 3,
   kTransactions = 4,
};

/// Line-oriented log sink filtered by verbosity. A line printed at level k
/// is printed at every level >= k.
class Message
{
 public:
   Message() = default;

   Message( int verbosity, std::ostream* out )
       : verbosity( verbosity ), out( out )
   {
   }

   void
   setVerbosity( int v )
   {
      verbosity = v;
   }

   int
   getVerbosity() const
   {
      return verbosity;
   }

   void
   setOutput( std::ostream* o )
   {
      out = o;
   }

   bool
   enabled( VerbosityLevel level ) const
   {
      return out != nullptr && verbosity >= static_cast<int>( level );
   }

   template <typename... Args>
   void
   print( VerbosityLevel level, fmt::format_string<Args...> f,
          Args&&... args ) const
   {
      if( !enabled( level ) )
         return;
      *out << fmt::format( f, std::forward<Args>( args )... ) << '\n';
   }

   template <typename... Args>
   void
   info( fmt::format_string<Args...> f, Args&&... args ) const
   {
      print( VerbosityLevel::kInfo, f, std::forward<Args>( args )... );
   }

   template <typename... Args>
   void
   detailed( fmt::format_string<Args...> f, Args&&... args ) const
   {
      print( VerbosityLevel::kDetailed, f, std::forward<Args>( args )... );
   }

   template <typename... Args>
   void
   error( fmt::format_string<Args...> f, Args&&... args ) const
   {
      print( VerbosityLevel::kError, f, std::forward<Args>( args )... );
   }

 private:
   int verbosity = 2;
   std::ostream* out = nullptr;
};

} // namespace parapre

#endif
