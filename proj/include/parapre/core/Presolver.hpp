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
#ifndef PARAPRE_CORE_PRESOLVER_HPP_
#define PARAPRE_CORE_PRESOLVER_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parapre/core/Problem.hpp"
#include "parapre/core/Transaction.hpp"

namespace parapre
{

enum class Tier : std::uint8_t
{
   kFast,
   kMedium,
   kExhaustive,
};

std::string_view
tierName( Tier tier );

struct PresolverDescriptor
{
   std::string name;
   Tier tier = Tier::kFast;
   bool delayed = false;
   /// position within the tier; transactions are applied in this order
   int applyOrder = 0;
   bool internalParallel = false;
   bool enabled = true;
};

/// Read-only input of one presolver call.
template <typename REAL>
struct PresolveView
{
   const Problem<REAL>& problem;
   /// rows/cols touched since this presolver's previous call (all on the
   /// first call)
   std::span<const int> changedRows;
   std::span<const int> changedCols;
   /// run internally parallel parts concurrently
   bool parallel = false;

   const Num<REAL>&
   num() const
   {
      return problem.getNum();
   }
};

/// A reduction technique. run() must not mutate shared state and its
/// result may depend only on the view and the descriptor.
template <typename REAL>
class Presolver
{
 public:
   explicit Presolver( PresolverDescriptor d ) : desc( std::move( d ) ) {}

   virtual ~Presolver() = default;

   const PresolverDescriptor&
   descriptor() const
   {
      return desc;
   }

   PresolverDescriptor&
   descriptor()
   {
      return desc;
   }

   const std::string&
   name() const
   {
      return desc.name;
   }

   virtual void
   run( const PresolveView<REAL>& view,
        std::vector<Transaction<REAL>>& out ) const = 0;

 private:
   PresolverDescriptor desc;
};

} // namespace parapre

#endif
