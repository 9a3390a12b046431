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
#include "parapre/presolvers/Registry.hpp"

#include <algorithm>

#include "parapre/presolvers/CoeffTightening.hpp"
#include "parapre/presolvers/ColSingleton.hpp"
#include "parapre/presolvers/DomCol.hpp"
#include "parapre/presolvers/DoubleToNEq.hpp"
#include "parapre/presolvers/DualFix.hpp"
#include "parapre/presolvers/DualInfer.hpp"
#include "parapre/presolvers/FixContinuous.hpp"
#include "parapre/presolvers/ImplInt.hpp"
#include "parapre/presolvers/ParallelCols.hpp"
#include "parapre/presolvers/ParallelRows.hpp"
#include "parapre/presolvers/Probing.hpp"
#include "parapre/presolvers/Propagation.hpp"
#include "parapre/presolvers/SimpleProbing.hpp"
#include "parapre/presolvers/SimplifyIneq.hpp"
#include "parapre/presolvers/Sparsify.hpp"
#include "parapre/presolvers/Stuffing.hpp"
#include "parapre/presolvers/Substitution.hpp"

namespace parapre
{

std::string_view
tierName( Tier tier )
{
   switch( tier )
   {
   case Tier::kFast:
      return "fast";
   case Tier::kMedium:
      return "medium";
   case Tier::kExhaustive:
      return "exhaustive";
   }
   return "unknown";
}

template <typename REAL>
std::vector<std::unique_ptr<Presolver<REAL>>>
makeDefaultPresolvers()
{
   std::vector<std::unique_ptr<Presolver<REAL>>> list;
   list.push_back( std::make_unique<ColSingleton<REAL>>() );
   list.push_back( std::make_unique<CoeffTightening<REAL>>() );
   list.push_back( std::make_unique<Propagation<REAL>>() );
   list.push_back( std::make_unique<SimpleProbing<REAL>>() );
   list.push_back( std::make_unique<ParallelRows<REAL>>() );
   list.push_back( std::make_unique<ParallelCols<REAL>>() );
   list.push_back( std::make_unique<Stuffing<REAL>>() );
   list.push_back( std::make_unique<DualFix<REAL>>() );
   list.push_back( std::make_unique<FixContinuous<REAL>>() );
   list.push_back( std::make_unique<SimplifyIneq<REAL>>() );
   list.push_back( std::make_unique<DoubleToNEq<REAL>>() );
   list.push_back( std::make_unique<ImplInt<REAL>>() );
   list.push_back( std::make_unique<DomCol<REAL>>() );
   list.push_back( std::make_unique<DualInfer<REAL>>() );
   list.push_back( std::make_unique<Probing<REAL>>() );
   list.push_back( std::make_unique<Substitution<REAL>>() );
   list.push_back( std::make_unique<Sparsify<REAL>>() );
   std::stable_sort( list.begin(), list.end(), []( const auto& a, const auto& b ) {
      return a->descriptor().applyOrder < b->descriptor().applyOrder;
   } );
   return list;
}

template std::vector<std::unique_ptr<Presolver<double>>> makeDefaultPresolvers<double>();
template std::vector<std::unique_ptr<Presolver<Rational>>> makeDefaultPresolvers<Rational>();

} // namespace parapre
