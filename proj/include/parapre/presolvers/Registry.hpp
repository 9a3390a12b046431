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
#ifndef PARAPRE_PRESOLVERS_REGISTRY_HPP_
#define PARAPRE_PRESOLVERS_REGISTRY_HPP_

#include <memory>
#include <vector>

#include "parapre/core/Presolver.hpp"

namespace parapre
{

/// all presolvers except the trivial one, sorted by apply order
template <typename REAL>
std::vector<std::unique_ptr<Presolver<REAL>>>
makeDefaultPresolvers();

extern template std::vector<std::unique_ptr<Presolver<double>>>
makeDefaultPresolvers<double>();
extern template std::vector<std::unique_ptr<Presolver<Rational>>>
makeDefaultPresolvers<Rational>();

} // namespace parapre

#endif
