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
#ifndef PARAPRE_PRESOLVERS_DOUBLE_TO_N_EQ_HPP_
#define PARAPRE_PRESOLVERS_DOUBLE_TO_N_EQ_HPP_

#include "parapre/core/Presolver.hpp"

namespace parapre
{

/// substitutes one column of an equation with two columns
template <typename REAL>
class DoubleToNEq : public Presolver<REAL>
{
 public:
   DoubleToNEq();

   void
   run( const PresolveView<REAL>& view,
        std::vector<Transaction<REAL>>& out ) const override;
};

extern template class DoubleToNEq<double>;
extern template class DoubleToNEq<Rational>;

} // namespace parapre

#endif
