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
#ifndef PARAPRE_CORE_ROW_ACTIVITY_HPP_
#define PARAPRE_CORE_ROW_ACTIVITY_HPP_

#include <span>

#include "parapre/core/Num.hpp"
#include "parapre/core/SparseMatrix.hpp"

namespace parapre
{

/// Minimum and maximum activity of a row. Infinite contributions are
/// counted instead of summed so that the finite parts stay exact.
template <typename REAL>
struct RowActivity
{
   REAL min{ 0 };
   REAL max{ 0 };
   int ninfmin = 0;
   int ninfmax = 0;

   Extended<REAL>
   minActivity() const
   {
      return ninfmin == 0 ? Extended<REAL>( min ) : Extended<REAL>::negInf();
   }

   Extended<REAL>
   maxActivity() const
   {
      return ninfmax == 0 ? Extended<REAL>( max ) : Extended<REAL>::posInf();
   }

   friend bool
   operator==( const RowActivity&, const RowActivity& ) = default;
};

enum class BoundSide : std::uint8_t
{
   kLower,
   kUpper,
};

/// bound that determines the contribution of coefficient a to the minimum
/// (forMin) or maximum activity
template <typename REAL>
const Extended<REAL>&
contributingBound( const REAL& coef, bool forMin, const Extended<REAL>& lower,
                   const Extended<REAL>& upper )
{
   return ( coef > 0 ) == forMin ? lower : upper;
}

template <typename REAL>
void
addContribution( REAL& sum, int& ninf, const REAL& coef,
                 const Extended<REAL>& bound, int sign )
{
   if( bound.isInfinite() )
      ninf += sign;
   else if( sign > 0 )
      sum += coef * bound.value();
   else
      sum -= coef * bound.value();
}

/// activity of the entries accepted by isActive
template <typename REAL, typename ActivePred>
RowActivity<REAL>
computeRowActivity( std::span<const MatrixEntry<REAL>> row,
                    const std::vector<Extended<REAL>>& lower,
                    const std::vector<Extended<REAL>>& upper,
                    ActivePred&& isActive )
{
   RowActivity<REAL> act;
   for( const auto& e : row )
   {
      if( !isActive( e.index ) )
         continue;
      addContribution( act.min, act.ninfmin, e.value,
                       contributingBound( e.value, true, lower[e.index],
                                          upper[e.index] ),
                       1 );
      addContribution( act.max, act.ninfmax, e.value,
                       contributingBound( e.value, false, lower[e.index],
                                          upper[e.index] ),
                       1 );
   }
   return act;
}

/// differential update for a change of one bound of a column with
/// coefficient coef in the row
template <typename REAL>
void
updateRowActivity( RowActivity<REAL>& act, const REAL& coef, BoundSide side,
                   const Extended<REAL>& oldBound,
                   const Extended<REAL>& newBound )
{
   if( oldBound == newBound )
      return;
   // lower bound feeds the min activity for positive coefficients
   const bool feedsMin = ( side == BoundSide::kLower ) == ( coef > 0 );
   REAL& sum = feedsMin ? act.min : act.max;
   int& ninf = feedsMin ? act.ninfmin : act.ninfmax;
   addContribution( sum, ninf, coef, oldBound, -1 );
   addContribution( sum, ninf, coef, newBound, 1 );
}

/// removes (sign -1) or adds (sign +1) a whole entry to the activity
template <typename REAL>
void
applyEntryToActivity( RowActivity<REAL>& act, const REAL& coef,
                      const Extended<REAL>& lower, const Extended<REAL>& upper,
                      int sign )
{
   addContribution( act.min, act.ninfmin, coef,
                    contributingBound( coef, true, lower, upper ), sign );
   addContribution( act.max, act.ninfmax, coef,
                    contributingBound( coef, false, lower, upper ), sign );
}

/// minimal activity of the row without the contribution of one entry;
/// -inf when some other entry contributes -inf
template <typename REAL>
Extended<REAL>
residualMinActivity( const RowActivity<REAL>& act, const REAL& coef,
                     const Extended<REAL>& lower, const Extended<REAL>& upper )
{
   const Extended<REAL>& b = contributingBound( coef, true, lower, upper );
   if( b.isInfinite() )
      return act.ninfmin == 1 ? Extended<REAL>( act.min )
                              : Extended<REAL>::negInf();
   if( act.ninfmin > 0 )
      return Extended<REAL>::negInf();
   return Extended<REAL>( act.min - coef * b.value() );
}

template <typename REAL>
Extended<REAL>
residualMaxActivity( const RowActivity<REAL>& act, const REAL& coef,
                     const Extended<REAL>& lower, const Extended<REAL>& upper )
{
   const Extended<REAL>& b = contributingBound( coef, false, lower, upper );
   if( b.isInfinite() )
      return act.ninfmax == 1 ? Extended<REAL>( act.max )
                              : Extended<REAL>::posInf();
   if( act.ninfmax > 0 )
      return Extended<REAL>::posInf();
   return Extended<REAL>( act.max - coef * b.value() );
}

} // namespace parapre

#endif
