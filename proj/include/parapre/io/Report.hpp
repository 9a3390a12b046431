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
#ifndef PARAPRE_IO_REPORT_HPP_
#define PARAPRE_IO_REPORT_HPP_

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "parapre/core/Presolver.hpp"

namespace parapre
{

/// row of the conflict ledger: transactions of p discarded because of q
struct LedgerRow
{
   std::string p;
   std::string q;
   /// sum over instances of the transactions found by p
   long transactions = 0;
   /// sum over instances of p's transactions discarded because of q
   long conflicts = 0;
   /// the subset of conflicts classified as redundant
   long redundant = 0;
   /// mean of conflicts/transactions over instances where p found any
   double averageRate = 0;
   /// redundant / conflicts, 0 without conflicts
   double redundantShare = 0;
};

/// Aggregates verbosity 4 presolve logs, one log per instance. A presolver
/// has a call in a round if it found a transaction; a common call of p and q
/// is a round where both did, and it is conflicting if a transaction of one
/// was discarded because of the other.
class ConflictReport
{
 public:
   ConflictReport();

   /// feeds the log of one instance
   void
   addLog( std::istream& log );

   /// one instance per file; directories contribute every regular file in
   /// name order
   void
   addPath( const std::string& path );

   int
   instances() const
   {
      return ninstances;
   }

   /// presolve rounds of the tier over all instances
   long
   rounds( Tier tier ) const;

   long
   calls( const std::string& presolver ) const;

   /// unordered pair counts, p == q allowed
   long
   commonCalls( const std::string& p, const std::string& q ) const;

   long
   conflictingCalls( const std::string& p, const std::string& q ) const;

   /// ordered pair figures over all instances
   long
   totalTransactions( const std::string& p ) const;

   long
   conflicts( const std::string& p, const std::string& q ) const;

   long
   redundant( const std::string& p, const std::string& q ) const;

   /// pairs with at least one conflict, by apply order of p then q
   std::vector<LedgerRow>
   ledger() const;

   /// presolvers of a tier in apply order
   std::vector<std::string>
   tierPresolvers( Tier tier ) const;

   /// two letter code used as matrix column header
   std::string
   code( const std::string& presolver ) const;

   /// one calls matrix per tier followed by the ledger
   void
   write( std::ostream& out ) const;

 private:
   struct Instance
   {
      std::map<std::string, long> transactions;
      std::map<std::pair<std::string, std::string>, long> conflicts;
      std::map<std::pair<std::string, std::string>, long> redundant;
   };

   std::pair<std::string, std::string>
   unordered( const std::string& p, const std::string& q ) const;

   int
   orderOf( const std::string& presolver ) const;

   std::vector<std::string> order;
   std::map<std::string, Tier> tiers;
   std::map<std::string, std::string> codes;
   int ninstances = 0;
   std::map<Tier, long> tierRounds;
   std::map<std::string, long> callCount;
   std::map<std::pair<std::string, std::string>, long> common;
   std::map<std::pair<std::string, std::string>, long> conflicting;
   std::vector<Instance> perInstance;
};

} // namespace parapre

#endif
