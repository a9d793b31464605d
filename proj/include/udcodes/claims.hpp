// Copyright 2026 The udcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UDCODES_CLAIMS_HPP_
#define UDCODES_CLAIMS_HPP_

// Named verification runs: each compares closed forms, set
// characterizations or decider properties against exhaustive enumeration
// over a finite grid and returns a VerificationReport.

#include <cstdint>
#include <string_view>
#include <vector>

#include "udcodes/analysis.hpp"
#include "udcodes/enumeration.hpp"

namespace udcodes {

struct ClaimGrid {
  std::uint32_t n_max = 3;
  std::uint32_t len_max = 4;   // largest codeword length in triple grids
  std::uint32_t c_max = 12;    // largest c in the (1,1,c) / (1,2,c) families
  std::uint32_t total_max = 8; // largest total length in sequence sweeps
  std::uint64_t tuple_cap = 0; // drop grid points with more tuples (0: keep all)
};

// Census pr count against both forms of the prefix-code formula at every
// point; census ud count against the (1,1,c) and binary (1,2,c) formulas
// where L is a permutation of those; and |UD_n(L)| <= n^c |UD_n((a,b))|
// for every split of L into a pair and a third entry.
VerificationReport verify_count_formulas(const std::vector<GridPoint>& grid,
                                         const CensusOptions& options = {});

// (x, y, w) in X x X x X^c is a code iff x != y and w is not in {x,y}^c,
// tuple by tuple, and the census count equals n(n-1)(n^c - 2^c).
VerificationReport verify_prop2(std::uint32_t n_max, std::uint32_t c_max,
                                const CensusOptions& options = {});

// For c = 1..c_max, the set of w making (1,00,w) a non-code equals
// J_{1,00}(c) u {0^c}, with the Fibonacci cardinalities.
VerificationReport verify_prop3(std::uint32_t c_max);
// Same for (1,01,w) and J_{1,01}(c).
VerificationReport verify_prop4(std::uint32_t c_max);

// NUD decomposition, slice symmetries, and the (1,2,c) census against the
// closed form, for c = 1..c_max.
VerificationReport verify_nud(std::uint32_t c_max, const CensusOptions& options = {});

// Counters from one sweep over every code sequence of bounded total length.
struct DeciderCrossCheck {
  std::uint64_t sequences = 0;
  std::uint64_t codes = 0;
  std::uint64_t oracle_disagreements = 0;
  std::uint64_t reversal_disagreements = 0;
  std::uint64_t lemma1_checks = 0;
  std::uint64_t lemma1_violations = 0;
  std::uint64_t prefix_not_code = 0;
  std::vector<std::string> examples;  // first few offending sequences
};

DeciderCrossCheck cross_check_decider(AlphabetSize n, std::uint32_t total_max,
                                      std::uint64_t budget = kDefaultTupleBudget);

// Pairs (w, v) with |w|, |v| <= len_max: SP verdict equals (wv != vw), and
// per (a,b) the number of codes equals n^{a+b} - n^{gcd(a,b)}.
VerificationReport verify_pairs(AlphabetSize n, std::uint32_t len_max);

// For every (n, L) with |L| = 3, entries <= len_max: the Kraft inequality
// holds iff the census finds a code (and iff it finds a prefix code).
VerificationReport verify_mcmillan(std::uint32_t n_max, std::uint32_t len_max,
                                   const CensusOptions& options = {});

// Over a sorted grid, the smallest rho for each n lies in the (1,1,c)
// family for n > 2 and the (1,2,c) family for n = 2, and exceeds alpha_n.
VerificationReport verify_grid_minimum(const std::vector<GridPoint>& grid,
                                       const CensusOptions& options = {});

// Convergence tables for 11c (n = 3..n_max) and 12c up to c_max: strictly
// shrinking gap with rho above the limit at every row.
VerificationReport verify_limits(std::uint32_t n_max, std::uint32_t c_max);

std::vector<std::string_view> claim_names();

// Dispatches on one of claim_names(); throws ParseError for unknown names.
VerificationReport verify_claim(std::string_view claim, const ClaimGrid& grid,
                                const CensusOptions& options = {});

}  // namespace udcodes

#endif  // UDCODES_CLAIMS_HPP_
