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

#ifndef UDCODES_ANALYSIS_HPP_
#define UDCODES_ANALYSIS_HPP_

// The ratio rho_{n,L} = |PR_n(L)| / |UD_n(L)|, its bounds checked over
// grids, and convergence tables for the two extremal families.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "udcodes/enumeration.hpp"
#include "udcodes/exact.hpp"
#include "udcodes/words.hpp"

namespace udcodes {

enum class RhoMethod { kClosedForm, kEnumeration };
std::string_view to_string(RhoMethod m);

struct RhoResult {
  AlphabetSize n;
  LengthDistribution lengths;
  ExactRatio rho;
  RhoMethod method;
  ExactNat pr_count;
  ExactNat ud_count;

  friend bool operator==(const RhoResult&, const RhoResult&) = default;
};

// Closed forms cover |L| = 3 permutations of (1,1,c) for n > 2 and of
// (1,2,c) for n = 2. Returns nullopt elsewhere. Throws PreconditionError
// for unrealizable L.
std::optional<RhoResult> rho_closed_form(AlphabetSize n, const LengthDistribution& lengths);

// Throws PreconditionError for unrealizable L, SizeLimitError over budget.
RhoResult rho_by_enumeration(AlphabetSize n, const LengthDistribution& lengths,
                             const CensusOptions& options = {});

// Closed form when one applies, census otherwise.
RhoResult rho(AlphabetSize n, const LengthDistribution& lengths,
              const CensusOptions& options = {});

struct GridPoint {
  AlphabetSize n;
  LengthDistribution lengths;

  std::string label() const;
};

// Sorted triples a <= b <= c <= len_max for 2 <= n <= n_max. With
// realizable_only, points failing the Kraft inequality are dropped. A
// nonzero tuple_cap drops points with n^{a+b+c} > tuple_cap.
std::vector<GridPoint> sorted_triple_grid(std::uint32_t n_min, std::uint32_t n_max,
                                          std::uint32_t len_max, bool realizable_only,
                                          std::uint64_t tuple_cap = 0);
// Every ordered triple with entries in [1, len_max].
std::vector<GridPoint> ordered_triple_grid(std::uint32_t n_min, std::uint32_t n_max,
                                           std::uint32_t len_max,
                                           std::uint64_t tuple_cap = 0);

struct PointOutcome {
  std::string point;
  // Named exact values, in the order they were recorded.
  std::vector<std::pair<std::string, std::string>> values;
  bool pass = true;
  std::string note;
};

struct VerificationReport {
  std::string claim;
  std::string grid;
  std::vector<PointOutcome> points;

  bool pass() const;
  std::size_t failures() const;
};

// rho_{n,L} > alpha_n, exactly, at every point. Where a closed form applies
// and the census fits the budget, both paths are computed and must agree.
VerificationReport verify_theorem4(const std::vector<GridPoint>& grid,
                                   const CensusOptions& options = {});

// thm2_rho_lower_bound(n, |L|) <= rho <= thm1_rho_upper_bound(n, L, a, b)
// for every pair of distinct values a < b of L.
VerificationReport verify_bounds(const std::vector<GridPoint>& grid,
                                 const CensusOptions& options = {});

enum class Family { k11c, k12cBinary };
std::string_view to_string(Family f);
// "11c" or "12c"; throws ParseError.
Family parse_family(std::string_view text);

struct ConvergenceRow {
  std::uint32_t c;
  ExactRatio rho;
  ExactRatio gap;  // rho - limit
  std::string rho_decimal;
  std::string gap_decimal;
};

struct ConvergenceTable {
  Family family;
  AlphabetSize n;
  ExactRatio limit;
  std::vector<ConvergenceRow> rows;
  // |rho_c - limit| strictly decreasing over the emitted rows.
  bool strictly_decreasing = false;
};

// Rows for c = 1..c_max (11c, n > 2) or c = 2..c_max (12c, n = 2), from
// the closed forms; the limit is alpha(n). Throws PreconditionError for an
// invalid family/alphabet pairing or an empty range.
ConvergenceTable convergence_table(Family family, AlphabetSize n, std::uint32_t c_max,
                                   int digits = 12);

}  // namespace udcodes

#endif  // UDCODES_ANALYSIS_HPP_
