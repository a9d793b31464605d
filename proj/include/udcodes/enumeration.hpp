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

#ifndef UDCODES_ENUMERATION_HPP_
#define UDCODES_ENUMERATION_HPP_

// Exhaustive counting: every tuple in X^{a_1} x ... x X^{a_m} is classified
// by the decider and the prefix test. These counts are the oracles the
// closed forms are checked against.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "udcodes/exact.hpp"
#include "udcodes/words.hpp"

namespace udcodes {

inline constexpr std::uint64_t kDefaultTupleBudget = std::uint64_t{1} << 22;

struct CensusOptions {
  // Hard ceiling on n^{sum a_i}; exceeding it raises SizeLimitError.
  std::uint64_t budget = kDefaultTupleBudget;
  // Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
  // Sweep only first words in first-occurrence letter order and weight each
  // by the size of its orbit under alphabet permutations. Both properties
  // being counted are invariant under renaming letters, so the counts are
  // unchanged; the work shrinks by up to n!.
  bool letter_symmetry = false;
};

struct CensusResult {
  AlphabetSize n;
  LengthDistribution lengths;
  ExactNat total_tuples;
  ExactNat ud_count;
  ExactNat pr_count;
  std::chrono::duration<double> elapsed{};
};

// Throws SizeLimitError when n^{sum a_i} exceeds options.budget.
CensusResult census(AlphabetSize n, const LengthDistribution& lengths,
                    const CensusOptions& options = {});

// Binary words w of length c for which (first, second, w) is not a code,
// in lexicographic order.
std::vector<Word> non_code_completions(const Word& first, const Word& second,
                                       std::uint32_t c,
                                       std::uint64_t budget = kDefaultTupleBudget);

// |K_{x,yz}(c)|: the number of w in {0,1}^c with (x, yz, w) not a code.
// Letters must be 0 or 1.
ExactNat census_K(std::uint32_t c, std::uint32_t x, std::uint32_t y, std::uint32_t z,
                  std::uint64_t budget = kDefaultTupleBudget);

// Words built from the blocks 1 and 00, i.e. every maximal run of zeros has
// even length. Throws PreconditionError for non-binary words.
bool is_in_J100(const Word& w);
// Words without the factor 00.
bool is_in_J101(const Word& w);

struct NudReport {
  std::uint32_t c = 0;
  // |K_{x,yz}(c)| indexed by 4x + 2y + z.
  std::array<ExactNat, 8> k_counts;
  // 2^{c+3} - |UD_2((1,2,c))| from a full census.
  ExactNat nud;
  // 2^{c+1} + 2|K_{1,00}| + 4|K_{1,01}|.
  ExactNat decomposition;
  bool union_matches = false;      // sum of the eight slices equals nud
  bool identity_holds = false;     // nud == decomposition
  bool symmetry_holds = false;     // the three equality classes

  bool holds() const { return union_matches && identity_holds && symmetry_holds; }
  const ExactNat& k(std::uint32_t x, std::uint32_t y, std::uint32_t z) const {
    return k_counts[4 * x + 2 * y + z];
  }
};

NudReport nud_decomposition_report(std::uint32_t c,
                                   const CensusOptions& options = {});

// Number of code sequences over n whose total codeword length lies in
// [1, max_total].
ExactNat count_code_sequences(AlphabetSize n, std::uint32_t max_total);

// Visits every such sequence: by total length, then by length composition
// in lexicographic order, then by words in lexicographic order. Throws
// SizeLimitError when the count exceeds `budget`.
void for_each_code_sequence(AlphabetSize n, std::uint32_t max_total,
                            const std::function<void(const CodeSequence&)>& visit,
                            std::uint64_t budget = kDefaultTupleBudget);

}  // namespace udcodes

#endif  // UDCODES_ENUMERATION_HPP_
