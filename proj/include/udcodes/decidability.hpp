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

#ifndef UDCODES_DECIDABILITY_HPP_
#define UDCODES_DECIDABILITY_HPP_

// Unique decodability of code sequences.
//
// The decider is the dangling-set form of the Sardinas-Patterson test:
//
//   D_0 = { codewords }
//   D_i = { nonempty u : D_{i-1} u meets D_0, or D_0 u meets D_{i-1} }
//
// and the sequence is a code iff no D_i (i >= 1) meets D_0. Each D_i with
// i >= 1 consists of proper suffixes of codewords, so the sets are
// eventually periodic and the iteration stops on the first empty or
// repeated set. Sequences with two equal entries are rejected up front:
// the sets above cannot see a duplicated index.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "udcodes/exact.hpp"
#include "udcodes/words.hpp"

namespace udcodes {

enum class Termination {
  kEmptyDanglingSet,
  kRepeatedDanglingSet,
  kIntersectionWithD0,
  kDuplicateCodewords,
};

std::string_view to_string(Termination t);

// Dangling sets are kept sorted in shortlex order.
using DanglingSet = std::vector<Word>;

struct SPVerdict {
  bool is_code = false;
  // D_0, D_1, ..., ending with the set that triggered termination. Holds
  // only D_0 when duplicates were found.
  std::vector<DanglingSet> trace;
  Termination termination = Termination::kEmptyDanglingSet;
};

// Reusable decider. Holds scratch buffers so that exhaustive sweeps avoid
// per-call allocation; one instance per thread.
class CodeChecker {
 public:
  bool is_code(std::span<const Word> words);
  SPVerdict decide(std::span<const Word> words);

 private:
  template <bool kTrace>
  bool run(std::span<const Word> words, SPVerdict* verdict);

  DanglingSet d0_;
  DanglingSet current_;
  DanglingSet next_;
  std::vector<DanglingSet> seen_;
  std::size_t seen_count_ = 0;
};

SPVerdict sardinas_patterson(const CodeSequence& code);
bool is_code(const CodeSequence& code);

// A word with two distinct factorizations. Indices are 0-based positions in
// the code sequence.
struct FactorizationWitness {
  Word word;
  std::vector<std::size_t> factorization_a;
  std::vector<std::size_t> factorization_b;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

// Shortest-first search over pairs of partial factorizations, returning a
// doubly factorizable word of length <= max_len if one exists. Throws
// SizeLimitError after `budget` expanded states, PreconditionError when
// max_len == 0.
std::optional<FactorizationWitness> naive_double_factorization(
    const CodeSequence& code, std::uint64_t max_len,
    std::uint64_t budget = kDefaultSearchBudget);

// Search bound used for cross-checks: total length times (distinct proper
// suffixes + 2).
std::uint64_t default_witness_bound(const CodeSequence& code);

// Replaces entry `mu` by the suffix v where words[mu] = words[kappa] v.
// Requires mu != kappa and words[kappa] a proper prefix of words[mu]
// (0-based indices); throws PreconditionError otherwise.
CodeSequence reduce_sequence(const CodeSequence& code, std::size_t mu,
                             std::size_t kappa);

// Sum of n^{-a_i}.
ExactRatio kraft_sum(AlphabetSize n, const LengthDistribution& lengths);
// Kraft inequality; equivalent to UD_n(L) and PR_n(L) being nonempty.
bool is_realizable(AlphabetSize n, const LengthDistribution& lengths);

}  // namespace udcodes

#endif  // UDCODES_DECIDABILITY_HPP_
