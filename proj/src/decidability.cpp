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

#include "udcodes/decidability.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <tuple>

#include "udcodes/errors.hpp"

namespace udcodes {

namespace {

void sort_unique(DanglingSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

bool meets(const DanglingSet& a, const DanglingSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return true;
    }
  }
  return false;
}

// If `shorter` is a proper prefix of `longer`, append the remainder to out.
void add_overhang(const Word& shorter, const Word& longer, DanglingSet& out) {
  if (shorter.length() < longer.length() && is_prefix(shorter, longer)) {
    out.push_back(longer.drop_front(shorter.length()));
  }
}

}  // namespace

std::string_view to_string(Termination t) {
  switch (t) {
    case Termination::kEmptyDanglingSet: return "EmptyDanglingSet";
    case Termination::kRepeatedDanglingSet: return "RepeatedDanglingSet";
    case Termination::kIntersectionWithD0: return "IntersectionWithD0";
    case Termination::kDuplicateCodewords: return "DuplicateCodewords";
  }
  return "?";
}

template <bool kTrace>
bool CodeChecker::run(std::span<const Word> words, SPVerdict* verdict) {
  d0_.assign(words.begin(), words.end());
  std::sort(d0_.begin(), d0_.end());
  const bool duplicates = std::adjacent_find(d0_.begin(), d0_.end()) != d0_.end();
  auto finish = [&](bool code, Termination why) {
    if constexpr (kTrace) {
      verdict->is_code = code;
      verdict->termination = why;
    }
    return code;
  };
  if constexpr (kTrace) {
    verdict->trace.clear();
    auto base = d0_;
    base.erase(std::unique(base.begin(), base.end()), base.end());
    verdict->trace.push_back(std::move(base));
  }
  if (duplicates) return finish(false, Termination::kDuplicateCodewords);

  seen_count_ = 0;
  current_ = d0_;
  while (true) {
    next_.clear();
    for (const auto& d : current_) {
      for (const auto& c : d0_) {
        add_overhang(d, c, next_);
        add_overhang(c, d, next_);
      }
    }
    sort_unique(next_);
    if constexpr (kTrace) verdict->trace.push_back(next_);

    if (next_.empty()) return finish(true, Termination::kEmptyDanglingSet);
    if (meets(next_, d0_)) return finish(false, Termination::kIntersectionWithD0);
    for (std::size_t k = 0; k < seen_count_; ++k) {
      if (seen_[k] == next_) return finish(true, Termination::kRepeatedDanglingSet);
    }
    if (seen_count_ == seen_.size()) seen_.emplace_back();
    seen_[seen_count_++] = next_;
    std::swap(current_, next_);
  }
}

bool CodeChecker::is_code(std::span<const Word> words) {
  return run<false>(words, nullptr);
}

SPVerdict CodeChecker::decide(std::span<const Word> words) {
  SPVerdict verdict;
  run<true>(words, &verdict);
  return verdict;
}

SPVerdict sardinas_patterson(const CodeSequence& code) {
  CodeChecker checker;
  return checker.decide(code.words());
}

bool is_code(const CodeSequence& code) {
  CodeChecker checker;
  return checker.is_code(code.words());
}

// ---------------------------------------------------------------- naive oracle

namespace {

// Two partial factorizations whose concatenations agree up to `overhang`:
// concat(ahead) == concat(behind) + overhang.
struct Frontier {
  std::uint64_t length;  // |concat(ahead)|
  std::uint64_t order;   // insertion counter, keeps the search deterministic
  Word overhang;
  std::vector<std::size_t> ahead;
  std::vector<std::size_t> behind;

  bool operator>(const Frontier& o) const {
    return std::tie(length, order) > std::tie(o.length, o.order);
  }
};

Word concat_all(const CodeSequence& code, const std::vector<std::size_t>& idx) {
  Word out(code.alphabet());
  for (auto i : idx) out = out.concat(code[i]);
  return out;
}

}  // namespace

std::optional<FactorizationWitness> naive_double_factorization(
    const CodeSequence& code, std::uint64_t max_len, std::uint64_t budget) {
  if (max_len == 0) throw PreconditionError("max_len must be at least 1");
  const auto words = code.words();
  const std::size_t m = words.size();

  // Equal entries are the shortest possible witnesses.
  std::optional<FactorizationWitness> best;
  for (std::size_t i = 0; i < m && !best; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (words[i] == words[j] && words[i].length() <= max_len) {
        best = FactorizationWitness{words[i], {i}, {j}};
        break;
      }
    }
  }

  std::priority_queue<Frontier, std::vector<Frontier>, std::greater<>> queue;
  std::uint64_t counter = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || words[j].length() >= words[i].length()) continue;
      if (words[i].length() > max_len || !is_prefix(words[j], words[i])) continue;
      queue.push({words[i].length(), counter++, words[i].drop_front(words[j].length()),
                  {i}, {j}});
    }
  }

  std::set<Word> settled;
  std::uint64_t expanded = 0;
  while (!queue.empty()) {
    Frontier f = queue.top();
    queue.pop();
    if (best && best->word.length() <= f.length) break;
    if (!settled.insert(f.overhang).second) continue;
    if (++expanded > budget) {
      throw SizeLimitError("double-factorization search exceeded " +
                           std::to_string(budget) + " states");
    }
    for (std::size_t k = 0; k < m; ++k) {
      const Word& x = words[k];
      if (x == f.overhang) {
        auto behind = f.behind;
        behind.push_back(k);
        FactorizationWitness w{concat_all(code, f.ahead), f.ahead, std::move(behind)};
        if (!best || w.word.length() < best->word.length()) best = std::move(w);
      } else if (x.length() < f.overhang.length() && is_prefix(x, f.overhang)) {
        auto behind = f.behind;
        behind.push_back(k);
        queue.push({f.length, counter++, f.overhang.drop_front(x.length()), f.ahead,
                    std::move(behind)});
      } else if (f.overhang.length() < x.length() && is_prefix(f.overhang, x)) {
        const auto grown = f.length + x.length() - f.overhang.length();
        if (grown > max_len) continue;
        auto behind = f.behind;
        behind.push_back(k);
        queue.push({grown, counter++, x.drop_front(f.overhang.length()),
                    std::move(behind), f.ahead});
      }
    }
  }
  return best;
}

std::uint64_t default_witness_bound(const CodeSequence& code) {
  std::set<Word> suffixes;
  for (const auto& w : code.words()) {
    for (std::uint32_t k = 1; k < w.length(); ++k) suffixes.insert(w.drop_front(k));
  }
  return code.total_length() * (suffixes.size() + 2);
}

CodeSequence reduce_sequence(const CodeSequence& code, std::size_t mu,
                             std::size_t kappa) {
  if (mu >= code.size() || kappa >= code.size()) {
    throw PreconditionError("reduce_sequence: index out of range");
  }
  if (mu == kappa) throw PreconditionError("reduce_sequence: mu == kappa");
  const Word& longer = code[mu];
  const Word& shorter = code[kappa];
  if (shorter.length() >= longer.length() || !is_prefix(shorter, longer)) {
    throw PreconditionError("reduce_sequence: entry " + std::to_string(kappa) +
                            " is not a proper prefix of entry " + std::to_string(mu));
  }
  std::vector<Word> words(code.words().begin(), code.words().end());
  words[mu] = longer.drop_front(shorter.length());
  return CodeSequence(code.alphabet(), std::move(words));
}

ExactRatio kraft_sum(AlphabetSize n, const LengthDistribution& lengths) {
  ExactRatio sum = 0;
  for (auto a : lengths.lengths()) sum += make_ratio(1, pow_nat(n.value(), a));
  sum.canonicalize();
  return sum;
}

bool is_realizable(AlphabetSize n, const LengthDistribution& lengths) {
  return kraft_sum(n, lengths) <= 1;
}

}  // namespace udcodes
