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

#include "udcodes/enumeration.hpp"

#include <algorithm>
#include <thread>

#include "udcodes/decidability.hpp"
#include "udcodes/errors.hpp"

namespace udcodes {

namespace {

struct Tally {
  std::uint64_t tuples = 0;
  std::uint64_t ud = 0;
  std::uint64_t pr = 0;
};

// A first word to sweep and the number of tuples-per-suffix it stands for.
struct Seed {
  std::uint64_t value;
  std::uint64_t weight;
};

// First-occurrence-ordered words of length len (digit i never exceeds one
// plus the largest earlier digit), weighted by n!/(n-k)! for k distinct
// letters.
void canonical_seeds(std::uint32_t n, std::uint32_t len, std::vector<Seed>& out) {
  std::vector<std::uint32_t> digits(len, 0);
  auto rec = [&](auto&& self, std::uint32_t pos, std::uint32_t used) -> void {
    if (pos == len) {
      std::uint64_t value = 0;
      for (auto d : digits) value = value * n + d;
      std::uint64_t weight = 1;
      for (std::uint32_t i = 0; i < used; ++i) weight *= n - i;
      out.push_back({value, weight});
      return;
    }
    const std::uint32_t limit = std::min(used + 1, n);
    for (std::uint32_t d = 0; d < limit; ++d) {
      digits[pos] = d;
      self(self, pos + 1, std::max(used, d + 1));
    }
  };
  rec(rec, 0, 0);
}

bool has_duplicates(std::span<const Word> words) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      if (words[i] == words[j]) return true;
    }
  }
  return false;
}

Tally sweep(AlphabetSize n, const LengthDistribution& lengths,
            std::span<const Seed> seeds) {
  const std::size_t m = lengths.size();
  std::vector<std::uint64_t> limits(m);
  for (std::size_t i = 0; i < m; ++i) limits[i] = small_pow(n.value(), lengths[i]);

  CodeChecker checker;
  std::vector<Word> words;
  for (std::size_t i = 0; i < m; ++i) words.push_back(Word::from_packed(n, lengths[i], 0));
  std::vector<std::uint64_t> odometer(m, 0);

  Tally tally;
  for (const auto& seed : seeds) {
    words[0] = Word::from_packed(n, lengths[0], seed.value);
    std::fill(odometer.begin() + 1, odometer.end(), 0);
    for (std::size_t i = 1; i < m; ++i) words[i] = Word::from_packed(n, lengths[i], 0);
    while (true) {
      tally.tuples += seed.weight;
      if (!has_duplicates(words)) {
        if (is_prefix_code(std::span<const Word>(words))) tally.pr += seed.weight;
        if (checker.is_code(words)) tally.ud += seed.weight;
      }
      // Advance the last word fastest: row-major lexicographic order.
      bool advanced = false;
      for (std::size_t pos = m; pos > 1 && !advanced;) {
        --pos;
        if (++odometer[pos] < limits[pos]) {
          advanced = true;
        } else {
          odometer[pos] = 0;
        }
        words[pos] = Word::from_packed(n, lengths[pos], odometer[pos]);
      }
      if (!advanced) break;
    }
  }
  return tally;
}

}  // namespace

CensusResult census(AlphabetSize n, const LengthDistribution& lengths,
                    const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const auto total = pow_nat(n.value(), lengths.total());
  if (total > to_nat(options.budget)) {
    throw SizeLimitError("census of n=" + std::to_string(n.value()) + ", L=(" +
                         lengths.to_string() + ") needs " + total.get_str() +
                         " tuples, over the budget of " +
                         std::to_string(options.budget));
  }

  std::vector<Seed> seeds;
  if (options.letter_symmetry) {
    canonical_seeds(n.value(), lengths[0], seeds);
  } else {
    const auto count = small_pow(n.value(), lengths[0]);
    seeds.reserve(count);
    for (std::uint64_t v = 0; v < count; ++v) seeds.push_back({v, 1});
  }

  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, seeds.size()));
  std::vector<Tally> partial(threads);
  if (threads <= 1) {
    partial.assign(1, sweep(n, lengths, seeds));
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (seeds.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t lo = std::min(seeds.size(), t * chunk);
      const std::size_t hi = std::min(seeds.size(), lo + chunk);
      workers.emplace_back([&, t, lo, hi] {
        partial[t] = sweep(n, lengths, std::span<const Seed>(seeds).subspan(lo, hi - lo));
      });
    }
  }

  CensusResult result{n, lengths, 0, 0, 0, {}};
  for (const auto& p : partial) {
    result.total_tuples += to_nat(p.tuples);
    result.ud_count += to_nat(p.ud);
    result.pr_count += to_nat(p.pr);
  }
  if (result.total_tuples != total) {
    throw std::logic_error("census visited " + result.total_tuples.get_str() +
                           " tuples, expected " + total.get_str());
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

std::vector<Word> non_code_completions(const Word& first, const Word& second,
                                       std::uint32_t c, std::uint64_t budget) {
  if (first.alphabet() != second.alphabet()) {
    throw PreconditionError("completion words over different alphabets");
  }
  CodeChecker checker;
  std::vector<Word> out;
  std::vector<Word> tuple{first, second, first};
  for (Word w : enumerate_words(first.alphabet(), c, budget)) {
    tuple[2] = w;
    if (!checker.is_code(tuple)) out.push_back(std::move(w));
  }
  return out;
}

ExactNat census_K(std::uint32_t c, std::uint32_t x, std::uint32_t y, std::uint32_t z,
                  std::uint64_t budget) {
  if (x > 1 || y > 1 || z > 1) throw PreconditionError("census_K takes binary letters");
  if (c == 0) throw PreconditionError("c must be positive");
  const AlphabetSize two(2);
  const std::uint32_t first[] = {x};
  const std::uint32_t second[] = {y, z};
  const auto words =
      non_code_completions(Word::from_digits(two, first), Word::from_digits(two, second),
                           c, budget);
  return to_nat(words.size());
}

namespace {

void require_binary(const Word& w) {
  if (w.alphabet().value() != 2) throw PreconditionError("expected a binary word");
}

}  // namespace

bool is_in_J100(const Word& w) {
  require_binary(w);
  std::uint32_t zeros = 0;
  for (auto d : w.digits()) {
    if (d == 0) {
      ++zeros;
    } else {
      if (zeros % 2 != 0) return false;
      zeros = 0;
    }
  }
  return zeros % 2 == 0;
}

bool is_in_J101(const Word& w) {
  require_binary(w);
  std::uint32_t prev = 1;
  for (auto d : w.digits()) {
    if (d == 0 && prev == 0) return false;
    prev = d;
  }
  return true;
}

NudReport nud_decomposition_report(std::uint32_t c, const CensusOptions& options) {
  if (c == 0) throw PreconditionError("c must be positive");
  NudReport report;
  report.c = c;
  ExactNat slice_sum = 0;
  for (std::uint32_t x = 0; x < 2; ++x) {
    for (std::uint32_t y = 0; y < 2; ++y) {
      for (std::uint32_t z = 0; z < 2; ++z) {
        report.k_counts[4 * x + 2 * y + z] = census_K(c, x, y, z, options.budget);
        slice_sum += report.k_counts[4 * x + 2 * y + z];
      }
    }
  }
  const auto full = census(AlphabetSize(2), LengthDistribution({1, 2, c}), options);
  report.nud = pow_nat(2, std::uint64_t{c} + 3) - full.ud_count;
  report.decomposition =
      pow_nat(2, std::uint64_t{c} + 1) + 2 * report.k(1, 0, 0) + 4 * report.k(1, 0, 1);
  report.union_matches = slice_sum == report.nud;
  report.identity_holds = report.nud == report.decomposition;
  const auto two_c = pow_nat(2, c);
  report.symmetry_holds =
      report.k(0, 0, 0) == two_c && report.k(1, 1, 1) == two_c &&
      report.k(0, 1, 1) == report.k(1, 0, 0) && report.k(0, 0, 1) == report.k(0, 1, 0) &&
      report.k(0, 1, 0) == report.k(1, 0, 1) && report.k(1, 0, 1) == report.k(1, 1, 0);
  return report;
}

ExactNat count_code_sequences(AlphabetSize n, std::uint32_t max_total) {
  // Compositions of t into parts, each part p contributing n^p words:
  // total(t) = sum_p n^p total(t - p), total(0) = 1.
  std::vector<ExactNat> by_total(max_total + 1, 0);
  by_total[0] = 1;
  for (std::uint32_t t = 1; t <= max_total; ++t) {
    for (std::uint32_t p = 1; p <= t; ++p) by_total[t] += pow_nat(n.value(), p) * by_total[t - p];
  }
  ExactNat sum = 0;
  for (std::uint32_t t = 1; t <= max_total; ++t) sum += by_total[t];
  return sum;
}

namespace {

void compositions(std::uint32_t remaining, std::vector<std::uint32_t>& parts,
                  const std::function<void(const std::vector<std::uint32_t>&)>& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (std::uint32_t p = 1; p <= remaining; ++p) {
    parts.push_back(p);
    compositions(remaining - p, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

void for_each_code_sequence(AlphabetSize n, std::uint32_t max_total,
                            const std::function<void(const CodeSequence&)>& visit,
                            std::uint64_t budget) {
  const auto count = count_code_sequences(n, max_total);
  if (count > to_nat(budget)) {
    throw SizeLimitError("enumerating " + count.get_str() +
                         " code sequences exceeds the budget of " + std::to_string(budget));
  }
  std::vector<std::uint32_t> parts;
  for (std::uint32_t t = 1; t <= max_total; ++t) {
    compositions(t, parts, [&](const std::vector<std::uint32_t>& lengths) {
      const std::size_t m = lengths.size();
      std::vector<std::uint64_t> odometer(m, 0);
      std::vector<Word> words;
      words.reserve(m);
      while (true) {
        words.clear();
        for (std::size_t i = 0; i < m; ++i) {
          words.push_back(Word::from_packed(n, lengths[i], odometer[i]));
        }
        visit(CodeSequence(n, words));
        std::size_t pos = m;
        while (pos > 0) {
          --pos;
          if (++odometer[pos] < small_pow(n.value(), lengths[pos])) break;
          odometer[pos] = 0;
          if (pos == 0) return;
        }
      }
    });
  }
}

}  // namespace udcodes
