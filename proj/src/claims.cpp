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

#include "udcodes/claims.hpp"

#include <algorithm>
#include <map>

#include "udcodes/closed_forms.hpp"
#include "udcodes/decidability.hpp"
#include "udcodes/errors.hpp"

namespace udcodes {

namespace {

std::string eq_note(std::string_view what, const ExactNat& got, const ExactNat& want) {
  return std::string(what) + ": enumeration " + got.get_str() + " vs formula " + want.get_str();
}

void record(PointOutcome& out, std::string name, const ExactNat& v) {
  out.values.emplace_back(std::move(name), v.get_str());
}

void fail(PointOutcome& out, std::string note) {
  out.pass = false;
  if (!out.note.empty()) out.note += "; ";
  out.note += note;
}

void expect_equal(PointOutcome& out, std::string_view what, const ExactNat& got,
                  const ExactNat& want) {
  if (got != want) fail(out, eq_note(what, got, want));
}

Word zeros(std::uint32_t c) {
  return Word::from_packed(AlphabetSize(2), c, 0);
}

Word word_of(std::initializer_list<std::uint32_t> digits) {
  std::vector<std::uint32_t> d(digits);
  return Word::from_digits(AlphabetSize(2), d);
}

}  // namespace

VerificationReport verify_count_formulas(const std::vector<GridPoint>& grid,
                                         const CensusOptions& options) {
  VerificationReport report{"prop1", std::to_string(grid.size()) + " points", {}};
  for (const auto& point : grid) {
    PointOutcome out{point.label(), {}, true, {}};
    const auto& L = point.lengths;
    const auto counted = census(point.n, L, options);
    record(out, "pr", counted.pr_count);
    record(out, "ud", counted.ud_count);

    expect_equal(out, "pr (expanded)", counted.pr_count, pr_count_triple(point.n, L));
    expect_equal(out, "pr (product)", counted.pr_count, pr_count_triple_product(point.n, L));

    const auto s = L.sorted();
    if (s[0] == 1 && s[1] == 1) {
      expect_equal(out, "ud (1,1,c)", counted.ud_count, ud_count_11c(point.n, s[2]));
    }
    if (point.n.value() == 2 && L.multiplicity(1) > 0 && L.multiplicity(2) > 0) {
      std::vector<std::uint32_t> rest(s.lengths().begin(), s.lengths().end());
      rest.erase(std::find(rest.begin(), rest.end(), 1u));
      rest.erase(std::find(rest.begin(), rest.end(), 2u));
      expect_equal(out, "ud (1,2,c)", counted.ud_count, ud_count_12c_binary(rest.front()));
    }
    for (std::size_t third = 0; third < 3; ++third) {
      const auto a = L[(third + 1) % 3];
      const auto b = L[(third + 2) % 3];
      const ExactNat cap = pow_nat(point.n.value(), L[third]) * ud_count_pair(point.n, a, b);
      if (counted.ud_count > cap) fail(out, "ud exceeds n^c |UD((a,b))|");
    }
    report.points.push_back(std::move(out));
  }
  return report;
}

VerificationReport verify_prop2(std::uint32_t n_max, std::uint32_t c_max,
                                const CensusOptions& options) {
  VerificationReport report{"prop2", "n<=" + std::to_string(n_max) +
                                         ", c<=" + std::to_string(c_max), {}};
  CodeChecker checker;
  for (std::uint32_t nv = 2; nv <= n_max; ++nv) {
    const AlphabetSize n(nv);
    for (std::uint32_t c = 1; c <= c_max; ++c) {
      PointOutcome out{GridPoint{n, LengthDistribution({1, 1, c})}.label(), {}, true, {}};
      if (pow_nat(nv, c + 2) > to_nat(options.budget)) {
        throw SizeLimitError("prop2 sweep at " + out.point + " exceeds the budget");
      }
      std::uint64_t codes = 0;
      std::uint64_t mismatches = 0;
      std::vector<Word> tuple{Word(n), Word(n), Word(n)};
      for (std::uint32_t x = 0; x < nv; ++x) {
        for (std::uint32_t y = 0; y < nv; ++y) {
          tuple[0] = Word::from_packed(n, 1, x);
          tuple[1] = Word::from_packed(n, 1, y);
          for (Word w : enumerate_words(n, c, options.budget)) {
            bool inside = true;  // w in {x,y}^c
            for (auto d : w.digits()) inside = inside && (d == x || d == y);
            const bool predicted = x != y && !inside;
            tuple[2] = std::move(w);
            const bool decided = checker.is_code(tuple);
            codes += decided ? 1 : 0;
            if (decided != predicted) {
              if (mismatches++ == 0) {
                fail(out, "characterization fails at (" + tuple[0].to_string() + "," +
                              tuple[1].to_string() + "," + tuple[2].to_string() + ")");
              }
            }
          }
        }
      }
      record(out, "ud", to_nat(codes));
      expect_equal(out, "ud", to_nat(codes), ud_count_11c(n, c));
      report.points.push_back(std::move(out));
    }
  }
  return report;
}

namespace {

VerificationReport verify_k_tilde(std::string claim, const Word& first, const Word& second,
                                  std::uint32_t c_max, bool (*member)(const Word&),
                                  bool add_zeros,
                                  ExactNat (*expected_count)(std::uint32_t),
                                  ExactNat (*expected_j)(std::uint32_t)) {
  VerificationReport report{std::move(claim), "c<=" + std::to_string(c_max), {}};
  for (std::uint32_t c = 1; c <= c_max; ++c) {
    PointOutcome out{"c=" + std::to_string(c), {}, true, {}};
    const auto decided = non_code_completions(first, second, c);
    std::vector<Word> predicted;
    std::uint64_t j_size = 0;
    for (Word w : enumerate_words(AlphabetSize(2), c)) {
      const bool in_j = member(w);
      j_size += in_j ? 1 : 0;
      if (in_j || (add_zeros && w == zeros(c))) predicted.push_back(std::move(w));
    }
    record(out, "non_codes", to_nat(decided.size()));
    record(out, "J", to_nat(j_size));
    if (decided != predicted) {
      std::string diff;
      std::vector<Word> sym;
      std::set_symmetric_difference(decided.begin(), decided.end(), predicted.begin(),
                                    predicted.end(), std::back_inserter(sym));
      for (std::size_t i = 0; i < sym.size() && i < 4; ++i) diff += " " + sym[i].to_string();
      fail(out, "sets differ at" + diff);
    }
    expect_equal(out, "|non-codes|", to_nat(decided.size()), expected_count(c));
    expect_equal(out, "|J|", to_nat(j_size), expected_j(c));
    report.points.push_back(std::move(out));
  }
  return report;
}

}  // namespace

VerificationReport verify_prop3(std::uint32_t c_max) {
  return verify_k_tilde(
      "prop3", word_of({1}), word_of({0, 0}), c_max, &is_in_J100, true,
      [](std::uint32_t c) { return j_count_100(c).second; },
      [](std::uint32_t c) { return j_count_100(c).first; });
}

VerificationReport verify_prop4(std::uint32_t c_max) {
  return verify_k_tilde("prop4", word_of({1}), word_of({0, 1}), c_max, &is_in_J101, false,
                        &j_count_101, &j_count_101);
}

VerificationReport verify_nud(std::uint32_t c_max, const CensusOptions& options) {
  VerificationReport report{"nud", "c<=" + std::to_string(c_max), {}};
  for (std::uint32_t c = 1; c <= c_max; ++c) {
    PointOutcome out{"c=" + std::to_string(c), {}, true, {}};
    const auto r = nud_decomposition_report(c, options);
    record(out, "nud", r.nud);
    record(out, "decomposition", r.decomposition);
    for (std::uint32_t i = 0; i < 8; ++i) {
      record(out,
             "K_" + std::to_string(i >> 2) + "," + std::to_string((i >> 1) & 1) +
                 std::to_string(i & 1),
             r.k_counts[i]);
    }
    if (!r.union_matches) fail(out, "slices do not add up to NUD");
    if (!r.identity_holds) fail(out, "NUD decomposition identity fails");
    if (!r.symmetry_holds) fail(out, "slice symmetry classes fail");
    expect_equal(out, "NUD", r.nud, pow_nat(2, c + 3) - ud_count_12c_binary(c));
    expect_equal(out, "K_{1,00}", r.k(1, 0, 0), j_count_100(c).second);
    expect_equal(out, "K_{1,01}", r.k(1, 0, 1), j_count_101(c));
    expect_equal(out, "2F(c+1)+4F(c+2)", 2 * fib(c + 1) + 4 * fib(c + 2), 2 * fib(c + 4));
    report.points.push_back(std::move(out));
  }
  return report;
}

DeciderCrossCheck cross_check_decider(AlphabetSize n, std::uint32_t total_max,
                                      std::uint64_t budget) {
  DeciderCrossCheck result;
  CodeChecker checker;
  auto note = [&](const std::string& what, const CodeSequence& code) {
    if (result.examples.size() < 5) result.examples.push_back(what + ": " + code.to_string());
  };
  for_each_code_sequence(
      n, total_max,
      [&](const CodeSequence& code) {
        ++result.sequences;
        const bool sp = checker.is_code(code.words());
        result.codes += sp ? 1 : 0;

        const auto witness = naive_double_factorization(code, default_witness_bound(code));
        bool agrees = sp == !witness.has_value();
        if (witness) {
          Word a(n);
          Word b(n);
          for (auto i : witness->factorization_a) a = a.concat(code[i]);
          for (auto i : witness->factorization_b) b = b.concat(code[i]);
          agrees = agrees && a == witness->word && b == witness->word &&
                   witness->factorization_a != witness->factorization_b;
        }
        if (!agrees) {
          ++result.oracle_disagreements;
          note("oracle", code);
        }

        if (checker.is_code(reverse_code(code).words()) != sp) {
          ++result.reversal_disagreements;
          note("reversal", code);
        }
        if (is_prefix_code(code) && !sp) {
          ++result.prefix_not_code;
          note("prefix", code);
        }
        for (std::size_t mu = 0; mu < code.size(); ++mu) {
          for (std::size_t kappa = 0; kappa < code.size(); ++kappa) {
            if (mu == kappa || code[kappa].length() >= code[mu].length() ||
                !is_prefix(code[kappa], code[mu])) {
              continue;
            }
            ++result.lemma1_checks;
            const auto reduced = reduce_sequence(code, mu, kappa);
            if (!sp && checker.is_code(reduced.words())) {
              ++result.lemma1_violations;
              note("lemma1", code);
            }
          }
        }
      },
      budget);
  return result;
}

VerificationReport verify_pairs(AlphabetSize n, std::uint32_t len_max) {
  VerificationReport report{"pairs", "|w|,|v|<=" + std::to_string(len_max), {}};
  CodeChecker checker;
  for (std::uint32_t a = 1; a <= len_max; ++a) {
    for (std::uint32_t b = 1; b <= len_max; ++b) {
      PointOutcome out{GridPoint{n, LengthDistribution({a, b})}.label(), {}, true, {}};
      std::uint64_t codes = 0;
      std::vector<Word> pair{Word(n), Word(n)};
      for (Word w : enumerate_words(n, a)) {
        for (Word v : enumerate_words(n, b)) {
          const bool commute = w.concat(v) == v.concat(w);
          pair[0] = w;
          pair[1] = v;
          const bool decided = checker.is_code(pair);
          codes += decided ? 1 : 0;
          if (decided == commute) {
            fail(out, "(" + w.to_string() + "," + v.to_string() + ") verdict vs wv != vw");
          }
        }
      }
      record(out, "ud", to_nat(codes));
      expect_equal(out, "ud", to_nat(codes), ud_count_pair(n, a, b));
      report.points.push_back(std::move(out));
    }
  }
  return report;
}

VerificationReport verify_mcmillan(std::uint32_t n_max, std::uint32_t len_max,
                                   const CensusOptions& options) {
  VerificationReport report{"mcmillan", "", {}};
  const auto grid = ordered_triple_grid(2, n_max, len_max);
  report.grid = std::to_string(grid.size()) + " points";
  for (const auto& point : grid) {
    PointOutcome out{point.label(), {}, true, {}};
    const bool kraft = is_realizable(point.n, point.lengths);
    const auto counted = census(point.n, point.lengths, options);
    out.values = {{"kraft_sum", to_string(kraft_sum(point.n, point.lengths))},
                  {"ud", counted.ud_count.get_str()},
                  {"pr", counted.pr_count.get_str()}};
    if (kraft != (counted.ud_count > 0)) fail(out, "Kraft vs UD nonempty");
    if (kraft != (counted.pr_count > 0)) fail(out, "Kraft vs PR nonempty");
    report.points.push_back(std::move(out));
  }
  return report;
}

VerificationReport verify_grid_minimum(const std::vector<GridPoint>& grid,
                                       const CensusOptions& options) {
  VerificationReport report{"corollary1", std::to_string(grid.size()) + " points", {}};
  std::map<std::uint32_t, std::vector<RhoResult>> by_n;
  for (const auto& point : grid) by_n[point.n.value()].push_back(rho(point.n, point.lengths, options));
  for (const auto& [nv, results] : by_n) {
    const auto best = std::min_element(results.begin(), results.end(),
                                       [](const auto& x, const auto& y) { return x.rho < y.rho; });
    const auto s = best->lengths.sorted();
    PointOutcome out{"n=" + std::to_string(nv), {}, true, {}};
    out.values = {{"argmin", "(" + best->lengths.to_string() + ")"},
                  {"min_rho", to_string(best->rho)},
                  {"alpha", to_string(alpha(AlphabetSize(nv)))}};
    const bool in_family = nv > 2 ? (s[0] == 1 && s[1] == 1) : (s[0] == 1 && s[1] == 2);
    if (!in_family) fail(out, "minimum outside the extremal family");
    if (!(best->rho > alpha(AlphabetSize(nv)))) fail(out, "minimum does not exceed alpha");
    report.points.push_back(std::move(out));
  }
  return report;
}

VerificationReport verify_limits(std::uint32_t n_max, std::uint32_t c_max) {
  VerificationReport report{"limits", "c<=" + std::to_string(c_max), {}};
  auto add = [&](Family family, AlphabetSize n) {
    const auto table = convergence_table(family, n, c_max);
    PointOutcome out{std::string(to_string(family)) + " n=" + std::to_string(n.value()), {},
                     true, {}};
    out.values = {{"limit", to_string(table.limit)},
                  {"last_gap", to_string(table.rows.back().gap)},
                  {"last_gap_decimal", table.rows.back().gap_decimal}};
    if (!table.strictly_decreasing) fail(out, "gap is not strictly decreasing");
    for (const auto& row : table.rows) {
      if (!(row.gap > 0)) fail(out, "rho not above the limit at c=" + std::to_string(row.c));
    }
    report.points.push_back(std::move(out));
  };
  for (std::uint32_t nv = 3; nv <= n_max; ++nv) add(Family::k11c, AlphabetSize(nv));
  if (c_max >= 2) add(Family::k12cBinary, AlphabetSize(2));
  return report;
}

std::vector<std::string_view> claim_names() {
  return {"theorem1", "theorem2", "theorem4", "prop1",  "prop2",    "prop3",      "prop4",
          "nud",      "lemma1",   "reversal", "oracle", "pairs",    "mcmillan",   "corollary1",
          "limits"};
}

namespace {

VerificationReport decider_report(std::string claim, const ClaimGrid& grid,
                                  const CensusOptions& options) {
  const auto r = cross_check_decider(AlphabetSize(2), grid.total_max, options.budget);
  VerificationReport report{claim, "binary, total length <= " + std::to_string(grid.total_max),
                            {}};
  PointOutcome out{"all sequences", {}, true, {}};
  out.values = {{"sequences", std::to_string(r.sequences)}, {"codes", std::to_string(r.codes)}};
  std::uint64_t bad = 0;
  if (claim == "lemma1") {
    out.values.emplace_back("reductions", std::to_string(r.lemma1_checks));
    bad = r.lemma1_violations;
  } else if (claim == "reversal") {
    bad = r.reversal_disagreements;
  } else {
    bad = r.oracle_disagreements + r.prefix_not_code;
  }
  out.values.emplace_back("failures", std::to_string(bad));
  if (bad != 0) {
    out.pass = false;
    for (const auto& e : r.examples) out.note += (out.note.empty() ? "" : "; ") + e;
  }
  report.points.push_back(std::move(out));
  return report;
}

}  // namespace

VerificationReport verify_claim(std::string_view claim, const ClaimGrid& grid,
                                const CensusOptions& options) {
  const auto sorted = [&] {
    return sorted_triple_grid(2, grid.n_max, grid.len_max, true, grid.tuple_cap);
  };
  VerificationReport report;
  if (claim == "theorem1" || claim == "theorem2") {
    report = verify_bounds(sorted(), options);
  } else if (claim == "theorem4") {
    report = verify_theorem4(sorted(), options);
  } else if (claim == "prop1") {
    report = verify_count_formulas(ordered_triple_grid(2, grid.n_max, grid.len_max, grid.tuple_cap),
                                   options);
  } else if (claim == "prop2") {
    report = verify_prop2(grid.n_max, grid.c_max, options);
  } else if (claim == "prop3") {
    report = verify_prop3(grid.c_max);
  } else if (claim == "prop4") {
    report = verify_prop4(grid.c_max);
  } else if (claim == "nud") {
    report = verify_nud(grid.c_max, options);
  } else if (claim == "lemma1" || claim == "reversal" || claim == "oracle") {
    report = decider_report(std::string(claim), grid, options);
  } else if (claim == "pairs") {
    report = verify_pairs(AlphabetSize(2), grid.len_max);
  } else if (claim == "mcmillan") {
    report = verify_mcmillan(grid.n_max, grid.len_max, options);
  } else if (claim == "corollary1") {
    report = verify_grid_minimum(sorted(), options);
  } else if (claim == "limits") {
    report = verify_limits(grid.n_max, grid.c_max);
  } else {
    throw ParseError("unknown claim '" + std::string(claim) + "'");
  }
  report.claim = std::string(claim);
  return report;
}

}  // namespace udcodes
