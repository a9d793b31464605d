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

#include "udcodes/analysis.hpp"

#include <algorithm>

#include "udcodes/closed_forms.hpp"
#include "udcodes/decidability.hpp"
#include "udcodes/errors.hpp"

namespace udcodes {

std::string_view to_string(RhoMethod m) {
  return m == RhoMethod::kClosedForm ? "ClosedForm" : "Enumeration";
}

namespace {

void require_realizable(AlphabetSize n, const LengthDistribution& lengths) {
  if (!is_realizable(n, lengths)) {
    throw PreconditionError("rho is undefined: n=" + std::to_string(n.value()) + ", L=(" +
                            lengths.to_string() + ") violates the Kraft inequality");
  }
}

RhoResult make_result(AlphabetSize n, const LengthDistribution& lengths, RhoMethod method,
                      ExactNat pr, ExactNat ud) {
  if (ud == 0) {
    throw std::logic_error("no codes for realizable L = (" + lengths.to_string() + ")");
  }
  ExactRatio r = make_ratio(pr, ud);
  return RhoResult{n, lengths, std::move(r), method, std::move(pr), std::move(ud)};
}

}  // namespace

std::optional<RhoResult> rho_closed_form(AlphabetSize n, const LengthDistribution& lengths) {
  require_realizable(n, lengths);
  if (lengths.size() != 3) return std::nullopt;
  const auto s = lengths.sorted();
  if (n.value() > 2 && s[0] == 1 && s[1] == 1) {
    auto result = make_result(n, lengths, RhoMethod::kClosedForm,
                              pr_count_triple(n, lengths), ud_count_11c(n, s[2]));
    if (result.rho != rho_11c_closed(n, s[2])) {
      throw std::logic_error("rho for (1,1,c): count ratio and closed form disagree");
    }
    return result;
  }
  if (n.value() == 2 && s[0] == 1 && s[1] == 2) {
    return make_result(n, lengths, RhoMethod::kClosedForm, pr_count_triple(n, lengths),
                       ud_count_12c_binary(s[2]));
  }
  return std::nullopt;
}

RhoResult rho_by_enumeration(AlphabetSize n, const LengthDistribution& lengths,
                             const CensusOptions& options) {
  require_realizable(n, lengths);
  auto c = census(n, lengths, options);
  return make_result(n, lengths, RhoMethod::kEnumeration, std::move(c.pr_count),
                     std::move(c.ud_count));
}

RhoResult rho(AlphabetSize n, const LengthDistribution& lengths,
              const CensusOptions& options) {
  if (auto closed = rho_closed_form(n, lengths)) return *std::move(closed);
  return rho_by_enumeration(n, lengths, options);
}

// ---------------------------------------------------------------- grids

std::string GridPoint::label() const {
  return "n=" + std::to_string(n.value()) + " L=(" + lengths.to_string() + ")";
}

std::vector<GridPoint> sorted_triple_grid(std::uint32_t n_min, std::uint32_t n_max,
                                          std::uint32_t len_max, bool realizable_only,
                                          std::uint64_t tuple_cap) {
  std::vector<GridPoint> grid;
  for (std::uint32_t nv = n_min; nv <= n_max; ++nv) {
    const AlphabetSize n(nv);
    for (std::uint32_t a = 1; a <= len_max; ++a) {
      for (std::uint32_t b = a; b <= len_max; ++b) {
        for (std::uint32_t c = b; c <= len_max; ++c) {
          LengthDistribution lengths({a, b, c});
          if (realizable_only && !is_realizable(n, lengths)) continue;
          if (tuple_cap != 0 && pow_nat(nv, a + b + c) > to_nat(tuple_cap)) continue;
          grid.push_back({n, std::move(lengths)});
        }
      }
    }
  }
  return grid;
}

std::vector<GridPoint> ordered_triple_grid(std::uint32_t n_min, std::uint32_t n_max,
                                           std::uint32_t len_max, std::uint64_t tuple_cap) {
  std::vector<GridPoint> grid;
  for (std::uint32_t nv = n_min; nv <= n_max; ++nv) {
    for (std::uint32_t a = 1; a <= len_max; ++a) {
      for (std::uint32_t b = 1; b <= len_max; ++b) {
        for (std::uint32_t c = 1; c <= len_max; ++c) {
          if (tuple_cap != 0 && pow_nat(nv, a + b + c) > to_nat(tuple_cap)) continue;
          grid.push_back({AlphabetSize(nv), LengthDistribution({a, b, c})});
        }
      }
    }
  }
  return grid;
}

bool VerificationReport::pass() const {
  return std::all_of(points.begin(), points.end(), [](const auto& p) { return p.pass; });
}

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [](const auto& p) { return !p.pass; }));
}

// ---------------------------------------------------------------- claims

namespace {

std::string describe(const std::vector<GridPoint>& grid) {
  return std::to_string(grid.size()) + " points";
}

}  // namespace

VerificationReport verify_theorem4(const std::vector<GridPoint>& grid,
                                   const CensusOptions& options) {
  VerificationReport report{"theorem4", describe(grid), {}};
  for (const auto& point : grid) {
    PointOutcome out{point.label(), {}, true, {}};
    const auto r = rho(point.n, point.lengths, options);
    const auto threshold = alpha(point.n);
    out.values = {{"rho", to_string(r.rho)},
                  {"alpha", to_string(threshold)},
                  {"method", std::string(to_string(r.method))}};
    out.pass = r.rho > threshold;
    if (r.method == RhoMethod::kClosedForm &&
        pow_nat(point.n.value(), point.lengths.total()) <= to_nat(options.budget)) {
      const auto counted = rho_by_enumeration(point.n, point.lengths, options);
      out.values.emplace_back("rho_enumerated", to_string(counted.rho));
      if (counted.pr_count != r.pr_count || counted.ud_count != r.ud_count) {
        out.pass = false;
        out.note = "closed form and census disagree";
      }
    }
    if (!(r.rho > threshold)) out.note = "rho does not exceed alpha";
    report.points.push_back(std::move(out));
  }
  return report;
}

VerificationReport verify_bounds(const std::vector<GridPoint>& grid,
                                 const CensusOptions& options) {
  VerificationReport report{"bounds", describe(grid), {}};
  for (const auto& point : grid) {
    PointOutcome out{point.label(), {}, true, {}};
    const auto r = rho(point.n, point.lengths, options);
    const auto lower =
        thm2_rho_lower_bound(point.n, static_cast<std::uint32_t>(point.lengths.size()));
    out.values = {{"rho", to_string(r.rho)}, {"lower", to_string(lower)}};
    if (lower > r.rho) {
      out.pass = false;
      out.note = "below the lower bound";
    }
    const auto values = point.lengths.distinct_values();
    for (std::size_t i = 0; i < values.size(); ++i) {
      for (std::size_t j = i + 1; j < values.size(); ++j) {
        const auto upper = thm1_rho_upper_bound(point.n, point.lengths, values[i], values[j]);
        out.values.emplace_back(
            "upper(" + std::to_string(values[i]) + "," + std::to_string(values[j]) + ")",
            to_string(upper));
        if (r.rho > upper) {
          out.pass = false;
          out.note = "above an upper bound";
        }
      }
    }
    report.points.push_back(std::move(out));
  }
  return report;
}

// ---------------------------------------------------------------- convergence

std::string_view to_string(Family f) { return f == Family::k11c ? "11c" : "12c"; }

Family parse_family(std::string_view text) {
  if (text == "11c") return Family::k11c;
  if (text == "12c") return Family::k12cBinary;
  throw ParseError("unknown family '" + std::string(text) + "' (expected 11c or 12c)");
}

ConvergenceTable convergence_table(Family family, AlphabetSize n, std::uint32_t c_max,
                                   int digits) {
  std::uint32_t c_min = 1;
  if (family == Family::k11c) {
    if (n.value() <= 2) throw PreconditionError("the (1,1,c) family needs n > 2");
  } else {
    if (n.value() != 2) throw PreconditionError("the (1,2,c) family is binary only");
    c_min = 2;
  }
  if (c_max < c_min) {
    throw PreconditionError("c_max must be at least " + std::to_string(c_min));
  }
  ConvergenceTable table{family, n, alpha(n), {}, true};
  for (std::uint32_t c = c_min; c <= c_max; ++c) {
    ExactRatio value;
    if (family == Family::k11c) {
      value = rho_11c_closed(n, c);
    } else {
      value = make_ratio(pr_count_triple(n, LengthDistribution({1, 2, c})),
                         ud_count_12c_binary(c));
    }
    ExactRatio gap = value - table.limit;
    if (!table.rows.empty() && !(abs(gap) < abs(table.rows.back().gap))) {
      table.strictly_decreasing = false;
    }
    table.rows.push_back({c, value, gap, to_decimal(value, digits), to_decimal(gap, digits)});
  }
  return table;
}

}  // namespace udcodes
