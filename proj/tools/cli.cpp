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

#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "udcodes/analysis.hpp"
#include "udcodes/claims.hpp"
#include "udcodes/closed_forms.hpp"
#include "udcodes/decidability.hpp"
#include "udcodes/enumeration.hpp"
#include "udcodes/errors.hpp"

namespace udcodes::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::uint64_t budget = kDefaultTupleBudget;
  unsigned threads = 0;
  bool letter_symmetry = false;

  CensusOptions census() const {
    CensusOptions options;
    options.budget = budget;
    options.threads = threads;
    options.letter_symmetry = letter_symmetry;
    return options;
  }
};

struct DecideArgs {
  std::uint32_t n = 2;
  std::string words;
  bool trace = false;
  bool witness = false;
  std::uint64_t max_len = 0;
};

struct CountArgs {
  std::string kind;
  std::uint32_t n = 2;
  std::string lengths;
  std::string method = "formula";
};

struct RhoArgs {
  std::uint32_t n = 2;
  std::string lengths;
};

struct VerifyArgs {
  std::string claim;
  ClaimGrid grid;
};

struct TableArgs {
  std::string family;
  std::uint32_t n = 2;
  std::uint32_t c_max = 30;
  std::string format = "json";
  int digits = 12;
};

// What a command hands back before the document is assembled.
struct Outcome {
  Json inputs = Json::object();
  Json results = Json::object();
  std::string status = "ok";
  int exit_code = kOk;
  std::optional<std::string> raw;  // CSV bypasses the document
};

Json lengths_json(const LengthDistribution& lengths) {
  Json out = Json::array();
  for (auto a : lengths.lengths()) out.push_back(a);
  return out;
}

Json words_json(std::span<const Word> words) {
  Json out = Json::array();
  for (const auto& w : words) out.push_back(w.to_string());
  return out;
}

Json indices_json(const std::vector<std::size_t>& indices) {
  Json out = Json::array();
  for (auto i : indices) out.push_back(i + 1);
  return out;
}

Outcome run_decide(const DecideArgs& args, const Settings& settings) {
  const AlphabetSize n(args.n);
  const auto code = CodeSequence::parse(n, args.words);
  Outcome o;
  o.inputs = {{"n", args.n}, {"words", words_json(code.words())},
              {"trace", args.trace}, {"witness", args.witness}};
  const auto verdict = sardinas_patterson(code);
  o.results["is_code"] = verdict.is_code;
  o.results["termination"] = std::string(to_string(verdict.termination));
  if (args.trace) {
    Json trace = Json::array();
    for (const auto& d : verdict.trace) trace.push_back(words_json(d));
    o.results["trace"] = std::move(trace);
  }
  if (args.witness) {
    const auto bound = args.max_len ? args.max_len : default_witness_bound(code);
    o.inputs["max_len"] = bound;
    Json witness = nullptr;
    if (!verdict.is_code) {
      const auto found = naive_double_factorization(code, bound, settings.budget);
      if (found) {
        witness = {{"word", found->word.to_string()},
                   {"factorization_a", indices_json(found->factorization_a)},
                   {"factorization_b", indices_json(found->factorization_b)}};
      }
    }
    o.results["witness"] = std::move(witness);
  }
  return o;
}

struct FormulaCount {
  ExactNat count;
  std::string formula;
};

std::optional<FormulaCount> count_by_formula(const std::string& kind, AlphabetSize n,
                                             const LengthDistribution& lengths) {
  if (kind == "pr") {
    if (lengths.size() != 3) return std::nullopt;
    return FormulaCount{pr_count_triple(n, lengths), "pr_count_triple"};
  }
  if (lengths.size() == 2) {
    return FormulaCount{ud_count_pair(n, lengths[0], lengths[1]), "ud_count_pair"};
  }
  if (lengths.size() != 3) return std::nullopt;
  const auto s = lengths.sorted();
  if (s[0] == 1 && s[1] == 1) return FormulaCount{ud_count_11c(n, s[2]), "ud_count_11c"};
  if (n.value() == 2 && s[0] == 1 && s[1] == 2) {
    return FormulaCount{ud_count_12c_binary(s[2]), "ud_count_12c_binary"};
  }
  return std::nullopt;
}

Outcome run_count(const CountArgs& args, const Settings& settings) {
  const AlphabetSize n(args.n);
  const auto lengths = LengthDistribution::parse(args.lengths);
  Outcome o;
  o.inputs = {{"kind", args.kind}, {"n", args.n}, {"lengths", lengths_json(lengths)},
              {"method", args.method}};
  std::optional<ExactNat> formula;
  std::optional<ExactNat> enumerated;
  if (args.method != "enumerate") {
    auto f = count_by_formula(args.kind, n, lengths);
    if (!f) {
      throw UncoveredFamilyError("no closed form for " + args.kind + " at n=" +
                                 std::to_string(args.n) + " L=(" + lengths.to_string() + ")");
    }
    o.results["formula_name"] = f->formula;
    o.results["formula"] = to_string(f->count);
    formula = std::move(f->count);
  }
  if (args.method != "formula") {
    const auto r = census(n, lengths, settings.census());
    enumerated = args.kind == "ud" ? r.ud_count : r.pr_count;
    o.results["enumeration"] = to_string(*enumerated);
    o.results["total_tuples"] = to_string(r.total_tuples);
  }
  if (formula && enumerated) {
    const bool agree = *formula == *enumerated;
    o.results["agreement"] = agree;
    if (!agree) {
      o.status = "fail";
      o.exit_code = kVerificationFailed;
    }
  }
  o.results["count"] = to_string(formula ? *formula : *enumerated);
  return o;
}

Outcome run_rho(const RhoArgs& args, const Settings& settings) {
  const AlphabetSize n(args.n);
  const auto lengths = LengthDistribution::parse(args.lengths);
  Outcome o;
  o.inputs = {{"n", args.n}, {"lengths", lengths_json(lengths)}};
  const auto r = rho(n, lengths, settings.census());
  o.results = {{"rho", to_string(r.rho)},
               {"rho_decimal", to_decimal(r.rho)},
               {"method", std::string(to_string(r.method))},
               {"pr_count", to_string(r.pr_count)},
               {"ud_count", to_string(r.ud_count)},
               {"alpha", to_string(alpha(n))}};
  return o;
}

Outcome run_verify(const VerifyArgs& args, const Settings& settings) {
  Outcome o;
  o.inputs = {{"claim", args.claim},
              {"n_max", args.grid.n_max},
              {"len_max", args.grid.len_max},
              {"c_max", args.grid.c_max},
              {"total_max", args.grid.total_max},
              {"tuple_cap", args.grid.tuple_cap},
              {"letter_symmetry", settings.letter_symmetry}};
  const auto report = verify_claim(args.claim, args.grid, settings.census());
  Json points = Json::array();
  for (const auto& p : report.points) {
    Json values = Json::object();
    for (const auto& [k, v] : p.values) values[k] = v;
    Json point = {{"point", p.point}, {"pass", p.pass}, {"values", std::move(values)}};
    if (!p.note.empty()) point["note"] = p.note;
    points.push_back(std::move(point));
  }
  o.results = {{"claim", report.claim},
               {"grid", report.grid},
               {"pass", report.pass()},
               {"checked", report.points.size()},
               {"failures", report.failures()},
               {"points", std::move(points)}};
  if (!report.pass()) {
    o.status = "fail";
    o.exit_code = kVerificationFailed;
  } else {
    o.status = "pass";
  }
  return o;
}

Outcome run_table(const TableArgs& args) {
  const auto family = parse_family(args.family);
  const AlphabetSize n(args.n);
  const auto table = convergence_table(family, n, args.c_max, args.digits);
  Outcome o;
  o.inputs = {{"family", args.family}, {"n", args.n}, {"c_max", args.c_max},
              {"format", args.format}, {"digits", args.digits}};
  if (args.format == "csv") {
    std::ostringstream csv;
    csv << "c,rho,gap,rho_decimal,gap_decimal\n";
    for (const auto& row : table.rows) {
      csv << row.c << ',' << to_string(row.rho) << ',' << to_string(row.gap) << ','
          << row.rho_decimal << ',' << row.gap_decimal << '\n';
    }
    o.raw = csv.str();
    return o;
  }
  Json rows = Json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"c", row.c},
                    {"rho", to_string(row.rho)},
                    {"gap", to_string(row.gap)},
                    {"rho_decimal", row.rho_decimal},
                    {"gap_decimal", row.gap_decimal}});
  }
  o.results = {{"family", std::string(to_string(table.family))},
               {"n", args.n},
               {"limit", to_string(table.limit)},
               {"strictly_decreasing", table.strictly_decreasing},
               {"rows", std::move(rows)}};
  return o;
}

Json document(const std::string& command, const std::vector<std::string>& args,
              Outcome& o, double seconds) {
  Json argv = Json::array();
  for (const auto& a : args) argv.push_back(a);
  return Json{{"command", command},
              {"argv", std::move(argv)},
              {"inputs", std::move(o.inputs)},
              {"results", std::move(o.results)},
              {"status", o.status},
              {"timing", {{"seconds", seconds}}}};
}

CliResult error_result(const std::string& command, const std::vector<std::string>& args,
                       int code, const std::string& kind, const std::string& message) {
  Outcome o;
  o.status = "error";
  o.results = {{"error", kind}, {"message", message}};
  CliResult r;
  r.exit_code = code;
  r.out = document(command, args, o, 0.0).dump(2) + "\n";
  r.err = "udcodes: " + message + "\n";
  return r;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  Settings settings;
  DecideArgs decide;
  CountArgs count;
  RhoArgs rho_args;
  VerifyArgs verify;
  TableArgs table;

  CLI::App app{"Unique decodability, prefix codes and the ratio rho", "udcodes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--budget", settings.budget, "Largest census size n^(sum L)");
  app.add_option("--threads", settings.threads, "Worker threads, 0 for all cores");
  app.add_flag("--letter-symmetry", settings.letter_symmetry,
               "Sweep one representative per letter permutation orbit");

  auto* sub_decide = app.add_subcommand("decide", "Run Sardinas-Patterson on a sequence");
  sub_decide->add_option("-n", decide.n, "Alphabet size")->required()->check(CLI::Range(2u, 1u << 20));
  sub_decide->add_option("-w,--words", decide.words, "Comma-separated codewords")->required();
  sub_decide->add_flag("--trace", decide.trace, "Emit the dangling sets");
  sub_decide->add_flag("--witness", decide.witness, "Search for a doubly factorizable word");
  sub_decide->add_option("--max-len", decide.max_len, "Witness length bound");

  auto* sub_count = app.add_subcommand("count", "Count codes or prefix codes");
  sub_count->add_option("kind", count.kind, "ud or pr")->required()->check(CLI::IsMember({"ud", "pr"}));
  sub_count->add_option("-n", count.n, "Alphabet size")->required()->check(CLI::Range(2u, 1u << 20));
  sub_count->add_option("-L,--lengths", count.lengths, "Comma-separated lengths")->required();
  sub_count->add_option("--method", count.method)->check(CLI::IsMember({"formula", "enumerate", "both"}));

  auto* sub_rho = app.add_subcommand("rho", "Exact ratio of prefix codes among codes");
  sub_rho->add_option("-n", rho_args.n, "Alphabet size")->required()->check(CLI::Range(2u, 1u << 20));
  sub_rho->add_option("-L,--lengths", rho_args.lengths, "Comma-separated lengths")->required();

  auto* sub_verify = app.add_subcommand("verify", "Check a named claim over a grid");
  sub_verify->add_option("claim", verify.claim)->required();
  sub_verify->add_option("--n-max", verify.grid.n_max)->check(CLI::Range(2u, 64u));
  sub_verify->add_option("--len-max", verify.grid.len_max)->check(CLI::Range(1u, 64u));
  sub_verify->add_option("--c-max", verify.grid.c_max)->check(CLI::Range(1u, 4096u));
  sub_verify->add_option("--total-max", verify.grid.total_max)->check(CLI::Range(1u, 64u));
  sub_verify->add_option("--tuple-cap", verify.grid.tuple_cap, "Skip larger grid points, 0 keeps all");

  auto* sub_table = app.add_subcommand("table", "Convergence of rho in an extremal family");
  sub_table->add_option("--family", table.family, "11c or 12c")->required();
  sub_table->add_option("-n", table.n, "Alphabet size")->required()->check(CLI::Range(2u, 1u << 20));
  sub_table->add_option("--c-max", table.c_max)->check(CLI::Range(1u, 100000u));
  sub_table->add_option("--format", table.format)->check(CLI::IsMember({"json", "csv"}));
  sub_table->add_option("--digits", table.digits)->check(CLI::Range(0, 1000));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {kOk, app.help(), {}};
  } catch (const CLI::ParseError& e) {
    return error_result("", args, kUsage, "usage", e.what());
  }

  std::string command;
  for (auto* sub : {sub_decide, sub_count, sub_rho, sub_verify, sub_table}) {
    if (sub->parsed()) command = sub->get_name();
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (command == "decide") {
      outcome = run_decide(decide, settings);
    } else if (command == "count") {
      outcome = run_count(count, settings);
    } else if (command == "rho") {
      outcome = run_rho(rho_args, settings);
    } else if (command == "verify") {
      outcome = run_verify(verify, settings);
    } else {
      outcome = run_table(table);
    }
  } catch (const udcodes::ParseError& e) {
    return error_result(command, args, kUsage, "parse", e.what());
  } catch (const PreconditionError& e) {
    return error_result(command, args, kUsage, "precondition", e.what());
  } catch (const SizeLimitError& e) {
    return error_result(command, args, kBudgetExceeded, "budget", e.what());
  } catch (const UncoveredFamilyError& e) {
    return error_result(command, args, kUncoveredFamily, "uncovered", e.what());
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  CliResult result;
  result.exit_code = outcome.exit_code;
  if (outcome.raw) {
    result.out = *outcome.raw;
  } else {
    result.out = document(command, args, outcome, elapsed.count()).dump(2) + "\n";
  }
  return result;
}

}  // namespace udcodes::cli
