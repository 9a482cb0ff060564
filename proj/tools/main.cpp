/* Copyright 2026 The Weilv Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// weilv: the command-line front end. JSON in, JSON out, no interactive
// mode. Exit status: 0 when every verdict passes or is not applicable,
// 2 on any check failure, 1 on usage or resource errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "weilv/charsum.hpp"
#include "weilv/common.hpp"
#include "weilv/counting.hpp"
#include "weilv/ffield.hpp"
#include "weilv/io.hpp"
#include "weilv/report.hpp"
#include "weilv/selftest.hpp"

#ifndef WEILV_VERSION
#define WEILV_VERSION "0.0.0"
#endif

namespace {

using weilv::AmbientKind;
using weilv::BudgetError;
using weilv::CharacterSumResult;
using weilv::CharSumOptions;
using weilv::CheckFailure;
using weilv::FieldCtx;
using weilv::FieldCtxPtr;
using weilv::FieldElement;
using weilv::ReportOptions;
using weilv::ReportStage;
using weilv::RunEcho;
using weilv::UsageError;
using weilv::VarietySpec;

struct Config {
  std::string input;
  std::string output;
  int depth = 4;
  int num_degree = 0;
  int den_degree = 0;
  double tol = 1e-9;
  std::uint64_t budget = weilv::kDefaultBudget;
  int threads = 1;
  bool assume_smooth = false;
  int limit = 100;
  std::uint64_t p = 0;
  int ext_degree = 1;
  int vars = 1;
  std::uint64_t shift = 1;
};

// WEILV_THREADS overrides --threads when set to a positive integer.
void apply_thread_env(Config& cfg) {
  const char* env = std::getenv("WEILV_THREADS");
  if (env == nullptr || *env == '\0') return;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) {
    throw UsageError(std::string("WEILV_THREADS: not a positive integer: ") +
                     env);
  }
  cfg.threads = static_cast<int>(v);
}

void emit(const Config& cfg, const std::string& doc) {
  if (cfg.output.empty()) {
    std::cout << doc;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw UsageError(cfg.output + ": cannot open for writing");
  out << doc;
  out.flush();
  if (!out) throw UsageError(cfg.output + ": write failed");
}

void add_output_flag(CLI::App* sub, Config& cfg) {
  sub->add_option("--output", cfg.output,
                  "Write the report to this file instead of stdout");
}

void add_pipeline_flags(CLI::App* sub, Config& cfg) {
  sub->add_option("--input", cfg.input, "Variety description file (JSON)")
      ->required();
  sub->add_option("--depth", cfg.depth, "Count depth m: compute N_1..N_m")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--num-degree", cfg.num_degree,
                  "Zeta numerator degree (requires --den-degree; "
                  "omit both to scan degrees within (depth-1)/3)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--den-degree", cfg.den_degree,
                  "Zeta denominator degree (requires --num-degree)")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--tol", cfg.tol,
                  "Relative tolerance for root-magnitude checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--budget", cfg.budget,
                  "Largest admissible enumeration cost per count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--threads", cfg.threads,
                  "Worker threads for counting (WEILV_THREADS overrides)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_flag(sub, cfg);
}

int run_pipeline(const Config& cfg, const CLI::App& sub, ReportStage stage) {
  ReportOptions opts;
  opts.depth = cfg.depth;
  if (sub.count("--num-degree") > 0) opts.num_degree = cfg.num_degree;
  if (sub.count("--den-degree") > 0) opts.den_degree = cfg.den_degree;
  opts.tol = cfg.tol;
  opts.budget = cfg.budget;
  opts.threads = cfg.threads;
  opts.assume_smooth = cfg.assume_smooth;

  const VarietySpec variety = weilv::load_variety(cfg.input);
  const weilv::WeilReport report =
      weilv::build_weil_report(variety, stage, opts);

  RunEcho echo;
  echo.command = sub.get_name();
  echo.input_path = cfg.input;
  echo.depth = cfg.depth;
  if (opts.num_degree) echo.num_degree = *opts.num_degree;
  if (opts.den_degree) echo.den_degree = *opts.den_degree;
  echo.tol = cfg.tol;
  echo.budget = cfg.budget;
  echo.threads = cfg.threads;
  if (stage == ReportStage::kWeil) echo.assume_smooth = cfg.assume_smooth;
  emit(cfg, weilv::report_json(echo, report));
  return report.any_failure ? 2 : 0;
}

int run_expsum(const Config& cfg) {
  const VarietySpec variety = weilv::load_variety(cfg.input);
  if (variety.ambient().kind != AmbientKind::kAffine) {
    throw UsageError(cfg.input +
                     ": expsum needs an affine ambient space; the single "
                     "equation is the exponent polynomial Q");
  }
  if (variety.equations().size() != 1) {
    throw UsageError(cfg.input +
                     ": expsum needs exactly one equation (the exponent "
                     "polynomial Q)");
  }
  CharSumOptions copts;
  copts.budget = cfg.budget;
  const CharacterSumResult res =
      weilv::exponential_sum(variety.equations()[0], copts);

  RunEcho echo;
  echo.command = "expsum";
  echo.input_path = cfg.input;
  echo.budget = cfg.budget;
  emit(cfg, weilv::charsum_json(echo, "exponential-sum", res));
  return !res.applicable || res.pass ? 0 : 2;
}

int run_kloosterman(const Config& cfg) {
  const FieldCtxPtr ctx = FieldCtx::make(cfg.p, cfg.ext_degree);
  const FieldElement shift = FieldElement::constant(ctx, cfg.shift);
  CharSumOptions copts;
  copts.budget = cfg.budget;
  const CharacterSumResult res =
      weilv::kloosterman(ctx, cfg.vars, shift, copts);

  RunEcho echo;
  echo.command = "kloosterman";
  echo.budget = cfg.budget;
  echo.vars = cfg.vars;
  echo.field =
      std::to_string(cfg.p) + "^" + std::to_string(cfg.ext_degree);
  echo.shift = std::to_string(cfg.shift % cfg.p);
  emit(cfg, weilv::charsum_json(echo, "kloosterman", res));
  return !res.applicable || res.pass ? 0 : 2;
}

int run_tau(const Config& cfg) {
  const weilv::TauReport report = weilv::ramanujan_tau(cfg.limit);
  RunEcho echo;
  echo.command = "tau";
  echo.limit = cfg.limit;
  echo.budget = cfg.budget;
  emit(cfg, weilv::tau_json(echo, report));
  return report.all_pass ? 0 : 2;
}

int run_selftest_cmd(const char* argv0) {
  weilv::SelftestOptions opts;
  opts.cli_path = argv0;
  const std::vector<weilv::CriterionResult> results =
      weilv::run_selftest(std::cout, opts);
  return weilv::all_passed(results) ? 0 : 2;
}

int run(int argc, char** argv) {
  CLI::App app{
      "weilv: exact zeta functions of varieties over finite fields, with "
      "mechanical checks of rationality, the functional equation, root "
      "magnitudes, and point-count bounds"};
  app.set_version_flag("--version", std::string("weilv ") + WEILV_VERSION);
  app.require_subcommand(1);

  Config cfg;

  CLI::App* count_sub = app.add_subcommand(
      "count", "Count points N_1..N_m and the closed-point census");
  add_pipeline_flags(count_sub, cfg);

  CLI::App* zeta_sub = app.add_subcommand(
      "zeta", "Counts plus the zeta series and its rational reconstruction");
  add_pipeline_flags(zeta_sub, cfg);

  CLI::App* weil_sub = app.add_subcommand(
      "weil-report",
      "Full report: counts, zeta, functional equation, root magnitudes, "
      "weights, and point-count bounds");
  add_pipeline_flags(weil_sub, cfg);
  weil_sub->add_flag("--assume-smooth", cfg.assume_smooth,
                     "Assert the variety is smooth projective, enabling "
                     "the Riemann-hypothesis and deviation-bound checks");

  CLI::App* expsum_sub = app.add_subcommand(
      "expsum",
      "Exponential sum S = sum_x psi(Q(x)) against (d-1)^n q^{n/2}; the "
      "input's single equation over an affine ambient is Q");
  expsum_sub->add_option("--input", cfg.input, "Polynomial file (JSON)")
      ->required();
  expsum_sub
      ->add_option("--budget", cfg.budget,
                   "Largest admissible number of summed terms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_flag(expsum_sub, cfg);

  CLI::App* kloos_sub = app.add_subcommand(
      "kloosterman",
      "Kloosterman sum K_n(a) over F_{p^k} against (n+1) q^{n/2}");
  kloos_sub->add_option("--p", cfg.p, "Field characteristic (prime)")
      ->required();
  kloos_sub
      ->add_option("--ext-degree", cfg.ext_degree,
                   "Extension degree k of the field F_{p^k}")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  kloos_sub
      ->add_option("--vars", cfg.vars,
                   "Number of inverted variables n in K_n")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  kloos_sub
      ->add_option("--shift", cfg.shift,
                   "Shift a as an integer residue, reduced mod p; must "
                   "reduce to a nonzero element")
      ->capture_default_str();
  kloos_sub
      ->add_option("--budget", cfg.budget,
                   "Largest admissible number of summed terms")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_flag(kloos_sub, cfg);

  CLI::App* tau_sub = app.add_subcommand(
      "tau", "Ramanujan tau(1..limit) and tau(p)^2 <= 4 p^11 checks");
  tau_sub->add_option("--limit", cfg.limit, "Compute tau(1..limit)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_output_flag(tau_sub, cfg);

  CLI::App* selftest_sub = app.add_subcommand(
      "selftest", "Run the acceptance suite on the built-in catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "weilv: error: " << e.what() << "\n";
    return 1;
  }

  apply_thread_env(cfg);
  if (count_sub->parsed()) {
    return run_pipeline(cfg, *count_sub, ReportStage::kCount);
  }
  if (zeta_sub->parsed()) {
    return run_pipeline(cfg, *zeta_sub, ReportStage::kZeta);
  }
  if (weil_sub->parsed()) {
    return run_pipeline(cfg, *weil_sub, ReportStage::kWeil);
  }
  if (expsum_sub->parsed()) return run_expsum(cfg);
  if (kloos_sub->parsed()) return run_kloosterman(cfg);
  if (tau_sub->parsed()) return run_tau(cfg);
  if (selftest_sub->parsed()) return run_selftest_cmd(argv[0]);
  std::cerr << "weilv: error: no subcommand\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CheckFailure& e) {
    std::cerr << "weilv: check failed: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "weilv: error: " << e.what() << "\n";
    return 1;
  } catch (const weilv::Error& e) {
    std::cerr << "weilv: error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "weilv: error: " << e.what() << "\n";
    return 1;
  }
}
