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

#include "weilv/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "weilv/charsum.hpp"
#include "weilv/counting.hpp"
#include "weilv/ffield.hpp"
#include "weilv/fixtures.hpp"
#include "weilv/io.hpp"
#include "weilv/report.hpp"
#include "weilv/weil.hpp"
#include "weilv/zeta.hpp"

namespace weilv {
namespace {

// Pinned parameters of the acceptance suite.
constexpr double kTol = 1e-9;
constexpr std::uint64_t kHeavyBudget = std::uint64_t{1} << 30;
constexpr int kCurvePrimes[] = {5, 7, 11, 13};

struct Context {
  std::vector<Fixture> cat = catalog();
  // Zeta functions reconstructed by earlier criteria, by fixture label.
  std::map<std::string, RationalFn> zetas;
  SelftestOptions options;
};

// Records the first failing condition; later ones keep the first message.
bool require(CriterionResult& r, bool cond, const std::string& msg) {
  if (!cond && r.detail.empty()) r.detail = msg;
  return cond;
}

IntPoly ipoly(std::vector<Int> coeffs) { return IntPoly(std::move(coeffs)); }

std::uint64_t lcg_next(std::uint64_t& state) {
  state = state * 6364136223846793005ULL + 1442695040888963407ULL;
  return state >> 17;
}

// ---- criterion bodies -----------------------------------------------------------

// 1. Projective spaces: brute-force counts match the geometric series
//    closed form, and the reconstructed zeta is 1 / prod_i (1 - q^i t).
void criterion_projective(Context& ctx, CriterionResult& r) {
  const CountOptions opts{kHeavyBudget, 1};
  int checked = 0;
  for (int d = 1; d <= 3; ++d) {
    for (const int qv : {2, 3, 4, 5}) {
      std::ostringstream label;
      label << "P^" << d << "/F_" << qv;
      const Fixture& f = fixture_by_label(ctx.cat, label.str());
      const Int q = f.variety.base_field()->cardinality();

      const CountTable t3 = count_table(f.variety, 3, opts);
      for (int n = 1; n <= 3; ++n) {
        std::ostringstream msg;
        msg << label.str() << ": N_" << n << " = " << t3.at(n).get_str()
            << " differs from the closed form "
            << f.oracle(n).get_str();
        if (!require(r, t3.at(n) == f.oracle(n), msg.str())) return;
      }

      const CountTable td = count_table(f.variety, d + 1, opts);
      const RationalFn z =
          reconstruct_rational(zeta_series(td, d + 1), 0, d + 1);
      IntPoly expected = IntPoly::constant(1);
      for (int i = 0; i <= d; ++i) {
        expected = expected *
                   ipoly({Int(1), -int_pow(q, static_cast<unsigned long>(i))});
      }
      if (!require(r, z.numerator == IntPoly::constant(1),
                   label.str() + ": numerator is not 1")) {
        return;
      }
      if (!require(r, z.denominator == expected,
                   label.str() +
                       ": denominator is not prod_i (1 - q^i t)")) {
        return;
      }
      ctx.zetas[label.str()] = z;
      ++checked;
    }
  }
  r.pass = true;
  std::ostringstream detail;
  detail << checked
         << " spaces: counts m<=3 match the closed form exactly; zeta = "
            "1/prod_{i<=d}(1-q^i t) reconstructed exactly";
  r.detail = detail.str();
}

// Runs fn on every catalog fixture at the largest depth <= cap that fits
// the default budget.
bool for_each_fixture_depth(
    Context& ctx, CriterionResult& r, int cap,
    const std::function<bool(const Fixture&, const CountTable&,
                             CriterionResult&)>& fn,
    int& min_depth, int& max_depth) {
  min_depth = cap;
  max_depth = 0;
  for (const Fixture& f : ctx.cat) {
    const int m = max_depth_within_budget(f.variety, cap, kDefaultBudget);
    if (!require(r, m >= 1,
                 f.variety.label() +
                     ": not countable at depth 1 within the default "
                     "budget")) {
      return false;
    }
    const CountTable table =
        count_table(f.variety, m, CountOptions{kDefaultBudget, 1});
    if (!fn(f, table, r)) return false;
    min_depth = std::min(min_depth, m);
    max_depth = std::max(max_depth, m);
  }
  return true;
}

// 2. The series definition exp(sum N_n t^n / n) equals the Euler product
//    over closed points, exactly, for every fixture.
void criterion_equivalence(Context& ctx, CriterionResult& r) {
  int min_depth = 0, max_depth = 0;
  const bool ok = for_each_fixture_depth(
      ctx, r, 6,
      [](const Fixture& f, const CountTable& table, CriterionResult& rr) {
        const ClosedPointCensus census = closed_point_census(table);
        const TruncatedSeries lhs = zeta_series(table, table.depth());
        const TruncatedSeries rhs =
            euler_product_series(census, table.depth());
        return require(rr, lhs == rhs,
                       f.variety.label() +
                           ": zeta series and Euler product disagree");
      },
      min_depth, max_depth);
  if (!ok) return;
  r.pass = true;
  std::ostringstream detail;
  detail << ctx.cat.size()
         << " fixtures: series == Euler product exactly at depths "
         << min_depth << ".." << max_depth << " (capped 6, budget-limited)";
  r.detail = detail.str();
}

// 3. Moebius inversion of every count table yields non-negative integer
//    closed-point counts.
void criterion_census(Context& ctx, CriterionResult& r) {
  int min_depth = 0, max_depth = 0;
  const bool ok = for_each_fixture_depth(
      ctx, r, 8,
      [](const Fixture& f, const CountTable& table, CriterionResult& rr) {
        const ClosedPointCensus census = closed_point_census(table);
        for (int d = 1; d <= census.depth(); ++d) {
          if (!require(rr, census.at(d) >= 0,
                       f.variety.label() + ": negative closed-point count")) {
            return false;
          }
        }
        return true;
      },
      min_depth, max_depth);
  if (!ok) return;
  r.pass = true;
  std::ostringstream detail;
  detail << ctx.cat.size()
         << " fixtures: every a_d is a non-negative integer at depths "
         << min_depth << ".." << max_depth << " (capped 8, budget-limited)";
  r.detail = detail.str();
}

// 4. Elliptic curves over p in {5,7,11,13}: counts to depth 4 by brute
//    force, trace recurrence reproduces them, numerator reconstructed
//    with both reciprocal roots on |alpha| = sqrt q, Hasse-Weil exact
//    through n = 6 (depths 5..6 from the recurrence verified on 2..4).
void criterion_curves(Context& ctx, CriterionResult& r) {
  const CountOptions opts{kHeavyBudget, 1};
  int checked = 0;
  for (const Fixture& f : ctx.cat) {
    const std::string& label = f.variety.label();
    if (label.rfind("elliptic-", 0) != 0 || !f.smooth) continue;
    const Int q = f.variety.base_field()->cardinality();
    bool in_range = false;
    for (const int p : kCurvePrimes) in_range = in_range || q == p;
    if (!in_range) continue;

    const CountTable t4 = count_table(f.variety, 4, opts);
    const Int trace = q + 1 - t4.at(1);
    const std::vector<Int> recurrence =
        elliptic_counts_from_trace(q, trace, 6);
    for (int n = 1; n <= 4; ++n) {
      std::ostringstream msg;
      msg << label << ": recurrence N_" << n << " = "
          << recurrence[static_cast<std::size_t>(n - 1)].get_str()
          << " differs from the brute-force count "
          << t4.at(n).get_str();
      if (!require(r, recurrence[static_cast<std::size_t>(n - 1)] == t4.at(n),
                   msg.str())) {
        return;
      }
    }

    const RationalFn z = reconstruct_rational(zeta_series(t4, 4), 2, 2);
    const IntPoly expected_den = ipoly({Int(1), -(q + 1), q});
    if (!require(r, z.denominator == expected_den,
                 label + ": denominator is not (1-t)(1-qt)")) {
      return;
    }
    if (!require(r, z.num_degree() == 2 && z.numerator[0] == 1,
                 label + ": numerator is not a degree-2 polynomial with "
                         "constant term 1")) {
      return;
    }
    const RhVerdict rh = rh_roots(z.numerator, q, 1, kTol);
    if (!require(r, rh.pass,
                 label + ": a reciprocal root strays from sqrt q beyond "
                         "1e-9 relative")) {
      return;
    }

    const CountTable t6{t4.q, recurrence};
    for (const HasseWeilCheck& hw : hasse_weil_bound(t6, 1)) {
      std::ostringstream msg;
      msg << label << ": Hasse-Weil violated at n = " << hw.n
          << " (deviation^2 = " << hw.deviation_sq.get_str() << " > "
          << hw.bound_sq.get_str() << ")";
      if (!require(r, hw.pass, msg.str())) return;
    }

    ctx.zetas[label] = z;
    ++checked;
  }
  if (!require(r, checked >= 5, "fewer than 5 elliptic fixtures in range")) {
    return;
  }
  r.pass = true;
  std::ostringstream detail;
  detail << checked
         << " curves: recurrence == brute force N_1..N_4, denominator "
            "(1-t)(1-qt), |alpha| = sqrt q within 1e-9, Hasse-Weil exact "
            "n<=6";
  r.detail = detail.str();
}

// Genus-1 zeta for a diagonal plane cubic: brute force to depth 3, trace
// recurrence (verified on N_2, N_3) supplies N_4, then reconstruct.
std::optional<RationalFn> cubic_zeta(const Fixture& f, CriterionResult& r) {
  const Int q = f.variety.base_field()->cardinality();
  const CountTable t3 =
      count_table(f.variety, 3, CountOptions{kHeavyBudget, 1});
  const Int trace = q + 1 - t3.at(1);
  const std::vector<Int> recurrence = elliptic_counts_from_trace(q, trace, 4);
  for (int n = 2; n <= 3; ++n) {
    std::ostringstream msg;
    msg << f.variety.label() << ": genus-1 recurrence N_" << n
        << " differs from the brute-force count";
    if (!require(r, recurrence[static_cast<std::size_t>(n - 1)] == t3.at(n),
                 msg.str())) {
      return std::nullopt;
    }
  }
  const CountTable t4{t3.q, recurrence};
  return reconstruct_rational(zeta_series(t4, 4), 2, 2);
}

// 5. Functional equation as an exact integer identity: projective spaces
//    (sign (-1)^{d+1}: + in odd dimension, - in even) and all genus-1
//    curve fixtures (chi = 0, sign +, squared identity included).
void criterion_functional_equation(Context& ctx, CriterionResult& r) {
  int spaces = 0;
  for (int d = 1; d <= 3; ++d) {
    for (const int qv : {2, 3, 4, 5}) {
      std::ostringstream label;
      label << "P^" << d << "/F_" << qv;
      const auto it = ctx.zetas.find(label.str());
      if (!require(r, it != ctx.zetas.end(),
                   label.str() +
                       ": no reconstructed zeta (criterion 1 artifact "
                       "missing)")) {
        return;
      }
      const Int q(qv);
      const FunctionalEquationResult fe =
          functional_equation_check(it->second, q, d);
      const auto expected_sign =
          d % 2 == 1 ? FunctionalEquationResult::Sign::kPlus
                     : FunctionalEquationResult::Sign::kMinus;
      if (!require(r, fe.pass && fe.chi == d + 1 && fe.sign == expected_sign,
                   label.str() + ": identity or sign mismatch")) {
        return;
      }
      ++spaces;
    }
  }

  int curves = 0;
  for (const Fixture& f : ctx.cat) {
    if (f.genus != 1 || !f.smooth) continue;
    const std::string& label = f.variety.label();
    auto it = ctx.zetas.find(label);
    if (it == ctx.zetas.end()) {
      const std::optional<RationalFn> z = cubic_zeta(f, r);
      if (!z) return;
      it = ctx.zetas.emplace(label, *z).first;
    }
    const Int q = f.variety.base_field()->cardinality();
    const FunctionalEquationResult fe =
        functional_equation_check(it->second, q, 1);
    if (!require(r,
                 fe.pass && fe.chi == 0 && fe.squared_identity &&
                     fe.sign == FunctionalEquationResult::Sign::kPlus,
                 label + ": curve functional equation failed")) {
      return;
    }
    ++curves;
  }

  r.pass = true;
  std::ostringstream detail;
  detail << spaces << " projective spaces (sign + for odd d, - for even d) "
         << "and " << curves
         << " genus-1 curves (chi = 0, sign +, squared identity): all "
            "exact";
  r.detail = detail.str();
}

// 6. The determinant-vs-trace series identity on random integer
//    matrices: log det(I - tM)^{-1} == sum tr(M^n) t^n / n exactly.
void criterion_charpoly(Context&, CriterionResult& r) {
  std::uint64_t state = 0x5DEECE66DULL;
  for (int trial = 0; trial < 20; ++trial) {
    const int size = 1 + static_cast<int>(lcg_next(state) % 4);
    std::vector<std::vector<Int>> m(static_cast<std::size_t>(size),
                                    std::vector<Int>(
                                        static_cast<std::size_t>(size)));
    for (auto& row : m) {
      for (Int& entry : row) {
        entry = static_cast<long>(lcg_next(state) % 11) - 5;
      }
    }
    const auto [lhs, rhs] = charpoly_series_oracle(m, 10);
    std::ostringstream msg;
    msg << "trial " << trial << " (size " << size
        << "): determinant and trace series disagree";
    if (!require(r, lhs == rhs, msg.str())) return;
  }
  r.pass = true;
  r.detail =
      "20 random matrices (size <= 4, entries in [-5,5]): both series "
      "agree exactly to order 10";
}

// 7. Kloosterman bounds: |K(a)| <= 2 sqrt p for every a over every prime
//    p <= 101, and |K_2(1)| <= 3q for q <= 9.
void criterion_kloosterman(Context&, CriterionResult& r) {
  int sums = 0;
  double worst_margin = 1e300;
  for (std::uint64_t p = 2; p <= 101; ++p) {
    if (!is_prime_u64(p)) continue;
    const FieldCtxPtr ctx = FieldCtx::make(p, 1);
    for (std::uint64_t a = 1; a < p; ++a) {
      const CharacterSumResult res =
          kloosterman(ctx, 1, FieldElement::constant(ctx, a));
      std::ostringstream msg;
      msg << "K(" << a << ") over F_" << p << ": |K| = " << res.magnitude
          << " exceeds 2 sqrt p = " << res.bound;
      if (!require(r, res.pass, msg.str())) return;
      worst_margin = std::min(worst_margin, res.margin);
      ++sums;
    }
  }
  const std::pair<std::uint64_t, int> small_fields[] = {
      {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}};
  for (const auto& [p, k] : small_fields) {
    const FieldCtxPtr ctx = FieldCtx::make(p, k);
    const CharacterSumResult res = kloosterman(ctx, 2);
    std::ostringstream msg;
    msg << "K_2(1) over the field of " << ctx->cardinality().get_str()
        << " elements exceeds 3q";
    if (!require(r, res.pass, msg.str())) return;
    worst_margin = std::min(worst_margin, res.margin);
    ++sums;
  }
  r.pass = true;
  std::ostringstream detail;
  detail << sums << " sums (all a, p <= 101 at n=1; q <= 9 at n=2): all "
         << "bounds hold, smallest margin " << worst_margin;
  r.detail = detail.str();
}

// 8. Exponential sums with nonsingular diagonal-type leading forms stay
//    inside (d-1)^n q^{n/2}; a linear polynomial sums to exactly zero.
void criterion_exponential(Context&, CriterionResult& r) {
  const FieldCtxPtr f3 = FieldCtx::make(3, 1);
  const FieldCtxPtr f5 = FieldCtx::make(5, 1);
  const FieldCtxPtr f7 = FieldCtx::make(7, 1);
  const FieldCtxPtr f13 = FieldCtx::make(13, 1);
  const FieldCtxPtr f25 = FieldCtx::make(5, 2);

  const auto poly = [](const FieldCtxPtr& ctx, int nvars,
                       std::initializer_list<
                           std::pair<std::uint64_t,
                                     std::vector<std::uint32_t>>>
                           terms) {
    MultiPoly f(ctx, nvars);
    for (const auto& [c, e] : terms) {
      f.add_term(e, FieldElement::constant(ctx, c));
    }
    return f;
  };

  const std::vector<std::pair<std::string, MultiPoly>> cases = {
      {"x/F_5", poly(f5, 1, {{1, {1}}})},
      {"x^3/F_5", poly(f5, 1, {{1, {3}}})},
      {"x^2+y^2/F_3", poly(f3, 2, {{1, {2, 0}}, {1, {0, 2}}})},
      {"x^2+y^2/F_5", poly(f5, 2, {{1, {2, 0}}, {1, {0, 2}}})},
      {"x^3+y^3/F_7", poly(f7, 2, {{1, {3, 0}}, {1, {0, 3}}})},
      {"x^2+xy+y^2/F_5",
       poly(f5, 2, {{1, {2, 0}}, {1, {1, 1}}, {1, {0, 2}}})},
      {"x^2+y^2+z^2/F_3",
       poly(f3, 3, {{1, {2, 0, 0}}, {1, {0, 2, 0}}, {1, {0, 0, 2}}})},
      {"x^3+y^3/F_25", poly(f25, 2, {{1, {3, 0}}, {1, {0, 3}}})},
      {"x^4+y^4/F_3", poly(f3, 2, {{1, {4, 0}}, {1, {0, 4}}})},
      {"x^2+3x/F_7", poly(f7, 1, {{1, {2}}, {3, {1}}})},
      {"x^3+x/F_25", poly(f25, 1, {{1, {3}}, {1, {1}}})},
      {"2x^2+3y^2+z^2/F_5",
       poly(f5, 3, {{2, {2, 0, 0}}, {3, {0, 2, 0}}, {1, {0, 0, 2}}})},
      {"x^4+y^4/F_13", poly(f13, 2, {{1, {4, 0}}, {1, {0, 4}}})},
  };

  for (const auto& [name, q_poly] : cases) {
    const CharacterSumResult res = exponential_sum(q_poly);
    if (!require(r, res.applicable, name + ": unexpectedly not applicable")) {
      return;
    }
    if (!require(r, !res.leading_form_suspect,
                 name + ": leading form flagged singular")) {
      return;
    }
    std::ostringstream msg;
    msg << name << ": |S| = " << res.magnitude << " exceeds the bound "
        << res.bound;
    if (!require(r, res.pass, msg.str())) return;
  }
  const CharacterSumResult linear = exponential_sum(cases[0].second);
  if (!require(r, linear.magnitude <= linear.eps_num,
               "linear polynomial: sum is not zero within eps_num")) {
    return;
  }
  r.pass = true;
  std::ostringstream detail;
  detail << cases.size()
         << " polynomials (gcd(d,p)=1, q <= 25): every margin >= -eps_num; "
            "linear sum exactly 0";
  r.detail = detail.str();
}

// 9. Ramanujan tau: tau(1) = 1 and tau(p)^2 <= 4 p^11 exactly for all
//    primes p <= 100.
void criterion_tau(Context&, CriterionResult& r) {
  const TauReport report = ramanujan_tau(100);
  if (!require(r, report.tau.at(0) == 1, "tau(1) != 1")) return;
  if (!require(r, report.primes.size() == 25,
               "expected 25 primes below 100")) {
    return;
  }
  for (const TauPrimeCheck& check : report.primes) {
    std::ostringstream msg;
    msg << "tau(" << check.p << ")^2 = " << check.tau_sq.get_str()
        << " exceeds 4 p^11 = " << check.bound.get_str();
    if (!require(r, check.pass, msg.str())) return;
  }
  r.pass = true;
  r.detail =
      "tau(1) = 1; tau(p)^2 <= 4 p^11 in exact integers for all 25 primes "
      "p <= 100";
}

// 10. Hypersurface point-count deviation: plane cubics over p <= 13 and
//     the diagonal cubic surface over F_7 against b q^{n/2} with the
//     closed-form b.
void criterion_hypersurface(Context& ctx, CriterionResult& r) {
  const CountOptions opts{kDefaultBudget, 1};
  std::vector<std::pair<std::string, int>> targets;
  for (const int p : kCurvePrimes) {
    std::ostringstream label;
    label << "diagonal-cubic/F_" << p;
    targets.emplace_back(label.str(), 1);
  }
  targets.emplace_back("diagonal-cubic-surface/F_7", 2);

  for (const auto& [label, dim] : targets) {
    const Fixture& f = fixture_by_label(ctx.cat, label);
    const Int q = f.variety.base_field()->cardinality();
    const Int n1 = count_points(f.variety, 1, opts);
    const CompleteIntersectionCheck ci =
        complete_intersection_bound(n1, q, dim, f.multidegrees);
    if (!require(r, ci.applicable, label + ": bound not applicable")) return;
    std::ostringstream msg;
    msg << label << ": deviation^2 = " << ci.deviation_sq.get_str()
        << " exceeds b^2 q^n = " << ci.bound_sq.get_str() << " (b = "
        << ci.b.get_str() << ")";
    if (!require(r, ci.pass, msg.str())) return;
  }
  r.pass = true;
  r.detail =
      "plane cubics over p in {5,7,11,13} and the cubic surface over F_7: "
      "|N_1 - #P^n|^2 <= b^2 q^n in exact integers";
}

// 11. Determinism: threaded and sequential counts bit-identical;
//     repeated report builds byte-identical; repeated CLI runs
//     byte-identical when a binary path is supplied.
void criterion_determinism(Context& ctx, CriterionResult& r) {
  const std::pair<std::string, int> count_cases[] = {
      {"elliptic-7a", 2}, {"grassmannian-gr13/F_2", 2},
      {"diagonal-cubic/F_5", 3}};
  for (const auto& [label, n] : count_cases) {
    const Fixture& f = fixture_by_label(ctx.cat, label);
    const Int seq = count_points(f.variety, n, CountOptions{kDefaultBudget, 1});
    const Int par = count_points(f.variety, n, CountOptions{kDefaultBudget, 4});
    std::ostringstream msg;
    msg << label << " N_" << n << ": sequential " << seq.get_str()
        << " != 4-thread " << par.get_str();
    if (!require(r, seq == par, msg.str())) return;
  }

  const Fixture& e5 = fixture_by_label(ctx.cat, "elliptic-5a");
  ReportOptions ropts;
  ropts.depth = 5;
  ropts.num_degree = 2;
  ropts.den_degree = 2;
  ropts.assume_smooth = true;
  RunEcho echo;
  echo.command = "weil-report";
  echo.depth = ropts.depth;
  echo.num_degree = ropts.num_degree;
  echo.den_degree = ropts.den_degree;
  echo.tol = ropts.tol;
  echo.budget = ropts.budget;
  echo.threads = ropts.threads;
  echo.assume_smooth = ropts.assume_smooth;
  const std::string doc1 = report_json(
      echo, build_weil_report(e5.variety, ReportStage::kWeil, ropts));
  const std::string doc2 = report_json(
      echo, build_weil_report(e5.variety, ReportStage::kWeil, ropts));
  if (!require(r, doc1 == doc2,
               "two in-process report builds serialized differently")) {
    return;
  }

  std::string cli_note = "CLI byte-identity skipped (no binary path)";
  if (!ctx.options.cli_path.empty()) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path();
    const fs::path out1 = dir / "weilv-selftest-run1.json";
    const fs::path out2 = dir / "weilv-selftest-run2.json";
    const auto run = [&](const fs::path& out) {
      const std::string cmd = "\"" + ctx.options.cli_path +
                              "\" tau --limit 12 --output \"" +
                              out.string() + "\"";
      return std::system(cmd.c_str());
    };
    const int rc1 = run(out1);
    const int rc2 = run(out2);
    const auto slurp = [](const fs::path& p) {
      std::ifstream in(p, std::ios::binary);
      std::ostringstream buf;
      buf << in.rdbuf();
      return buf.str();
    };
    const std::string body1 = slurp(out1);
    const std::string body2 = slurp(out2);
    fs::remove(out1);
    fs::remove(out2);
    if (!require(r, rc1 == 0 && rc2 == 0, "CLI run exited nonzero")) return;
    if (!require(r, !body1.empty() && body1 == body2,
                 "two CLI runs produced different bytes")) {
      return;
    }
    cli_note = "two CLI runs byte-identical";
  }

  r.pass = true;
  r.detail =
      "counts bit-identical across 1 and 4 threads; repeated report "
      "builds byte-identical; " +
      cli_note;
}

// ---- driver -----------------------------------------------------------------------

struct Criterion {
  int index;
  const char* name;
  double window_seconds;  // 0 = no runtime requirement
  void (*body)(Context&, CriterionResult&);
};

const Criterion kCriteria[] = {
    {1, "projective space closed forms", 60.0, criterion_projective},
    {2, "zeta series equals Euler product", 0.0, criterion_equivalence},
    {3, "closed point census integrality", 0.0, criterion_census},
    {4, "elliptic curve suite", 120.0, criterion_curves},
    {5, "functional equation", 0.0, criterion_functional_equation},
    {6, "characteristic series oracle", 0.0, criterion_charpoly},
    {7, "kloosterman bounds", 30.0, criterion_kloosterman},
    {8, "exponential sum bounds", 0.0, criterion_exponential},
    {9, "ramanujan tau bounds", 10.0, criterion_tau},
    {10, "hypersurface point-count deviation", 0.0, criterion_hypersurface},
    {11, "determinism and parallel equivalence", 0.0,
     criterion_determinism},
};

}  // namespace

std::vector<CriterionResult> run_selftest(std::ostream& out,
                                          const SelftestOptions& options) {
  Context ctx;
  ctx.options = options;
  std::vector<CriterionResult> results;
  for (const Criterion& c : kCriteria) {
    CriterionResult r;
    r.index = c.index;
    r.name = c.name;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(ctx, r);
    } catch (const std::exception& e) {
      r.pass = false;
      if (r.detail.empty()) r.detail = std::string("exception: ") + e.what();
    }
    r.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      start)
            .count();
    if (r.pass && c.window_seconds > 0.0 && r.seconds >= c.window_seconds) {
      r.pass = false;
      std::ostringstream msg;
      msg << r.detail << "; exceeded the " << c.window_seconds
          << " s runtime window";
      r.detail = msg.str();
    }
    std::ostringstream line;
    line << "criterion " << (r.index < 10 ? " " : "") << r.index << " ["
         << (r.pass ? "pass" : "FAIL") << "] " << r.name << ": " << r.detail;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << r.seconds << " s)";
    out << line.str() << "\n" << std::flush;
    results.push_back(std::move(r));
  }
  int passed = 0;
  for (const CriterionResult& r : results) passed += r.pass ? 1 : 0;
  out << "selftest: " << passed << "/" << results.size()
      << " criteria passed\n";
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const CriterionResult& r : results) {
    if (!r.pass) return false;
  }
  return !results.empty();
}

}  // namespace weilv
