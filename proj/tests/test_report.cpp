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

#include "weilv/report.hpp"

#include <doctest.h>

#include <string>

#include "weilv/common.hpp"
#include "weilv/counting.hpp"
#include "weilv/fixtures.hpp"

using weilv::BudgetError;
using weilv::Fixture;
using weilv::Int;
using weilv::ReportOptions;
using weilv::ReportStage;
using weilv::UsageError;
using weilv::Verdict;
using weilv::WeilReport;

namespace {

const Fixture& fixture(const std::string& label) {
  static const auto cat = weilv::catalog();
  return weilv::fixture_by_label(cat, label);
}

}  // namespace

TEST_CASE("build_weil_report validates its options") {
  const auto& f = fixture("P^1/F_2");
  ReportOptions opts;

  opts.depth = 0;
  CHECK_THROWS_AS(
      weilv::build_weil_report(f.variety, ReportStage::kCount, opts),
      UsageError);

  opts = {};
  opts.tol = 0.0;
  CHECK_THROWS_AS(
      weilv::build_weil_report(f.variety, ReportStage::kCount, opts),
      UsageError);

  opts = {};
  opts.budget = 0;
  CHECK_THROWS_AS(
      weilv::build_weil_report(f.variety, ReportStage::kCount, opts),
      UsageError);

  opts = {};
  opts.threads = 0;
  CHECK_THROWS_AS(
      weilv::build_weil_report(f.variety, ReportStage::kCount, opts),
      UsageError);

  opts = {};
  opts.num_degree = 2;  // without den_degree
  CHECK_THROWS_AS(
      weilv::build_weil_report(f.variety, ReportStage::kZeta, opts),
      UsageError);

  opts = {};
  opts.num_degree = -1;
  opts.den_degree = 2;
  CHECK_THROWS_AS(
      weilv::build_weil_report(f.variety, ReportStage::kZeta, opts),
      UsageError);
}

TEST_CASE("build_weil_report propagates budget exhaustion") {
  const auto& f = fixture("elliptic-5a");
  ReportOptions opts;
  opts.depth = 9;
  opts.budget = 100;
  CHECK_THROWS_AS(
      weilv::build_weil_report(f.variety, ReportStage::kCount, opts),
      BudgetError);
}

TEST_CASE("count stage fills counts and census and stops there") {
  const auto& f = fixture("P^2/F_2");
  ReportOptions opts;
  opts.depth = 3;
  const WeilReport rep =
      weilv::build_weil_report(f.variety, ReportStage::kCount, opts);

  CHECK(rep.stage == ReportStage::kCount);
  CHECK(rep.label == "P^2/F_2");
  CHECK(rep.q == 2);
  CHECK(rep.projective);
  CHECK(rep.ambient_dim == 2);
  CHECK(rep.equation_count == 0);
  CHECK(rep.dimension == 2);
  REQUIRE(rep.counts.depth() == 3);
  CHECK(rep.counts.at(1) == 7);
  CHECK(rep.counts.at(2) == 21);
  CHECK(rep.counts.at(3) == 73);
  CHECK(rep.census_integrality == Verdict::kPass);
  CHECK_FALSE(rep.has_zeta);
  CHECK(rep.series.empty());
  CHECK_FALSE(rep.any_failure);
}

TEST_CASE("zeta stage scans degrees within the discovery window") {
  const auto& f = fixture("P^1/F_2");

  ReportOptions opts;
  opts.depth = 7;  // window (7-1)/3 = 2 covers the true degrees (0, 2)
  WeilReport rep =
      weilv::build_weil_report(f.variety, ReportStage::kZeta, opts);
  CHECK(rep.stage == ReportStage::kZeta);
  CHECK(rep.definition_equivalence == Verdict::kPass);
  CHECK(rep.rationality == Verdict::kPass);
  CHECK(rep.integrality == Verdict::kPass);
  CHECK(rep.num_degree == 0);
  CHECK(rep.den_degree == 2);
  REQUIRE(rep.has_zeta);
  CHECK(rep.zeta.denominator.degree() == 2);
  CHECK(rep.zeta.denominator[1] == -3);
  CHECK(rep.zeta.denominator[2] == 2);
  CHECK_FALSE(rep.any_failure);

  opts.depth = 4;  // window 1 cannot reach den_degree 2
  rep = weilv::build_weil_report(f.variety, ReportStage::kZeta, opts);
  CHECK(rep.rationality == Verdict::kInconclusive);
  CHECK(rep.rationality_note.find("raise --depth") != std::string::npos);
  CHECK_FALSE(rep.has_zeta);
  CHECK(rep.any_failure);  // inconclusive is never a silent pass
}

TEST_CASE("zeta stage honors explicit degrees at lower depth") {
  const auto& f = fixture("P^2/F_2");
  ReportOptions opts;
  opts.depth = 3;  // order 3 >= dN + dD = 0 + 3
  opts.num_degree = 0;
  opts.den_degree = 3;
  const WeilReport rep =
      weilv::build_weil_report(f.variety, ReportStage::kZeta, opts);
  CHECK(rep.rationality == Verdict::kPass);
  REQUIRE(rep.has_zeta);
  // (1-t)(1-2t)(1-4t) = 1 - 7t + 14t^2 - 8t^3
  CHECK(rep.zeta.denominator[1] == -7);
  CHECK(rep.zeta.denominator[2] == 14);
  CHECK(rep.zeta.denominator[3] == -8);
  CHECK_FALSE(rep.any_failure);
}

TEST_CASE("weil stage verifies the functional equation and curve checks") {
  const auto& f = fixture("elliptic-7a");
  ReportOptions opts;
  opts.depth = 4;
  opts.num_degree = 2;
  opts.den_degree = 2;
  opts.assume_smooth = true;
  const WeilReport rep =
      weilv::build_weil_report(f.variety, ReportStage::kWeil, opts);

  CHECK(rep.stage == ReportStage::kWeil);
  CHECK(rep.functional_equation == Verdict::kPass);
  CHECK(rep.fe_sign == "+");
  CHECK(rep.chi == 0);
  CHECK(rep.is_curve);
  CHECK(rep.genus == 1);
  CHECK(rep.riemann_hypothesis == Verdict::kPass);
  CHECK(rep.weights == Verdict::kPass);
  REQUIRE(rep.roots.size() == 4);  // numerator pair + (1-t)(1-qt)
  int numerator_rows = 0;
  for (const auto& root : rep.roots) {
    CHECK(root.deviation <= 1e-9);
    if (!root.from_denominator) {
      CHECK(root.weight == 1);
      ++numerator_rows;
    }
  }
  CHECK(numerator_rows == 2);
  CHECK(rep.betti_alternating_sum == rep.chi);
  // hasse-weil n=1..4 plus the point-count-deviation row
  CHECK(rep.bounds.size() == 5);
  for (const auto& row : rep.bounds) CHECK(row.verdict == Verdict::kPass);
  CHECK_FALSE(rep.any_failure);
}

TEST_CASE("weil stage on projective space reports the etale-style betti") {
  const auto& f = fixture("P^2/F_3");
  ReportOptions opts;
  opts.depth = 9;  // window 2; P^2 needs (0, 3): give explicit degrees
  opts.num_degree = 0;
  opts.den_degree = 3;
  opts.budget = std::uint64_t{1} << 30;
  opts.assume_smooth = true;
  const WeilReport rep =
      weilv::build_weil_report(f.variety, ReportStage::kWeil, opts);
  CHECK(rep.functional_equation == Verdict::kPass);
  CHECK(rep.fe_sign == "-");  // even dimension
  CHECK(rep.chi == 3);
  CHECK_FALSE(rep.is_curve);
  CHECK(rep.weights == Verdict::kPass);
  CHECK(rep.riemann_hypothesis == Verdict::kPass);  // mirrors weights
  REQUIRE(rep.betti.size() == 3);
  CHECK(rep.betti.at(0) == 1);
  CHECK(rep.betti.at(2) == 1);
  CHECK(rep.betti.at(4) == 1);
  CHECK(rep.betti_alternating_sum == 3);
  CHECK_FALSE(rep.any_failure);
}

TEST_CASE("weil stage without an assumed smooth model withholds RH") {
  const auto& f = fixture("elliptic-2a");
  ReportOptions opts;
  opts.depth = 4;
  opts.num_degree = 2;
  opts.den_degree = 2;
  opts.assume_smooth = false;
  const WeilReport rep =
      weilv::build_weil_report(f.variety, ReportStage::kWeil, opts);
  CHECK(rep.riemann_hypothesis == Verdict::kNotApplicable);
  CHECK(rep.rh_note.find("smoothness not asserted") != std::string::npos);
  CHECK(rep.functional_equation == Verdict::kPass);
  bool saw_na = false;
  for (const auto& row : rep.bounds) {
    if (row.name == "point-count-deviation") {
      saw_na = row.verdict == Verdict::kNotApplicable;
    }
  }
  CHECK(saw_na);
  CHECK_FALSE(rep.any_failure);
}

TEST_CASE("weil stage with no zeta keeps downstream checks not-applicable") {
  const auto& f = fixture("elliptic-5b");
  ReportOptions opts;
  opts.depth = 4;  // discovery window 1 cannot reach (2, 2)
  const WeilReport rep =
      weilv::build_weil_report(f.variety, ReportStage::kWeil, opts);
  CHECK(rep.rationality == Verdict::kInconclusive);
  CHECK_FALSE(rep.has_zeta);
  CHECK(rep.functional_equation == Verdict::kNotApplicable);
  CHECK(rep.riemann_hypothesis == Verdict::kNotApplicable);
  CHECK(rep.weights == Verdict::kNotApplicable);
  CHECK(rep.fe_note == "no reconstructed zeta function");
  CHECK(rep.any_failure);
}

TEST_CASE("assumptions record the smoothness and dimension conventions") {
  const auto& f = fixture("P^1/F_2");
  ReportOptions opts;
  opts.depth = 2;
  WeilReport rep =
      weilv::build_weil_report(f.variety, ReportStage::kCount, opts);
  bool mentions_smooth = false;
  for (const auto& line : rep.assumptions) {
    if (line.find("smooth") != std::string::npos) mentions_smooth = true;
  }
  CHECK(mentions_smooth);

  opts.assume_smooth = true;
  rep = weilv::build_weil_report(f.variety, ReportStage::kCount, opts);
  bool asserted = false;
  for (const auto& line : rep.assumptions) {
    if (line.find("asserted") != std::string::npos) asserted = true;
  }
  CHECK(asserted);
}
