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

// The full verification pipeline for a single variety: count, invert to
// closed points, expand the zeta series, reconstruct the rational form,
// and run every conjecture check that applies. The result is a WeilReport
// in which every check carries an explicit verdict and witness.

#ifndef WEILV_REPORT_HPP_
#define WEILV_REPORT_HPP_

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weilv/common.hpp"
#include "weilv/counting.hpp"
#include "weilv/weil.hpp"
#include "weilv/zeta.hpp"

namespace weilv {

// Every check reports one of these; there are no silent outcomes.
// kInconclusive means the check ran but could not decide (for example a
// rationality scan whose degree window was too small); it is treated as
// a failure by the exit-code contract, never as a pass.
enum class Verdict { kPass, kFail, kNotApplicable, kInconclusive };

std::string_view verdict_name(Verdict v);

// How far to take the pipeline.
enum class ReportStage { kCount, kZeta, kWeil };

struct ReportOptions {
  int depth = 4;
  // Reconstruction degrees; when absent a Hankel scan discovers them
  // within the window w = (depth - 1) / 3.
  std::optional<int> num_degree;
  std::optional<int> den_degree;
  double tol = 1e-9;
  std::uint64_t budget = kDefaultBudget;
  int threads = 1;
  // Author-asserted smoothness. The Riemann-hypothesis and
  // complete-intersection checks hypothesize a smooth projective
  // variety; without the assertion they report not-applicable.
  bool assume_smooth = false;
};

// A named exact bound check with a human-readable witness.
struct BoundCheckRow {
  std::string name;
  Verdict verdict = Verdict::kNotApplicable;
  std::string witness;
};

// One reciprocal root with its inferred weight.
struct RootRow {
  std::complex<double> alpha;
  double abs_value = 0.0;
  int weight = 0;
  double deviation = 0.0;
  bool from_denominator = false;
  int multiplicity = 1;
};

struct WeilReport {
  // Identity of the input.
  std::string label;
  Int q;
  bool projective = false;
  int ambient_dim = 0;
  int equation_count = 0;
  // dim(ambient) - #equations; correct when the variety is a complete
  // intersection (recorded under assumptions).
  int dimension = 0;
  ReportStage stage = ReportStage::kWeil;

  // Counting stage.
  CountTable counts;
  ClosedPointCensus census;
  Verdict census_integrality = Verdict::kNotApplicable;
  std::string census_note;

  // Zeta stage.
  std::vector<Rat> series;  // coefficients 0 .. depth
  Verdict definition_equivalence = Verdict::kNotApplicable;
  Verdict rationality = Verdict::kNotApplicable;
  std::string rationality_note;
  int num_degree = -1;
  int den_degree = -1;
  Verdict integrality = Verdict::kNotApplicable;
  std::string integrality_note;
  bool has_zeta = false;
  RationalFn zeta;

  // Weil stage.
  Verdict functional_equation = Verdict::kNotApplicable;
  std::string fe_sign;  // "+", "-", "undetermined-by-squaring", ""
  int chi = 0;
  std::string fe_note;
  Verdict riemann_hypothesis = Verdict::kNotApplicable;
  std::string rh_note;
  Verdict weights = Verdict::kNotApplicable;
  std::string weights_note;
  std::vector<RootRow> roots;
  std::map<int, int> betti;  // inferred from the weight separation
  int betti_alternating_sum = 0;
  bool is_curve = false;
  int genus = -1;
  std::vector<BoundCheckRow> bounds;
  std::vector<std::string> assumptions;

  // True when any verdict anywhere is kFail or kInconclusive.
  bool any_failure = false;
};

// Runs the pipeline up to `stage`. Throws BudgetError/UsageError for
// resource and usage problems (an unusable run); check outcomes, however
// negative, are reported in the returned WeilReport, not thrown.
WeilReport build_weil_report(const VarietySpec& variety, ReportStage stage,
                             const ReportOptions& options = {});

}  // namespace weilv

#endif  // WEILV_REPORT_HPP_
