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

#include <algorithm>
#include <sstream>
#include <utility>

namespace weilv {
namespace {

bool counts_as_failure(Verdict v) {
  return v == Verdict::kFail || v == Verdict::kInconclusive;
}

std::string int_str(const Int& v) { return v.get_str(); }

void add_bound_row(WeilReport& rep, std::string name, Verdict verdict,
                   std::string witness) {
  rep.bounds.push_back({std::move(name), verdict, std::move(witness)});
}

void run_curve_bounds(WeilReport& rep) {
  const std::vector<HasseWeilCheck> checks =
      hasse_weil_bound(rep.counts, rep.genus);
  for (const HasseWeilCheck& hw : checks) {
    std::ostringstream name;
    name << "hasse-weil n=" << hw.n;
    std::ostringstream witness;
    witness << "deviation^2 = " << int_str(hw.deviation_sq)
            << (hw.pass ? " <= " : " > ") << int_str(hw.bound_sq)
            << " = (2g)^2 q^n with g = " << rep.genus;
    add_bound_row(rep, name.str(), hw.pass ? Verdict::kPass : Verdict::kFail,
                  witness.str());
  }
}

void run_hypersurface_bound(WeilReport& rep, const VarietySpec& variety,
                            bool assume_smooth) {
  if (!rep.projective || rep.equation_count != 1) return;
  static const char* kName = "point-count-deviation";
  if (!assume_smooth) {
    add_bound_row(rep, kName, Verdict::kNotApplicable,
                  "smoothness not asserted: the bound hypothesizes a "
                  "nonsingular complete intersection");
    return;
  }
  const int d = variety.equations().front().total_degree();
  const CompleteIntersectionCheck ci = complete_intersection_bound(
      rep.counts.at(1), rep.q, rep.dimension, {d});
  if (!ci.applicable) {
    add_bound_row(rep, kName, Verdict::kNotApplicable,
                  "no closed-form b for this presentation");
    return;
  }
  std::ostringstream witness;
  witness << "|N_1 - #P^" << rep.dimension << "| = |" << int_str(ci.deviation)
          << "|, deviation^2 = " << int_str(ci.deviation_sq)
          << (ci.pass ? " <= " : " > ") << int_str(ci.bound_sq)
          << " = b^2 q^n with b = " << int_str(ci.b) << ", d = " << d;
  add_bound_row(rep, kName, ci.pass ? Verdict::kPass : Verdict::kFail,
                witness.str());
}

void finalize(WeilReport& rep) {
  bool fail = counts_as_failure(rep.census_integrality) ||
              counts_as_failure(rep.definition_equivalence) ||
              counts_as_failure(rep.rationality) ||
              counts_as_failure(rep.integrality) ||
              counts_as_failure(rep.functional_equation) ||
              counts_as_failure(rep.riemann_hypothesis) ||
              counts_as_failure(rep.weights);
  for (const BoundCheckRow& row : rep.bounds) {
    fail = fail || counts_as_failure(row.verdict);
  }
  rep.any_failure = fail;
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kNotApplicable:
      return "not-applicable";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

WeilReport build_weil_report(const VarietySpec& variety, ReportStage stage,
                             const ReportOptions& options) {
  if (options.depth < 1) {
    throw UsageError("build_weil_report: depth must be at least 1");
  }
  if (!(options.tol > 0.0)) {
    throw UsageError("build_weil_report: tol must be positive");
  }
  if (options.budget < 1) {
    throw UsageError("build_weil_report: budget must be at least 1");
  }
  if (options.threads < 1) {
    throw UsageError("build_weil_report: threads must be at least 1");
  }
  if (options.num_degree.has_value() != options.den_degree.has_value()) {
    throw UsageError(
        "build_weil_report: supply both reconstruction degrees or neither");
  }

  WeilReport rep;
  rep.label = variety.label();
  rep.q = variety.base_field()->cardinality();
  rep.projective = variety.ambient().kind == AmbientKind::kProjective;
  rep.ambient_dim = variety.ambient().dim;
  rep.equation_count = static_cast<int>(variety.equations().size());
  rep.dimension = std::max(0, rep.ambient_dim - rep.equation_count);
  rep.stage = stage;
  {
    std::ostringstream note;
    note << "dimension " << rep.dimension
         << " inferred as ambient dimension minus the number of equations "
            "(complete-intersection convention)";
    rep.assumptions.push_back(note.str());
  }
  rep.assumptions.push_back(
      options.assume_smooth
          ? "smoothness asserted by the caller, not verified algorithmically"
          : "smoothness not asserted: checks that hypothesize a smooth "
            "projective variety report not-applicable");

  // ---- counting stage -----------------------------------------------------------
  const CountOptions count_opts{options.budget, options.threads};
  rep.counts = count_table(variety, options.depth, count_opts);
  try {
    rep.census = closed_point_census(rep.counts);
    rep.census_integrality = Verdict::kPass;
  } catch (const CheckFailure& e) {
    rep.census_integrality = Verdict::kFail;
    rep.census_note = e.what();
  }
  if (stage == ReportStage::kCount) {
    finalize(rep);
    return rep;
  }

  // ---- zeta stage ------------------------------------------------------------------
  const TruncatedSeries series = zeta_series(rep.counts, options.depth);
  rep.series = series.coeffs();
  if (rep.census_integrality == Verdict::kPass) {
    const TruncatedSeries euler =
        euler_product_series(rep.census, options.depth);
    rep.definition_equivalence =
        series == euler ? Verdict::kPass : Verdict::kFail;
  }

  int want_num = -1;
  int want_den = -1;
  if (options.num_degree) {
    want_num = *options.num_degree;
    want_den = *options.den_degree;
    if (want_num < 0 || want_den < 0) {
      throw UsageError("build_weil_report: degrees must be non-negative");
    }
  } else {
    const int window = (options.depth - 1) / 3;
    if (window < 1) {
      rep.rationality = Verdict::kInconclusive;
      rep.rationality_note =
          "depth leaves no admissible degree window for the rationality "
          "scan; raise --depth to 4 or more, or supply degrees";
    } else {
      const RationalityVerdict scan =
          hankel_rationality(series, window, window);
      if (scan.rational) {
        want_num = scan.num_degree;
        want_den = scan.den_degree;
      } else {
        std::ostringstream note;
        note << "no rational function with degrees up to (" << window << ", "
             << window
             << ") matches the series; not evidence of irrationality — "
                "raise --depth or supply degrees";
        rep.rationality = Verdict::kInconclusive;
        rep.rationality_note = note.str();
      }
    }
  }

  if (want_num >= 0) {
    try {
      rep.zeta = reconstruct_rational(series, want_num, want_den);
      rep.has_zeta = true;
      rep.rationality = Verdict::kPass;
      rep.num_degree = rep.zeta.num_degree();
      rep.den_degree = rep.zeta.den_degree();
      rep.integrality = Verdict::kPass;
    } catch (const IntegralityError& e) {
      // A rational fit of these degrees exists over Q but is not an
      // integer zeta function — rationality holds, integrality fails.
      rep.rationality = Verdict::kPass;
      rep.num_degree = want_num;
      rep.den_degree = want_den;
      rep.integrality = Verdict::kFail;
      rep.integrality_note = e.what();
    } catch (const CheckFailure& e) {
      std::ostringstream note;
      note << "no rational function of degrees (" << want_num << ", "
           << want_den << ") matches the series: " << e.what();
      rep.rationality = Verdict::kFail;
      rep.rationality_note = note.str();
    }
  }

  if (stage == ReportStage::kZeta) {
    finalize(rep);
    return rep;
  }

  // ---- weil stage -------------------------------------------------------------------
  std::optional<CurveZeta> curve;
  if (rep.has_zeta) {
    const FunctionalEquationResult fe =
        functional_equation_check(rep.zeta, rep.q, rep.dimension);
    rep.chi = fe.chi;
    rep.functional_equation = fe.pass ? Verdict::kPass : Verdict::kFail;
    switch (fe.sign) {
      case FunctionalEquationResult::Sign::kPlus:
        rep.fe_sign = "+";
        break;
      case FunctionalEquationResult::Sign::kMinus:
        rep.fe_sign = "-";
        break;
      case FunctionalEquationResult::Sign::kUndetermined:
        rep.fe_sign = fe.pass ? "undetermined-by-squaring" : "";
        break;
    }
    if (fe.squared_only) {
      rep.fe_note =
          "d*chi is odd, so the identity was verified in squared form";
    }

    try {
      curve = curve_analysis(rep.zeta, rep.q);
      rep.is_curve = true;
      rep.genus = curve->genus;
    } catch (const CheckFailure&) {
      rep.is_curve = false;
    }

    const WeightSeparation ws =
        weight_separation(rep.zeta, rep.q, options.tol);
    for (const WeightSeparation::Entry& entry : ws.entries) {
      rep.roots.push_back({entry.alpha, std::abs(entry.alpha), entry.weight,
                           entry.deviation, entry.from_denominator,
                           entry.multiplicity});
    }
    rep.betti = ws.betti;
    rep.betti_alternating_sum = ws.alternating_sum;
    if (ws.pass) {
      rep.weights = Verdict::kPass;
    } else if (ws.inconclusive) {
      rep.weights = Verdict::kInconclusive;
      rep.weights_note =
          "a reciprocal root admits more than one weight within tol";
    } else {
      rep.weights = Verdict::kFail;
      rep.weights_note =
          "a reciprocal root misses every admissible weight, or a weight "
          "lands on the wrong side of the numerator/denominator parity";
    }

    if (!options.assume_smooth) {
      rep.riemann_hypothesis = Verdict::kNotApplicable;
      rep.rh_note =
          "smoothness not asserted: hypothesis not verified, magnitudes "
          "reported under weights only";
    } else if (rep.is_curve) {
      const RhVerdict rh = rh_roots(curve->p1, rep.q, 1, options.tol);
      rep.riemann_hypothesis = rh.pass ? Verdict::kPass : Verdict::kFail;
      rep.rh_note =
          "all reciprocal roots of the curve numerator measured against "
          "sqrt(q)";
    } else {
      rep.riemann_hypothesis = rep.weights;
      rep.rh_note =
          "purity taken from the weight separation of the reconstructed "
          "factors";
    }
  } else {
    rep.functional_equation = Verdict::kNotApplicable;
    rep.riemann_hypothesis = Verdict::kNotApplicable;
    rep.weights = Verdict::kNotApplicable;
    rep.fe_note = rep.rh_note = rep.weights_note =
        "no reconstructed zeta function";
  }

  if (rep.is_curve && rep.genus >= 0) run_curve_bounds(rep);
  run_hypersurface_bound(rep, variety, options.assume_smooth);

  finalize(rep);
  return rep;
}

}  // namespace weilv
