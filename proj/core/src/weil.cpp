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

#include "weilv/weil.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <utility>

namespace weilv {
namespace {

// Coefficient i of the result is p[deg - i] * c^i: the reversal of p with
// t substituted by c*t. For p with constant term 1 the result is monic
// in spirit (top coefficient 1 * c^deg before reversal bookkeeping).
IntPoly reverse_and_substitute(const IntPoly& p, const Int& c) {
  const int dp = p.degree();
  if (dp < 0) return IntPoly();
  std::vector<Int> out(static_cast<std::size_t>(dp) + 1);
  Int power = 1;
  for (int i = 0; i <= dp; ++i) {
    out[static_cast<std::size_t>(i)] = p[dp - i] * power;
    power *= c;
  }
  return IntPoly(std::move(out));
}

RatPoly rp_derivative(const RatPoly& a) {
  const int da = a.degree();
  if (da <= 0) return RatPoly();
  std::vector<Rat> c(static_cast<std::size_t>(da));
  for (int i = 1; i <= da; ++i) {
    c[static_cast<std::size_t>(i - 1)] = a[i] * Rat(i);
  }
  return RatPoly(std::move(c));
}

RatPoly rp_monic(const RatPoly& a) {
  const Rat lead = a[a.degree()];
  const Rat inv = Rat(1) / lead;
  return a.scaled(inv);
}

RatPoly rp_divexact(const RatPoly& a, const RatPoly& b) {
  auto [quot, rem] = a.divmod(b);
  if (!rem.is_zero()) {
    throw CheckFailure(
        "square-free decomposition: division left a remainder (internal "
        "error)");
  }
  return quot;
}

// Yun's algorithm over Q[t]: writes the monic normalisation of a as
// prod_i S_i^i with the S_i square-free, monic and pairwise coprime.
// Exact arithmetic throughout, so the numerical root finder downstream
// only ever deals with simple roots.
std::vector<std::pair<RatPoly, int>> square_free_decomposition(RatPoly a) {
  std::vector<std::pair<RatPoly, int>> out;
  if (a.degree() <= 0) return out;
  a = rp_monic(a);
  const RatPoly da = rp_derivative(a);
  const RatPoly g = rat_poly_gcd(a, da);
  if (g.degree() == 0) {
    out.emplace_back(a, 1);
    return out;
  }
  RatPoly b = rp_divexact(a, g);
  RatPoly d = rp_divexact(da, g) - rp_derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    const RatPoly s = rat_poly_gcd(b, d);
    if (s.degree() > 0) out.emplace_back(s, i);
    b = rp_divexact(b, s);
    d = rp_divexact(d, s) - rp_derivative(b);
  }
  return out;
}

constexpr int kRootIterationCap = 1000;
constexpr double kRootConvergence = 1e-13;
constexpr double kRootProductTolerance = 1e-9;

// Simultaneous (Durand-Kerner) iteration on a monic polynomial given by
// its non-leading coefficients c_0..c_{n-1}. Deterministic: fixed spiral
// start, fixed update order.
std::vector<std::complex<double>> durand_kerner(
    const std::vector<double>& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
  const std::complex<double> seed(0.4, 0.9);
  std::complex<double> w = seed;
  for (int j = 0; j < n; ++j) {
    z[static_cast<std::size_t>(j)] = w;
    w *= seed;
  }
  double last_step = 0.0;
  for (int iter = 0; iter < kRootIterationCap; ++iter) {
    double max_step = 0.0;
    for (int j = 0; j < n; ++j) {
      std::complex<double> f(1.0, 0.0);
      for (int i = n - 1; i >= 0; --i) {
        f = f * z[static_cast<std::size_t>(j)] +
            coeffs[static_cast<std::size_t>(i)];
      }
      std::complex<double> den(1.0, 0.0);
      for (int k = 0; k < n; ++k) {
        if (k != j) {
          den *= z[static_cast<std::size_t>(j)] - z[static_cast<std::size_t>(k)];
        }
      }
      if (den == std::complex<double>(0.0, 0.0)) {
        // Two iterates collided; nudge deterministically and carry on.
        z[static_cast<std::size_t>(j)] += std::complex<double>(1e-8, 1e-8);
        max_step = 1.0;
        continue;
      }
      const std::complex<double> delta = f / den;
      z[static_cast<std::size_t>(j)] -= delta;
      const double scale =
          std::max(1.0, std::abs(z[static_cast<std::size_t>(j)]));
      max_step = std::max(max_step, std::abs(delta) / scale);
    }
    if (max_step <= kRootConvergence) return z;
    last_step = max_step;
  }
  std::ostringstream msg;
  msg << "root refinement did not converge within " << kRootIterationCap
      << " iterations (last relative step " << last_step << ")";
  throw NumericalFailure(msg.str());
}

double weight_target(double q, long weight) {
  return std::pow(q, static_cast<double>(weight) / 2.0);
}

}  // namespace

// ---- functional equation -----------------------------------------------------

FunctionalEquationResult functional_equation_check(const RationalFn& zeta,
                                                   const Int& q, int d) {
  if (q < 2) {
    throw UsageError("functional_equation_check: q must be at least 2");
  }
  if (d < 0) {
    throw UsageError("functional_equation_check: negative dimension");
  }
  const IntPoly& num = zeta.numerator;
  const IntPoly& den = zeta.denominator;
  if (num.is_zero() || den.is_zero()) {
    throw UsageError(
        "functional_equation_check: numerator and denominator must be "
        "nonzero");
  }

  FunctionalEquationResult res;
  res.chi = den.degree() - num.degree();
  const long dchi = static_cast<long>(d) * res.chi;

  // Z(1/(q^d t)) = (q^d t)^chi rev(P)(q^d t) / rev(Q)(q^d t), so with
  //   A = rev(P)(q^d t) Q(t),  B = rev(Q)(q^d t) P(t),
  // the functional equation is the polynomial identity
  //   q^{d chi} A = +- q^{d chi / 2} B.
  const Int qd = int_pow(q, static_cast<unsigned long>(d));
  const IntPoly a = reverse_and_substitute(num, qd) * den;
  const IntPoly b = reverse_and_substitute(den, qd) * num;

  // The squared identity q^{d chi} A^2 = B^2 has no sign and is always
  // integral; evaluate it unconditionally.
  {
    const IntPoly a2 = a * a;
    const IntPoly b2 = b * b;
    if (dchi >= 0) {
      res.squared_identity =
          a2.scaled(int_pow(q, static_cast<unsigned long>(dchi))) == b2;
    } else {
      res.squared_identity =
          a2 == b2.scaled(int_pow(q, static_cast<unsigned long>(-dchi)));
    }
  }

  if (dchi % 2 == 0) {
    const long e = dchi / 2;
    const IntPoly lhs =
        e >= 0 ? a.scaled(int_pow(q, static_cast<unsigned long>(e))) : a;
    const IntPoly rhs =
        e >= 0 ? b : b.scaled(int_pow(q, static_cast<unsigned long>(-e)));
    if (lhs == rhs) {
      res.pass = true;
      res.sign = FunctionalEquationResult::Sign::kPlus;
    } else if (lhs == -rhs) {
      res.pass = true;
      res.sign = FunctionalEquationResult::Sign::kMinus;
    }
  } else {
    // q^{d chi / 2} is irrational: only the squared identity is exact.
    res.squared_only = true;
    res.pass = res.squared_identity;
  }
  return res;
}

// ---- curve form ---------------------------------------------------------------

CurveZeta curve_analysis(const RationalFn& zeta, const Int& q) {
  if (q < 2) throw UsageError("curve_analysis: q must be at least 2");
  const IntPoly expected(std::vector<Int>{Int(1), -(q + 1), q});
  if (!(zeta.denominator == expected)) {
    throw CheckFailure(
        "curve_analysis: denominator is not (1-t)(1-qt); the input is not "
        "the zeta function of a smooth projective curve");
  }
  const int dp = zeta.numerator.degree();
  if (dp < 0 || dp % 2 != 0) {
    std::ostringstream msg;
    msg << "curve_analysis: numerator degree " << dp
        << " is not of the form 2g";
    throw CheckFailure(msg.str());
  }
  CurveZeta out;
  out.genus = dp / 2;
  out.p1 = zeta.numerator;
  return out;
}

// ---- reciprocal roots ----------------------------------------------------------

std::vector<ReciprocalRoot> reciprocal_roots(const IntPoly& p) {
  if (p.is_zero()) {
    throw UsageError("reciprocal_roots: zero polynomial");
  }
  if (p[0] != 1) {
    throw DomainError("reciprocal_roots: constant term must be 1");
  }
  const int dp = p.degree();
  std::vector<ReciprocalRoot> out;
  if (dp == 0) return out;

  // The reversal of p is monic of degree dp (constant term 1 becomes the
  // top coefficient) and its roots are exactly the reciprocal roots of p.
  std::vector<Rat> rev(static_cast<std::size_t>(dp) + 1);
  for (int i = 0; i <= dp; ++i) {
    rev[static_cast<std::size_t>(i)] = Rat(p[dp - i]);
  }
  const RatPoly reversed(std::move(rev));

  for (const auto& [factor, mult] : square_free_decomposition(reversed)) {
    const int df = factor.degree();
    std::vector<double> coeffs(static_cast<std::size_t>(df));
    for (int i = 0; i < df; ++i) {
      coeffs[static_cast<std::size_t>(i)] = factor[i].get_d();
    }
    for (const auto& root : durand_kerner(coeffs)) {
      out.push_back(ReciprocalRoot{root, mult});
    }
  }

  std::sort(out.begin(), out.end(),
            [](const ReciprocalRoot& x, const ReciprocalRoot& y) {
              if (x.alpha.real() != y.alpha.real()) {
                return x.alpha.real() < y.alpha.real();
              }
              return x.alpha.imag() < y.alpha.imag();
            });

  // Cross-check against exact data: the product of |alpha_j| over all
  // reciprocal roots (with multiplicity) is |leading coefficient of p|.
  double product = 1.0;
  for (const auto& rr : out) {
    for (int i = 0; i < rr.multiplicity; ++i) product *= std::abs(rr.alpha);
  }
  const double lead = std::abs(p[dp].get_d());
  if (std::abs(product - lead) > kRootProductTolerance * std::max(1.0, lead)) {
    std::ostringstream msg;
    msg << "reciprocal_roots: product of root magnitudes " << product
        << " disagrees with |leading coefficient| " << lead
        << " beyond the " << kRootProductTolerance << " sanity tolerance";
    throw NumericalFailure(msg.str());
  }
  return out;
}

RhVerdict rh_roots(const IntPoly& p, const Int& q, int weight, double tol) {
  if (q < 2) throw UsageError("rh_roots: q must be at least 2");
  if (weight < 0) throw UsageError("rh_roots: negative weight");
  if (tol <= 0.0) throw UsageError("rh_roots: tolerance must be positive");
  RhVerdict verdict;
  verdict.pass = true;
  const double target = weight_target(q.get_d(), weight);
  for (const auto& rr : reciprocal_roots(p)) {
    RootCheck check;
    check.root = rr;
    check.abs_value = std::abs(rr.alpha);
    check.deviation = std::abs(check.abs_value - target) / target;
    if (check.deviation > tol) verdict.pass = false;
    verdict.roots.push_back(check);
  }
  return verdict;
}

// ---- weight separation ----------------------------------------------------------

WeightSeparation weight_separation(const RationalFn& zeta, const Int& q,
                                   double tol) {
  if (q < 2) throw UsageError("weight_separation: q must be at least 2");
  if (tol <= 0.0) {
    throw UsageError("weight_separation: tolerance must be positive");
  }
  WeightSeparation ws;
  ws.pass = true;
  const double qd = q.get_d();
  const double logq = std::log(qd);

  const auto ingest = [&](const IntPoly& poly, bool from_denominator) {
    for (const auto& rr : reciprocal_roots(poly)) {
      WeightSeparation::Entry entry;
      entry.alpha = rr.alpha;
      entry.multiplicity = rr.multiplicity;
      entry.from_denominator = from_denominator;
      const double abs_value = std::abs(rr.alpha);
      const long nearest = std::lround(2.0 * std::log(abs_value) / logq);
      entry.weight = static_cast<int>(nearest);
      entry.deviation =
          std::abs(abs_value - weight_target(qd, nearest)) /
          weight_target(qd, nearest);
      int admissible = 0;
      for (long j = nearest - 1; j <= nearest + 1; ++j) {
        const double target = weight_target(qd, j);
        if (std::abs(abs_value - target) / target <= tol) ++admissible;
      }
      if (admissible > 1) {
        entry.ambiguous = true;
        ws.inconclusive = true;
      }
      if (entry.deviation > tol) ws.pass = false;
      const bool even = entry.weight % 2 == 0;
      if (from_denominator != even) ws.pass = false;
      ws.betti[entry.weight] += entry.multiplicity;
      ws.entries.push_back(entry);
    }
  };

  ingest(zeta.numerator, /*from_denominator=*/false);
  ingest(zeta.denominator, /*from_denominator=*/true);

  if (ws.inconclusive) ws.pass = false;
  for (const auto& [weight, count] : ws.betti) {
    ws.alternating_sum += weight % 2 == 0 ? count : -count;
  }
  return ws;
}

// ---- bounds ----------------------------------------------------------------------

std::vector<HasseWeilCheck> hasse_weil_bound(const CountTable& table, int g) {
  if (g < 0) throw UsageError("hasse_weil_bound: negative genus");
  std::vector<HasseWeilCheck> out;
  const Int bound_factor = Int(4) * g * g;
  Int qn = 1;
  for (int n = 1; n <= table.depth(); ++n) {
    qn *= table.q;
    HasseWeilCheck check;
    check.n = n;
    check.deviation = table.at(n) - 1 - qn;
    check.deviation_sq = check.deviation * check.deviation;
    check.bound_sq = bound_factor * qn;
    check.pass = check.deviation_sq <= check.bound_sq;
    out.push_back(check);
  }
  return out;
}

CompleteIntersectionCheck complete_intersection_bound(
    const Int& n1, const Int& q, int n, const std::vector<int>& degrees) {
  if (q < 2) {
    throw UsageError("complete_intersection_bound: q must be at least 2");
  }
  if (n < 0) {
    throw UsageError("complete_intersection_bound: negative dimension");
  }
  CompleteIntersectionCheck out;
  if (degrees.size() != 1) return out;  // not applicable
  const int d = degrees.front();
  if (d < 1) {
    throw UsageError("complete_intersection_bound: degree must be positive");
  }
  out.applicable = true;

  // b = ((d-1)^{n+2} + (-1)^{n+2} (d-1)) / d, the dimension of the
  // primitive middle cohomology of a nonsingular hypersurface of degree d
  // and dimension n. The division is always exact.
  const Int dm1 = d - 1;
  Int acc = int_pow(dm1, static_cast<unsigned long>(n) + 2);
  acc += (n % 2 == 0) ? dm1 : -dm1;
  if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(d))) {
    throw CheckFailure(
        "complete_intersection_bound: Betti formula produced a non-integer "
        "(internal error)");
  }
  mpz_divexact_ui(out.b.get_mpz_t(), acc.get_mpz_t(),
                  static_cast<unsigned long>(d));

  Int projective_points = 0;
  Int qpow = 1;
  for (int i = 0; i <= n; ++i) {
    projective_points += qpow;
    qpow *= q;
  }
  out.deviation = n1 - projective_points;
  out.deviation_sq = out.deviation * out.deviation;
  out.bound_sq = out.b * out.b * int_pow(q, static_cast<unsigned long>(n));
  out.pass = out.deviation_sq <= out.bound_sq;
  return out;
}

// ---- curve count recurrence -------------------------------------------------------

std::vector<Int> elliptic_counts_from_trace(const Int& q, const Int& a,
                                            int depth) {
  if (q < 2) {
    throw UsageError("elliptic_counts_from_trace: q must be at least 2");
  }
  if (depth < 1) {
    throw UsageError("elliptic_counts_from_trace: depth must be at least 1");
  }
  std::vector<Int> out(static_cast<std::size_t>(depth));
  Int s_prev = 2;
  Int s_cur = a;
  Int qn = q;
  out[0] = qn + 1 - s_cur;
  for (int n = 2; n <= depth; ++n) {
    Int s_next = a * s_cur - q * s_prev;
    s_prev = std::move(s_cur);
    s_cur = std::move(s_next);
    qn *= q;
    out[static_cast<std::size_t>(n - 1)] = qn + 1 - s_cur;
  }
  return out;
}

}  // namespace weilv
