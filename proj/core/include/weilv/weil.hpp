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

#ifndef WEILV_WEIL_HPP_
#define WEILV_WEIL_HPP_

#include <complex>
#include <map>
#include <vector>

#include "weilv/algebra.hpp"
#include "weilv/common.hpp"
#include "weilv/counting.hpp"
#include "weilv/zeta.hpp"

namespace weilv {

// ---- functional equation -----------------------------------------------------

// Outcome of testing Z(1/(q^d t)) = ± q^{d chi / 2} t^chi Z(t) as an
// exact polynomial identity, with chi = deg(denominator) -
// deg(numerator). When d*chi is even the identity is tested directly for
// both signs; when d*chi is odd, q^{d chi / 2} is irrational, so the
// squared identity is tested instead and the sign is undetermined.
struct FunctionalEquationResult {
  enum class Sign { kPlus, kMinus, kUndetermined };

  bool pass = false;
  Sign sign = Sign::kUndetermined;
  int chi = 0;
  // True when the squared identity Z(1/(q^d t))^2 = q^{d chi} t^{2 chi}
  // Z(t)^2 holds exactly (it is always evaluated, and is implied by a
  // direct-sign pass).
  bool squared_identity = false;
  // True when the verdict had to come from the squared identity alone.
  bool squared_only = false;
};

FunctionalEquationResult functional_equation_check(const RationalFn& zeta,
                                                   const Int& q, int d);

// ---- curve form ---------------------------------------------------------------

// P_1 and the genus of a curve zeta P_1(t)/((1-t)(1-qt)).
struct CurveZeta {
  int genus = 0;
  IntPoly p1;
};

// Asserts the denominator is exactly (1-t)(1-qt) and deg P_1 is even;
// CheckFailure otherwise ("not a smooth projective curve zeta").
CurveZeta curve_analysis(const RationalFn& zeta, const Int& q);

// ---- reciprocal roots ----------------------------------------------------------

// A reciprocal root alpha of P (a root of the reversed polynomial, so
// P(t) = prod (1 - alpha_j t)) with its multiplicity.
struct ReciprocalRoot {
  std::complex<double> alpha;
  int multiplicity = 1;
};

// All reciprocal roots of P, P(0) = 1 required. Multiple roots are
// handled by an exact square-free decomposition over Q (Yun's
// algorithm), so the numerical root finder only ever sees simple roots.
// Each square-free factor is solved by Durand-Kerner iteration with the
// spiral initialization z_j = (0.4 + 0.9i)^{j+1}, convergence threshold
// 1e-13 (relative), iteration cap 1000; the iteration is deterministic.
// Cross-check: prod |alpha_j|^{mult} must reproduce |leading
// coefficient of P| within 1e-9 relative. NumericalFailure on
// non-convergence or a failed cross-check.
std::vector<ReciprocalRoot> reciprocal_roots(const IntPoly& p);

// One root measured against a claimed weight.
struct RootCheck {
  ReciprocalRoot root;
  double abs_value = 0.0;
  // | |alpha| - q^{weight/2} | / q^{weight/2}
  double deviation = 0.0;
};

struct RhVerdict {
  bool pass = false;
  std::vector<RootCheck> roots;
};

// Riemann-hypothesis check for a single weight-i factor: every
// reciprocal root of P must satisfy |alpha| = q^{i/2} within tol
// (relative). P constant passes vacuously.
RhVerdict rh_roots(const IntPoly& p, const Int& q, int weight, double tol);

// ---- weight separation ----------------------------------------------------------

struct WeightSeparation {
  struct Entry {
    std::complex<double> alpha;
    int multiplicity = 1;
    bool from_denominator = false;
    int weight = 0;        // nearest integer to log_q |alpha|^2
    double deviation = 0.0;  // relative distance to q^{weight/2}
    bool ambiguous = false;  // more than one weight within tol
  };

  // Pass: every root is within tol of its inferred weight, no
  // ambiguity, denominator roots have even weights and numerator roots
  // odd weights.
  bool pass = false;
  // True when some root admitted more than one weight within tol; never
  // reported as a silent pass.
  bool inconclusive = false;
  std::vector<Entry> entries;
  // Inferred Betti numbers: weight -> total multiplicity.
  std::map<int, int> betti;
  // sum_j (-1)^j beta_j; equals chi when the separation is clean.
  int alternating_sum = 0;
};

WeightSeparation weight_separation(const RationalFn& zeta, const Int& q,
                                   double tol);

// ---- bounds ----------------------------------------------------------------------

// One Hasse-Weil margin: |N_n - 1 - q^n| <= 2g q^{n/2}, compared as
// exact squared integers (deviation^2 <= 4 g^2 q^n).
struct HasseWeilCheck {
  int n = 0;
  Int deviation;      // N_n - 1 - q^n (signed)
  Int deviation_sq;   // deviation^2
  Int bound_sq;       // 4 g^2 q^n
  bool pass = false;
};

// Checks every depth of the table; q is taken from the table.
std::vector<HasseWeilCheck> hasse_weil_bound(const CountTable& table, int g);

// Point-count deviation bound for a nonsingular hypersurface of
// dimension n and degree d in P^{n+1}:
//   |N_1 - #P^n(F_q)| <= b q^{n/2},
// with b = ((d-1)^{n+2} + (-1)^{n+2} (d-1)) / d — the dimension of the
// primitive part of the middle cohomology, which is exactly the b of
// the general complete-intersection bound. Compared as exact squares.
// Multidegrees with more than one entry are reported not-applicable
// (the general b' needs cohomology tables we do not compute).
struct CompleteIntersectionCheck {
  bool applicable = false;
  Int b;
  Int deviation;    // N_1 - #P^n(F_q) (signed)
  Int deviation_sq;
  Int bound_sq;     // b^2 q^n
  bool pass = false;
};

CompleteIntersectionCheck complete_intersection_bound(
    const Int& n1, const Int& q, int n, const std::vector<int>& degrees);

// ---- curve count recurrence -------------------------------------------------------

// Exact N_1..N_depth for an elliptic curve with Frobenius trace a over
// F_q: with s_n = alpha^n + conj(alpha)^n, s_0 = 2, s_1 = a,
// s_n = a s_{n-1} - q s_{n-2}, and N_n = q^n + 1 - s_n. This is the
// curve case of the point-count formula driven by Frobenius
// eigenvalues, evaluated without floating point.
std::vector<Int> elliptic_counts_from_trace(const Int& q, const Int& a,
                                            int depth);

}  // namespace weilv

#endif  // WEILV_WEIL_HPP_
