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

#ifndef WEILV_ZETA_HPP_
#define WEILV_ZETA_HPP_

#include "weilv/algebra.hpp"
#include "weilv/common.hpp"
#include "weilv/counting.hpp"

namespace weilv {

// An exact rational function P(t)/Q(t) with integer coefficients, both
// constant terms exactly 1, and P, Q coprime. This is the normal form in
// which a zeta function is reported: with constant terms 1 the integer
// coefficients are forced, so integrality is a checkable fact rather
// than a convention.
struct RationalFn {
  IntPoly numerator;
  IntPoly denominator;

  int num_degree() const { return numerator.degree(); }
  int den_degree() const { return denominator.degree(); }
};

// The zeta series exp(sum_{n>=1} N_n t^n / n) truncated at `order`.
// Requires T.depth() >= order; coefficients are exact rationals and the
// constant term is 1.
TruncatedSeries zeta_series(const CountTable& table, int order);

// The Euler product prod_{d <= order} (1 - t^d)^{-a_d} truncated at
// `order`, computed by expanding each factor with exact binomial
// coefficients (an intentionally different route from zeta_series: the
// two must agree exactly, and tests rely on that).
// Requires census depth >= order.
TruncatedSeries euler_product_series(const ClosedPointCensus& census,
                                     int order);

// Verdict of the rationality scan.
struct RationalityVerdict {
  bool rational = false;
  // Minimal fitting degrees when rational, -1 otherwise. Minimality is
  // by total degree first, then numerator degree.
  int num_degree = -1;
  int den_degree = -1;
};

// Scans all candidate degree pairs (dN <= max_num, dD <= max_den) in
// ascending total degree for a rational function matching every
// available coefficient of S. A candidate passes when its Kronecker
// Hankel determinants det[(s_{k+i+j})_{0<=i,j<=dD}] vanish for every
// admissible offset k >= max(0, dN - dD + 1) in the window, and the
// resulting linear system is consistent through the full order of S.
// A negative verdict means only that no fit exists within this window.
// Requires S.order() >= max_num + 2 * max_den + 1, so that every
// candidate is overdetermined by at least one coefficient; UsageError
// otherwise.
RationalityVerdict hankel_rationality(const TruncatedSeries& series,
                                      int max_num, int max_den);

// Reconstructs the rational function of degrees (num_degree, den_degree)
// matching S: solves the exact linear system for the denominator
// (constant term 1, remaining free variables set to zero when the system
// is underdetermined), derives the numerator, removes any common factor,
// verifies by re-expansion to the full order of S, and converts to
// integer coefficients.
// Preconditions: S[0] == 1 (DomainError) and S.order() >= num_degree +
// den_degree (UsageError; the message names the needed order).
// Errors: CheckFailure when no rational function of these degrees fits;
// IntegralityError when the fit exists over Q but has a non-integer
// coefficient (which falsifies the premise that S is a zeta series of
// the claimed degrees).
RationalFn reconstruct_rational(const TruncatedSeries& series, int num_degree,
                                int den_degree);

// Truncated expansion of Z to the given order.
TruncatedSeries expand(const RationalFn& fn, int order);

}  // namespace weilv

#endif  // WEILV_ZETA_HPP_
