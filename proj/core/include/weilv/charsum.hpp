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

// Additive character sums over finite fields and their Deligne-type
// bounds: general exponential sums with a nonsingular leading form,
// multiple Kloosterman sums, and the Ramanujan tau series. Sums are
// accumulated in compensated double precision with an explicit, auditable
// rounding allowance; every verdict that can be exact (tau) is exact.

#ifndef WEILV_CHARSUM_HPP_
#define WEILV_CHARSUM_HPP_

#include <complex>
#include <optional>
#include <vector>

#include "weilv/algebra.hpp"
#include "weilv/common.hpp"
#include "weilv/ffield.hpp"

namespace weilv {

// The canonical nontrivial additive character of F_q:
// psi(x) = exp(2 pi i Tr(x) / p), with Tr the trace to the prime field.
// Nontrivial because the trace is surjective.
class AdditiveCharacter {
 public:
  explicit AdditiveCharacter(FieldCtxPtr ctx);

  const FieldCtxPtr& ctx() const { return ctx_; }
  std::complex<double> operator()(const FieldElement& x) const;

 private:
  FieldCtxPtr ctx_;
  double angle_unit_;  // 2 pi / p
};

// Per-term rounding allowance used by every floating-point verdict.
inline constexpr double kPerTermRounding = 1e-12;

struct CharSumOptions {
  std::uint64_t budget = kDefaultBudget;
};

// Outcome of a character sum check: the complex value, its magnitude,
// the theoretical bound, and the verdict margin = bound - magnitude,
// passed when margin >= -eps_num with eps_num = terms * 1e-12.
struct CharacterSumResult {
  std::complex<double> value{0.0, 0.0};
  double magnitude = 0.0;
  double bound = 0.0;
  double margin = 0.0;
  std::uint64_t terms = 0;
  double eps_num = 0.0;
  // False when a mechanical precondition (degree coprime to the
  // characteristic) fails: no sum is computed and no verdict is issued.
  bool applicable = true;
  bool pass = false;
  // Exponential sums only: the largest extension degree m over which the
  // leading form was screened for singular points (0 when the screen was
  // skipped), and whether a nonzero common zero of its partials was
  // found. Finding one disproves the nonsingularity hypothesis; finding
  // none does not prove it.
  int leading_form_checked_depth = 0;
  bool leading_form_suspect = false;
};

// |sum over all x in F_q^n of psi(Q(x))| <= (d-1)^n q^{n/2} for Q of
// total degree d with gcd(d, p) = 1 and nonsingular leading form.
// Coprimality is checked mechanically (violations make the result
// not-applicable); nonsingularity is the caller's hypothesis, screened
// heuristically by enumerating common zeros of the partials of the
// leading form over F_{q^m}, m <= 2, within the budget. Enumeration of
// the q^n summands is budget-checked before any work (BudgetError).
CharacterSumResult exponential_sum(const MultiPoly& q_poly,
                                   const CharSumOptions& options = {});

// Multiple Kloosterman sum over F_q:
//   K_n(a) = sum over x_1..x_n in F_q^x of psi(x_1 + ... + x_n +
//            a / (x_1 ... x_n)),
// with |K_n(a)| <= (n+1) q^{n/2}. The shift a defaults to 1 and must be
// nonzero; at n = 1 this is the classical Kloosterman sum K(a). The
// (q-1)^n summands are budget-checked before any work.
CharacterSumResult kloosterman(const FieldCtxPtr& ctx, int n,
                               const std::optional<FieldElement>& shift = {},
                               const CharSumOptions& options = {});

// Ramanujan tau: exact integer coefficients of
//   Delta = t prod_{n >= 1} (1 - t^n)^{24} = sum tau(m) t^m,
// together with the exact-integer verdicts tau(p)^2 <= 4 p^11 for every
// prime p <= limit.
struct TauPrimeCheck {
  long p = 0;
  Int tau;
  Int tau_sq;
  Int bound;  // 4 p^11
  bool pass = false;
};

struct TauReport {
  std::vector<Int> tau;  // tau[i] is tau(i + 1)
  std::vector<TauPrimeCheck> primes;
  bool all_pass = true;
};

TauReport ramanujan_tau(int limit);

}  // namespace weilv

#endif  // WEILV_CHARSUM_HPP_
