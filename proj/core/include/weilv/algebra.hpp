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

// Polynomial and power series algebra: multivariate polynomials over a
// finite field (the shape of variety equations), dense univariate
// polynomials over Z and Q, and truncated formal power series over Q with
// the exp/log/inverse recurrences used throughout the zeta machinery.

#ifndef WEILV_ALGEBRA_HPP_
#define WEILV_ALGEBRA_HPP_

#include <map>
#include <utility>
#include <vector>

#include "weilv/common.hpp"
#include "weilv/ffield.hpp"

namespace weilv {

// A multivariate polynomial over a finite field, stored sparsely as a map
// from exponent vectors to nonzero coefficients. The map ordering makes
// iteration deterministic.
class MultiPoly {
 public:
  using ExpVec = std::vector<std::uint32_t>;
  using TermMap = std::map<ExpVec, FieldElement>;

  MultiPoly(FieldCtxPtr ctx, int nvars);

  const FieldCtxPtr& ctx() const { return ctx_; }
  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }

  // Adds c * x^exps, merging with an existing term and dropping the term
  // if the sum cancels. exps must have nvars entries.
  void add_term(const ExpVec& exps, const FieldElement& c);

  bool is_zero() const { return terms_.empty(); }
  // Maximal total degree over all terms; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  // The homogeneous part of top degree.
  MultiPoly leading_form() const;
  MultiPoly partial_derivative(int var) const;

  // Evaluation at a point with coordinates in the same field.
  FieldElement evaluate(const std::vector<FieldElement>& point) const;

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  bool operator==(const MultiPoly& other) const;

 private:
  FieldCtxPtr ctx_;
  int nvars_;
  TermMap terms_;
};

// Evaluation of f at a point of an extension field: the coefficients of f
// are carried through emb (whose source must be the coefficient field of
// f), the point lives in emb.target().
FieldElement mp_eval(const MultiPoly& f,
                     const std::vector<FieldElement>& point,
                     const Embedding& emb);

// Dense univariate polynomial with integer coefficients, little-endian.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  static IntPoly constant(const Int& c);

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  // Coefficient access beyond the degree yields zero.
  const Int& operator[](int i) const;
  const std::vector<Int>& coeffs() const { return c_; }

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  IntPoly scaled(const Int& s) const;
  bool operator==(const IntPoly& other) const { return c_ == other.c_; }

  // Exact quotient this / d. Throws CheckFailure when the division is not
  // exact over Z[t]; used by fraction-free elimination, where exactness
  // is guaranteed by theory and a failure indicates a bug.
  IntPoly divexact(const IntPoly& d) const;

 private:
  void trim();
  std::vector<Int> c_;
};

// Dense univariate polynomial over Q, little-endian. The workhorse for
// linear algebra on series coefficients and functional equation checks.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  explicit RatPoly(const IntPoly& p);
  static RatPoly constant(const Rat& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& operator[](int i) const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat eval(const Rat& x) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly scaled(const Rat& s) const;
  bool operator==(const RatPoly& other) const { return c_ == other.c_; }

  // Quotient and remainder; divisor must be nonzero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;

  // Converts to integer coefficients; throws IntegralityError if any
  // coefficient has a nontrivial denominator.
  IntPoly to_int_poly() const;

 private:
  void trim();
  std::vector<Rat> c_;
};

// Monic greatest common divisor over Q[t].
RatPoly rat_poly_gcd(RatPoly a, RatPoly b);

// A formal power series over Q truncated at t^order: coefficients of
// t^0 .. t^order inclusive. Binary operations require equal orders.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  explicit TruncatedSeries(std::vector<Rat> coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& operator[](int n) const;
  void set(int n, const Rat& v);
  const std::vector<Rat>& coeffs() const { return c_; }

  bool operator==(const TruncatedSeries& other) const {
    return c_ == other.c_;
  }

 private:
  std::vector<Rat> c_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rat& s);

// exp of a series with zero constant term, via the recurrence
// n b_n = sum_{j=1}^{n} j a_j b_{n-j} with b_0 = 1.
TruncatedSeries series_exp(const TruncatedSeries& a);

// log of a series with constant term one.
TruncatedSeries series_log(const TruncatedSeries& a);

// Multiplicative inverse of a series with nonzero constant term.
TruncatedSeries series_inv(const TruncatedSeries& a);

// Truncated expansion of a rational function num/den; den(0) must be
// nonzero.
TruncatedSeries series_of_rational(const IntPoly& num, const IntPoly& den,
                                   int order);

// Reference identity connecting a linear map to its characteristic
// series: for an integer matrix M, returns the pair
//   ( log det(I - tM)^{-1} , sum_{n>=1} tr(M^n) t^n / n )
// truncated at order m. The determinant is expanded by fraction-free
// elimination over Z[t], so both sides are exact; they must agree
// coefficient by coefficient.
std::pair<TruncatedSeries, TruncatedSeries> charpoly_series_oracle(
    const std::vector<std::vector<Int>>& M, int m);

}  // namespace weilv

#endif  // WEILV_ALGEBRA_HPP_
