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

#include "weilv/zeta.hpp"

#include <doctest.h>

#include <vector>

#include "weilv/fixtures.hpp"

using namespace weilv;

namespace {

// Arithmetic count table for P^d over F_q (no enumeration: closed form).
CountTable projective_table(const Int& q, int d, int depth) {
  CountTable t;
  t.q = q;
  for (int n = 1; n <= depth; ++n) {
    Int total = 0;
    const Int qn = int_pow(q, static_cast<unsigned long>(n));
    for (int i = 0; i <= d; ++i)
      total += int_pow(qn, static_cast<unsigned long>(i));
    t.counts.push_back(total);
  }
  return t;
}

IntPoly ipoly(std::vector<long> cs) {
  std::vector<Int> v;
  v.reserve(cs.size());
  for (long c : cs) v.emplace_back(c);
  return IntPoly(std::move(v));
}

}  // namespace

TEST_CASE("zeta series of P^1 over F_2 has the geometric-sum coefficients") {
  CountTable t = projective_table(Int(2), 1, 3);
  TruncatedSeries s = zeta_series(t, 3);
  // 1/((1-t)(1-2t)) = sum (2^{j+1} - 1) t^j.
  CHECK(s[0] == 1);
  CHECK(s[1] == 3);
  CHECK(s[2] == 7);
  CHECK(s[3] == 15);
  CHECK_THROWS_AS(zeta_series(t, 4), UsageError);
}

TEST_CASE("zeta series of zero counts is the constant series 1") {
  CountTable t;
  t.q = 3;
  t.counts = {Int(0), Int(0), Int(0)};
  TruncatedSeries s = zeta_series(t, 3);
  for (int j = 0; j <= 3; ++j) CHECK(s[j] == (j == 0 ? 1 : 0));
  ClosedPointCensus c = closed_point_census(t);
  CHECK(euler_product_series(c, 3) == s);
}

TEST_CASE("zeta series of P^2 over F_2 matches the closed-form product") {
  CountTable t = projective_table(Int(2), 2, 2);
  const IntPoly den = ipoly({1, -1}) * ipoly({1, -2}) * ipoly({1, -4});
  CHECK(zeta_series(t, 2) == series_of_rational(ipoly({1}), den, 2));
}

TEST_CASE("Euler product of P^1 over F_2 census reproduces the zeta series") {
  // a_1 = 3, a_2 = 1: (1-t)^{-3} (1-t^2)^{-1} = 1 + 3t + 7t^2 + ...
  CountTable t = projective_table(Int(2), 1, 2);
  ClosedPointCensus c = closed_point_census(t);
  REQUIRE(c.at(1) == 3);
  REQUIRE(c.at(2) == 1);
  TruncatedSeries s = euler_product_series(c, 2);
  CHECK(s[0] == 1);
  CHECK(s[1] == 3);
  CHECK(s[2] == 7);
  CHECK_THROWS_AS(euler_product_series(c, 3), UsageError);
}

TEST_CASE("definitional equivalence holds on enumerated fixtures") {
  const auto cat = catalog();
  CountOptions opt;  // default budget
  for (const char* label :
       {"P^2/F_3", "P^1/F_4", "elliptic-5a", "elliptic-2a",
        "diagonal-cubic/F_5", "grassmannian-gr13/F_2"}) {
    const Fixture& f = fixture_by_label(cat, label);
    const int m = max_depth_within_budget(f.variety, 4, opt.budget);
    REQUIRE(m >= 2);
    CountTable t = count_table(f.variety, m, opt);
    ClosedPointCensus c = closed_point_census(t);
    CAPTURE(label);
    CHECK(zeta_series(t, m) == euler_product_series(c, m));
  }
}

TEST_CASE("Hankel scan identifies the geometric series") {
  TruncatedSeries s(7);
  Int v = 1;
  for (int j = 0; j <= 7; ++j) {
    s.set(j, Rat(v));
    v *= 2;
  }
  RationalityVerdict verdict = hankel_rationality(s, 2, 2);
  CHECK(verdict.rational);
  CHECK(verdict.num_degree == 0);
  CHECK(verdict.den_degree == 1);
}

TEST_CASE("Hankel scan rejects a lacunary truncation") {
  TruncatedSeries s(8);
  for (int j : {0, 1, 2, 4, 8}) s.set(j, Rat(1));
  RationalityVerdict verdict = hankel_rationality(s, 2, 2);
  CHECK_FALSE(verdict.rational);
  CHECK(verdict.num_degree == -1);
  CHECK(verdict.den_degree == -1);
}

TEST_CASE("Hankel scan finds the P^1 zeta degrees") {
  CountTable t = projective_table(Int(2), 1, 7);
  TruncatedSeries s = zeta_series(t, 7);
  RationalityVerdict verdict = hankel_rationality(s, 2, 2);
  CHECK(verdict.rational);
  CHECK(verdict.num_degree == 0);
  CHECK(verdict.den_degree == 2);
}

TEST_CASE("Hankel scan finds an elliptic-shaped (2,2) function") {
  const IntPoly num = ipoly({1, 3, 5});
  const IntPoly den = ipoly({1, -1}) * ipoly({1, -5});
  TruncatedSeries s = series_of_rational(num, den, 7);
  RationalityVerdict verdict = hankel_rationality(s, 2, 2);
  CHECK(verdict.rational);
  CHECK(verdict.num_degree == 2);
  CHECK(verdict.den_degree == 2);
}

TEST_CASE("Hankel scan window preconditions") {
  TruncatedSeries s(5);
  s.set(0, Rat(1));
  CHECK_THROWS_AS(hankel_rationality(s, 2, 2), UsageError);  // needs 7
  CHECK_THROWS_AS(hankel_rationality(s, -1, 0), UsageError);
  CHECK_NOTHROW(hankel_rationality(s, 0, 2));  // needs exactly 5
}

TEST_CASE("reconstruction of P^1 and P^2 zetas is exact") {
  CountTable t1 = projective_table(Int(2), 1, 4);
  RationalFn z1 = reconstruct_rational(zeta_series(t1, 4), 0, 2);
  CHECK(z1.numerator == ipoly({1}));
  CHECK(z1.denominator == ipoly({1, -1}) * ipoly({1, -2}));

  CountTable t2 = projective_table(Int(3), 2, 5);
  RationalFn z2 = reconstruct_rational(zeta_series(t2, 5), 0, 3);
  CHECK(z2.numerator == ipoly({1}));
  CHECK(z2.denominator ==
        ipoly({1, -1}) * ipoly({1, -3}) * ipoly({1, -9}));
  CHECK(expand(z2, 5) == zeta_series(t2, 5));
}

TEST_CASE("reconstruction with oversized degrees cancels the common factor") {
  CountTable t = projective_table(Int(2), 1, 5);
  RationalFn z = reconstruct_rational(zeta_series(t, 5), 1, 3);
  CHECK(z.numerator == ipoly({1}));
  CHECK(z.denominator == ipoly({1, -3, 2}));
}

TEST_CASE("reconstruction of an enumerated elliptic curve zeta") {
  const auto cat = catalog();
  const Fixture& f = fixture_by_label(cat, "elliptic-5a");
  CountTable t = count_table(f.variety, 4);
  TruncatedSeries s = zeta_series(t, 4);
  RationalFn z = reconstruct_rational(s, 2, 2);
  const Int a = Int(6) - t.at(1);  // q + 1 - N_1
  CHECK(z.denominator == ipoly({1, -6, 5}));  // (1-t)(1-5t)
  CHECK(z.numerator == IntPoly({Int(1), -a, Int(5)}));
  CHECK(expand(z, 4) == s);
}

TEST_CASE("reconstruction failure modes") {
  // Constant series 1 at degrees (0,0): the trivial function.
  TruncatedSeries one(3);
  one.set(0, Rat(1));
  RationalFn unit = reconstruct_rational(one, 0, 0);
  CHECK(unit.numerator == ipoly({1}));
  CHECK(unit.denominator == ipoly({1}));

  // Insufficient order is a usage error naming the needed depth.
  TruncatedSeries tiny(2);
  tiny.set(0, Rat(1));
  CHECK_THROWS_AS(reconstruct_rational(tiny, 2, 2), UsageError);

  // Constant term must be 1.
  TruncatedSeries off(3);
  off.set(0, Rat(2));
  CHECK_THROWS_AS(reconstruct_rational(off, 1, 1), DomainError);

  // The lacunary truncation admits no (1,1) fit.
  TruncatedSeries lac(4);
  for (int j : {0, 1, 2, 4}) lac.set(j, Rat(1));
  CHECK_THROWS_AS(reconstruct_rational(lac, 1, 1), CheckFailure);

  // A perfectly rational fit with non-integer coefficients violates the
  // integrality conclusion and is reported as its own failure class:
  // (1 + t/2)/(1 - t) = 1 + (3/2) t + (3/2) t^2 + ...
  TruncatedSeries half(4);
  half.set(0, Rat(1));
  for (int j = 1; j <= 4; ++j) half.set(j, make_rat(Int(3), Int(2)));
  CHECK_THROWS_AS(reconstruct_rational(half, 1, 1), IntegralityError);
}

TEST_CASE("reconstruction round-trips random integer rational functions") {
  // Deterministic small sweep instead of RNG: numerators 1 + bt, denominators
  // (1 - t)(1 - ct), expanded then reconstructed.
  for (long b = -3; b <= 3; ++b) {
    for (long c = 1; c <= 4; ++c) {
      const IntPoly num = ipoly({1, b});
      const IntPoly den = ipoly({1, -1}) * ipoly({1, -c});
      TruncatedSeries s = series_of_rational(num, den, 6);
      CAPTURE(b);
      CAPTURE(c);
      RationalFn z = reconstruct_rational(s, 1, 2);
      TruncatedSeries back = expand(z, 6);
      CHECK(back == s);
      if (b != 0 && Int(-b) == Int(c)) {
        // Common factor (1 + bt) = (1 - ct): degrees drop to (0, 1).
        CHECK(z.num_degree() == 0);
        CHECK(z.den_degree() == 1);
      }
    }
  }
}
