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

#include "weilv/counting.hpp"

#include <doctest.h>

#include <vector>

#include "weilv/algebra.hpp"
#include "weilv/ffield.hpp"

using namespace weilv;

namespace {

// Independent oracle: enumerate every coordinate tuple over the extension
// and evaluate each equation with the generic MultiPoly evaluator (a code
// path with no shared logic with the optimized counting kernels). For a
// projective variety the nonzero solutions of the homogeneous system form
// the punctured affine cone, which has exactly (q - 1) tuples per
// projective point.
Int oracle_count(const VarietySpec& v, int n) {
  const auto& base = v.base_field();
  const FieldCtxPtr ext =
      n == 1 ? base
             : FieldCtx::make(base->characteristic(), base->degree() * n);
  Embedding emb(base, ext);
  const auto elems = all_elements(ext);
  const int m = v.coordinate_count();
  const bool projective = v.ambient().kind == AmbientKind::kProjective;

  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  Int hits = 0;
  while (true) {
    std::vector<FieldElement> pt;
    pt.reserve(static_cast<std::size_t>(m));
    bool nonzero = false;
    for (int i = 0; i < m; ++i) {
      pt.push_back(elems[idx[static_cast<std::size_t>(i)]]);
      nonzero = nonzero || !pt.back().is_zero();
    }
    bool ok = !projective || nonzero;
    for (const auto& eq : v.equations()) {
      if (!ok) break;
      ok = mp_eval(eq, pt, emb).is_zero();
    }
    if (ok) ++hits;
    int pos = m - 1;
    while (pos >= 0) {
      if (++idx[static_cast<std::size_t>(pos)] < elems.size()) break;
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  if (!projective) return hits;
  const Int cone_ratio = ext->cardinality() - 1;
  REQUIRE(hits % cone_ratio == 0);
  return hits / cone_ratio;
}

MultiPoly poly_from_terms(
    const FieldCtxPtr& ctx, int nvars,
    const std::vector<std::pair<std::vector<std::uint32_t>, Int>>& terms) {
  MultiPoly f(ctx, nvars);
  for (const auto& [e, c] : terms) {
    Int r = c % Int(static_cast<unsigned long>(ctx->characteristic()));
    if (r < 0) r += Int(static_cast<unsigned long>(ctx->characteristic()));
    f.add_term(e, FieldElement::constant(ctx, r.get_ui()));
  }
  return f;
}

// Projective Weierstrass cubic y^2 z + a1 xyz + a3 yz^2 = x^3 + a2 x^2 z +
// a4 xz^2 + a6 z^3 with coordinates (x, y, z).
VarietySpec weierstrass(const FieldCtxPtr& ctx, long a1, long a2, long a3,
                        long a4, long a6, const std::string& label) {
  MultiPoly f = poly_from_terms(ctx, 3,
                                {{{0, 2, 1}, Int(1)},
                                 {{1, 1, 1}, Int(a1)},
                                 {{0, 1, 2}, Int(a3)},
                                 {{3, 0, 0}, Int(-1)},
                                 {{2, 0, 1}, Int(-a2)},
                                 {{1, 0, 2}, Int(-a4)},
                                 {{0, 0, 3}, Int(-a6)}});
  return VarietySpec(label, ctx, Ambient{AmbientKind::kProjective, 2}, {f});
}

Int projective_space_size(const Int& q, int dim) {
  Int total = 0;
  for (int v = 0; v <= dim; ++v) total += int_pow(q, static_cast<unsigned long>(v));
  return total;
}

}  // namespace

TEST_CASE("projective space counts match the closed form") {
  for (const auto& [p, a] : std::vector<std::pair<std::uint64_t, int>>{
           {2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    auto ctx = FieldCtx::make(p, a);
    for (int dim = 1; dim <= 3; ++dim) {
      VarietySpec v("P^" + std::to_string(dim), ctx,
                    Ambient{AmbientKind::kProjective, dim}, {});
      for (int n = 1; n <= 3; ++n) {
        const Int qn = int_pow(ctx->cardinality(), static_cast<unsigned long>(n));
        CountOptions opt;
        opt.budget = std::uint64_t{1} << 30;
        CAPTURE(p);
        CAPTURE(a);
        CAPTURE(dim);
        CAPTURE(n);
        CHECK(count_points(v, n, opt) == projective_space_size(qn, dim));
      }
    }
  }
}

TEST_CASE("affine space counts are q^dim") {
  auto ctx = FieldCtx::make(3, 1);
  for (int dim = 1; dim <= 4; ++dim) {
    VarietySpec v("A^" + std::to_string(dim), ctx,
                  Ambient{AmbientKind::kAffine, dim}, {});
    for (int n = 1; n <= 2; ++n) {
      const Int qn = int_pow(ctx->cardinality(), static_cast<unsigned long>(n));
      CHECK(count_points(v, n) ==
            int_pow(qn, static_cast<unsigned long>(dim)));
    }
  }
}

TEST_CASE("affine plane curves agree with the naive oracle") {
  // y^2 = x^3 + x + 1 over F_5, affine model: coordinates (x, y).
  auto f5 = FieldCtx::make(5, 1);
  MultiPoly f = poly_from_terms(
      f5, 2,
      {{{0, 2}, Int(1)}, {{3, 0}, Int(-1)}, {{1, 0}, Int(-1)}, {{0, 0}, Int(-1)}});
  VarietySpec v("affine-ec", f5, Ambient{AmbientKind::kAffine, 2}, {f});
  for (int n = 1; n <= 2; ++n) {
    CAPTURE(n);
    CHECK(count_points(v, n) == oracle_count(v, n));
  }
}

TEST_CASE("affine variety over a base extension field agrees with the oracle") {
  // x^3 + y^3 + c = 0 over F_4 where c = g (a generator): exercises the
  // embedding of base coefficients into F_{4^n}.
  auto f4 = FieldCtx::make(2, 2);
  MultiPoly f(f4, 2);
  f.add_term({3, 0}, FieldElement::one(f4));
  f.add_term({0, 3}, FieldElement::one(f4));
  f.add_term({0, 0}, FieldElement::generator(f4));
  VarietySpec v("cubic-f4", f4, Ambient{AmbientKind::kAffine, 2}, {f});
  for (int n = 1; n <= 2; ++n) {
    CAPTURE(n);
    CHECK(count_points(v, n) == oracle_count(v, n));
  }
}

TEST_CASE("projective elliptic curves agree with the naive oracle") {
  auto f5 = FieldCtx::make(5, 1);
  auto f7 = FieldCtx::make(7, 1);
  std::vector<VarietySpec> curves = {
      weierstrass(f5, 0, 0, 0, 1, 1, "ec-5a"),
      weierstrass(f5, 1, 0, 0, 0, 1, "ec-5b"),
      weierstrass(f7, 0, 0, 0, 1, 1, "ec-7a"),
  };
  for (const auto& v : curves) {
    for (int n = 1; n <= 2; ++n) {
      CAPTURE(v.label());
      CAPTURE(n);
      CHECK(count_points(v, n) == oracle_count(v, n));
    }
  }
}

TEST_CASE("diagonal plane cubic agrees with the oracle and is determined "
          "by strata") {
  auto f7 = FieldCtx::make(7, 1);
  MultiPoly f = poly_from_terms(
      f7, 3, {{{3, 0, 0}, Int(1)}, {{0, 3, 0}, Int(1)}, {{0, 0, 3}, Int(1)}});
  VarietySpec v("diag-cubic-7", f7, Ambient{AmbientKind::kProjective, 2}, {f});
  CHECK(count_points(v, 1) == oracle_count(v, 1));
  CHECK(count_points(v, 2) == oracle_count(v, 2));
}

TEST_CASE("multi-equation systems agree with the oracle") {
  // Intersection of two quadrics in P^3 over F_3: an elliptic normal
  // curve when smooth; the count just has to match the oracle.
  auto f3 = FieldCtx::make(3, 1);
  MultiPoly q1 = poly_from_terms(
      f3, 4, {{{2, 0, 0, 0}, Int(1)}, {{0, 2, 0, 0}, Int(1)},
              {{0, 0, 1, 1}, Int(-1)}});
  MultiPoly q2 = poly_from_terms(
      f3, 4, {{{0, 0, 2, 0}, Int(1)}, {{0, 0, 0, 2}, Int(1)},
              {{1, 1, 0, 0}, Int(-1)}});
  VarietySpec v("two-quadrics", f3, Ambient{AmbientKind::kProjective, 3},
                {q1, q2});
  for (int n = 1; n <= 2; ++n) {
    CAPTURE(n);
    CHECK(count_points(v, n) == oracle_count(v, n));
  }

  // An inconsistent pair: x^2 = 0 and x^2 + w^2 = 0 with w = 0 forced,
  // leaving a linear subspace; still must match the oracle.
  MultiPoly r1 = poly_from_terms(f3, 4, {{{2, 0, 0, 0}, Int(1)}});
  MultiPoly r2 = poly_from_terms(
      f3, 4, {{{2, 0, 0, 0}, Int(1)}, {{0, 0, 0, 2}, Int(1)}});
  VarietySpec w("degenerate", f3, Ambient{AmbientKind::kProjective, 3},
                {r1, r2});
  CHECK(count_points(w, 1) == oracle_count(w, 1));
}

TEST_CASE("equation with no solutions and the zero equation") {
  auto f3 = FieldCtx::make(3, 1);
  // x^2 + 1 = 0 has no roots in F_3 and two in F_9.
  MultiPoly f = poly_from_terms(f3, 1, {{{2}, Int(1)}, {{0}, Int(1)}});
  VarietySpec v("x2p1", f3, Ambient{AmbientKind::kAffine, 1}, {f});
  CHECK(count_points(v, 1) == 0);
  CHECK(count_points(v, 2) == 2);

  // The zero polynomial imposes no condition.
  MultiPoly z(f3, 3);
  VarietySpec all("zero-eq", f3, Ambient{AmbientKind::kProjective, 2}, {z});
  CHECK(count_points(all, 1) == projective_space_size(Int(3), 2));
}

TEST_CASE("thread count does not change any count") {
  auto f5 = FieldCtx::make(5, 1);
  VarietySpec ec = weierstrass(f5, 0, 0, 0, 1, 1, "ec-5a");
  MultiPoly f = poly_from_terms(
      f5, 3, {{{3, 0, 0}, Int(1)}, {{0, 3, 0}, Int(2)}, {{0, 0, 3}, Int(3)}});
  VarietySpec cubic("cubic-513", f5, Ambient{AmbientKind::kProjective, 2}, {f});
  for (const auto& v : {ec, cubic}) {
    for (int n : {2, 3, 4}) {
      CountOptions base;
      base.budget = std::uint64_t{1} << 30;
      base.threads = 1;
      const Int reference = count_points(v, n, base);
      for (int threads : {2, 3, 7}) {
        CountOptions opt = base;
        opt.threads = threads;
        CAPTURE(v.label());
        CAPTURE(n);
        CAPTURE(threads);
        CHECK(count_points(v, n, opt) == reference);
      }
    }
  }
}

TEST_CASE("enumeration cost and budget enforcement") {
  auto f5 = FieldCtx::make(5, 1);
  VarietySpec ec = weierstrass(f5, 0, 0, 0, 1, 1, "ec-5a");
  // P^2 strata over F_{5^n}: q^2 + q + 1 candidates.
  CHECK(enumeration_cost(ec, 1) == 31);
  CHECK(enumeration_cost(ec, 2) == 651);
  VarietySpec aff("A^3", f5, Ambient{AmbientKind::kAffine, 3}, {});
  CHECK(enumeration_cost(aff, 2) == int_pow(Int(25), 3));

  CountOptions tight;
  tight.budget = 650;
  CHECK_NOTHROW(count_points(ec, 1, tight));
  try {
    count_points(ec, 2, tight);
    FAIL("budget violation not reported");
  } catch (const BudgetError& e) {
    CHECK(e.required() == 651);
    CHECK(e.budget() == 650);
  }
}

TEST_CASE("excessive extension degree is a usage error") {
  auto f16 = FieldCtx::make(2, 4);
  VarietySpec v("P^1/F16", f16, Ambient{AmbientKind::kProjective, 1}, {});
  CountOptions roomy;
  roomy.budget = std::uint64_t{1} << 30;
  CHECK_NOTHROW(count_points(v, 6, roomy));  // degree 24 is the ceiling
  CHECK_THROWS_AS(count_points(v, 7, roomy), UsageError);
  CHECK_THROWS_AS(count_points(v, 0, roomy), UsageError);
  CHECK_THROWS_AS(count_points(v, -1, roomy), UsageError);
}

TEST_CASE("variety specification validation") {
  auto f3 = FieldCtx::make(3, 1);
  auto f5 = FieldCtx::make(5, 1);
  MultiPoly inhom = poly_from_terms(f3, 3, {{{2, 0, 0}, Int(1)}, {{1, 0, 0}, Int(1)}});
  CHECK_THROWS_AS(VarietySpec("bad", f3, Ambient{AmbientKind::kProjective, 2},
                              {inhom}),
                  UsageError);
  // The same polynomial is fine in affine space.
  CHECK_NOTHROW(VarietySpec("ok", f3, Ambient{AmbientKind::kAffine, 3},
                            {inhom}));
  MultiPoly wrong_arity = poly_from_terms(f3, 2, {{{2, 0}, Int(1)}});
  CHECK_THROWS_AS(VarietySpec("bad", f3, Ambient{AmbientKind::kProjective, 2},
                              {wrong_arity}),
                  UsageError);
  MultiPoly other_field = poly_from_terms(f5, 3, {{{2, 0, 0}, Int(1)}});
  CHECK_THROWS_AS(VarietySpec("bad", f3, Ambient{AmbientKind::kProjective, 2},
                              {other_field}),
                  UsageError);
  CHECK_THROWS_AS(VarietySpec("bad", f3, Ambient{AmbientKind::kAffine, 0}, {}),
                  UsageError);
}

TEST_CASE("count tables and accessors") {
  auto f2 = FieldCtx::make(2, 1);
  VarietySpec p2("P^2/F2", f2, Ambient{AmbientKind::kProjective, 2}, {});
  CountTable t = count_table(p2, 4);
  CHECK(t.q == 2);
  CHECK(t.depth() == 4);
  CHECK(t.at(1) == 7);
  CHECK(t.at(2) == 21);
  CHECK(t.at(3) == 73);
  CHECK(t.at(4) == 273);
  CHECK_THROWS_AS(t.at(0), UsageError);
  CHECK_THROWS_AS(t.at(5), UsageError);
  CHECK_THROWS_AS(count_table(p2, 0), UsageError);
}

TEST_CASE("moebius table matches the classical values") {
  const auto mu = moebius_table(12);
  const std::vector<int> expected = {0, 1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
  REQUIRE(mu.size() == expected.size());
  for (std::size_t i = 1; i < expected.size(); ++i) {
    CAPTURE(i);
    CHECK(mu[i] == expected[i]);
  }
  CHECK_THROWS_AS(moebius_table(0), UsageError);
}

TEST_CASE("closed point census of the affine line counts irreducible "
          "polynomials") {
  // Closed points of degree d on A^1 over F_p are in bijection with monic
  // irreducible polynomials of degree d; the classical counts over F_2
  // are 2, 1, 2, 3, 6 for d = 1..5.
  auto f2 = FieldCtx::make(2, 1);
  VarietySpec a1("A^1/F2", f2, Ambient{AmbientKind::kAffine, 1}, {});
  CountTable t = count_table(a1, 5);
  ClosedPointCensus c = closed_point_census(t);
  CHECK(c.depth() == 5);
  CHECK(c.at(1) == 2);
  CHECK(c.at(2) == 1);
  CHECK(c.at(3) == 2);
  CHECK(c.at(4) == 3);
  CHECK(c.at(5) == 6);
  CHECK_THROWS_AS(c.at(0), UsageError);
  CHECK_THROWS_AS(c.at(6), UsageError);
}

TEST_CASE("census satisfies the point count identity") {
  // N_n = sum_{d | n} d * a_d reassembles the counts from the census.
  auto f3 = FieldCtx::make(3, 1);
  VarietySpec ec = weierstrass(f3, 0, 0, 0, 1, 1, "ec-3");
  CountTable t = count_table(ec, 4);
  ClosedPointCensus c = closed_point_census(t);
  for (int n = 1; n <= 4; ++n) {
    Int reassembled = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) reassembled += Int(d) * c.at(d);
    CAPTURE(n);
    CHECK(reassembled == t.at(n));
  }
  for (int d = 1; d <= 4; ++d) CHECK(c.at(d) >= 0);
}

TEST_CASE("census rejects inconsistent count tables") {
  CountTable bad;
  bad.q = 2;
  bad.counts = {Int(2), Int(1)};  // (N_2 - N_1)/2 is not an integer
  CHECK_THROWS_AS(closed_point_census(bad), CheckFailure);
  CountTable negative;
  negative.q = 2;
  negative.counts = {Int(5), Int(1)};  // a_2 = (1 - 5)/2 < 0
  CHECK_THROWS_AS(closed_point_census(negative), CheckFailure);
  CountTable empty;
  empty.q = 2;
  CHECK_THROWS_AS(closed_point_census(empty), UsageError);
}

TEST_CASE("counts in characteristic two match the oracle") {
  // Supersingular-style curve y^2 + y = x^3 over F_2, long Weierstrass
  // form via a3 = 1.
  auto f2 = FieldCtx::make(2, 1);
  VarietySpec ec = weierstrass(f2, 0, 0, 1, 0, 0, "ec-2");
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(count_points(ec, n) == oracle_count(ec, n));
  }
}
