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

#include "weilv/fixtures.hpp"

#include <sstream>
#include <utility>

#include "weilv/algebra.hpp"
#include "weilv/ffield.hpp"

namespace weilv {

namespace {

FieldElement fe_mod_p(const FieldCtxPtr& ctx, long v) {
  const long p = static_cast<long>(ctx->characteristic());
  long r = v % p;
  if (r < 0) r += p;
  return FieldElement::constant(ctx, static_cast<std::uint64_t>(r));
}

// N_n for P^d over F_q.
std::function<Int(int)> projective_space_oracle(Int q, int d) {
  return [q = std::move(q), d](int n) -> Int {
    Int total = 0;
    const Int qn = int_pow(q, static_cast<unsigned long>(n));
    for (int i = 0; i <= d; ++i)
      total += int_pow(qn, static_cast<unsigned long>(i));
    return total;
  };
}

// N_n for Gr(1,3) over F_q: the Gaussian binomial [4 choose 2]_{q^n}
// evaluates to (q^{2n} + 1)(q^{2n} + q^n + 1).
std::function<Int(int)> grassmannian_oracle(Int q) {
  return [q = std::move(q)](int n) -> Int {
    const Int qn = int_pow(q, static_cast<unsigned long>(n));
    const Int qn2 = qn * qn;
    return (qn2 + 1) * (qn2 + qn + 1);
  };
}

Fixture projective_space(std::uint64_t p, int a, int d) {
  auto ctx = FieldCtx::make(p, a);
  std::ostringstream label;
  label << "P^" << d << "/F_" << ctx->cardinality();
  Fixture f{VarietySpec(label.str(), ctx,
                        Ambient{AmbientKind::kProjective, d}, {}),
            projective_space_oracle(ctx->cardinality(), d),
            /*smooth=*/true,
            /*dimension=*/d,
            /*genus=*/d == 1 ? 0 : -1,
            /*multidegrees=*/{}};
  return f;
}

Fixture elliptic(std::uint64_t p, long a1, long a2, long a3, long a4,
                 long a6, std::string label) {
  if (!weierstrass_is_smooth(p, a1, a2, a3, a4, a6))
    throw CheckFailure("fixture catalog: singular Weierstrass cubic " +
                       label);
  Fixture f{weierstrass_curve(p, a1, a2, a3, a4, a6, std::move(label)),
            nullptr,
            /*smooth=*/true,
            /*dimension=*/1,
            /*genus=*/1,
            /*multidegrees=*/{3}};
  return f;
}

// Diagonal hypersurface x_0^e + ... + x_dim^e = 0 in P^dim over F_p.
// Smooth exactly when p does not divide e: the partial derivatives
// e x_i^{e-1} vanish simultaneously only at the origin.
Fixture diagonal(std::uint64_t p, int dim, int e, std::string label,
                 int genus) {
  if (static_cast<std::uint64_t>(e) % p == 0)
    throw CheckFailure(
        "fixture catalog: diagonal exponent divisible by the "
        "characteristic in " +
        label);
  auto ctx = FieldCtx::make(p, 1);
  MultiPoly f(ctx, dim + 1);
  for (int i = 0; i <= dim; ++i) {
    MultiPoly::ExpVec exps(static_cast<std::size_t>(dim + 1), 0);
    exps[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(e);
    f.add_term(exps, FieldElement::one(ctx));
  }
  Fixture fx{VarietySpec(std::move(label), ctx,
                         Ambient{AmbientKind::kProjective, dim}, {f}),
             nullptr,
             /*smooth=*/true,
             /*dimension=*/dim - 1,
             genus,
             /*multidegrees=*/{e}};
  return fx;
}

// Gr(1,3) under the Pluecker embedding: the quadric
// x0 x5 - x1 x4 + x2 x3 = 0 in P^5. Its partial derivatives are signed
// coordinate swaps, so the quadric is smooth in every characteristic.
Fixture grassmannian(std::uint64_t p) {
  auto ctx = FieldCtx::make(p, 1);
  MultiPoly f(ctx, 6);
  const FieldElement one = FieldElement::one(ctx);
  f.add_term({1, 0, 0, 0, 0, 1}, one);
  f.add_term({0, 1, 0, 0, 1, 0}, -one);
  f.add_term({0, 0, 1, 1, 0, 0}, one);
  std::ostringstream label;
  label << "grassmannian-gr13/F_" << p;
  Fixture fx{VarietySpec(label.str(), ctx,
                         Ambient{AmbientKind::kProjective, 5}, {f}),
             grassmannian_oracle(Int(static_cast<unsigned long>(p))),
             /*smooth=*/true,
             /*dimension=*/4,
             /*genus=*/-1,
             /*multidegrees=*/{2}};
  return fx;
}

}  // namespace

bool weierstrass_is_smooth(std::uint64_t p, long a1, long a2, long a3,
                           long a4, long a6) {
  const Int A1(a1), A2(a2), A3(a3), A4(a4), A6(a6);
  const Int b2 = A1 * A1 + 4 * A2;
  const Int b4 = 2 * A4 + A1 * A3;
  const Int b6 = A3 * A3 + 4 * A6;
  const Int b8 = A1 * A1 * A6 + 4 * A2 * A6 - A1 * A3 * A4 + A2 * A3 * A3 -
                 A4 * A4;
  const Int disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 +
                   9 * b2 * b4 * b6;
  return !mpz_divisible_ui_p(disc.get_mpz_t(), static_cast<unsigned long>(p));
}

VarietySpec weierstrass_curve(std::uint64_t p, long a1, long a2, long a3,
                              long a4, long a6, std::string label) {
  auto ctx = FieldCtx::make(p, 1);
  MultiPoly f(ctx, 3);
  f.add_term({0, 2, 1}, fe_mod_p(ctx, 1));
  f.add_term({1, 1, 1}, fe_mod_p(ctx, a1));
  f.add_term({0, 1, 2}, fe_mod_p(ctx, a3));
  f.add_term({3, 0, 0}, fe_mod_p(ctx, -1));
  f.add_term({2, 0, 1}, fe_mod_p(ctx, -a2));
  f.add_term({1, 0, 2}, fe_mod_p(ctx, -a4));
  f.add_term({0, 0, 3}, fe_mod_p(ctx, -a6));
  return VarietySpec(std::move(label), ctx,
                     Ambient{AmbientKind::kProjective, 2}, {f});
}

std::vector<Fixture> catalog() {
  std::vector<Fixture> cat;
  for (const auto& [p, a] : {std::pair<std::uint64_t, int>{2, 1},
                             {3, 1},
                             {2, 2},
                             {5, 1}}) {
    for (int d = 1; d <= 3; ++d) cat.push_back(projective_space(p, a, d));
  }

  // Weierstrass cubics (y^2 z + a1 xyz + a3 y z^2 = x^3 + a2 x^2 z +
  // a4 x z^2 + a6 z^3), each with nonvanishing discriminant.
  cat.push_back(elliptic(2, 0, 0, 1, 0, 0, "elliptic-2a"));
  cat.push_back(elliptic(5, 0, 0, 0, 1, 1, "elliptic-5a"));
  cat.push_back(elliptic(5, 1, 0, 0, 0, 1, "elliptic-5b"));
  cat.push_back(elliptic(7, 0, 0, 0, 1, 1, "elliptic-7a"));
  cat.push_back(elliptic(7, 0, 0, 0, 2, 3, "elliptic-7b"));
  cat.push_back(elliptic(11, 0, 0, 0, 1, 0, "elliptic-11a"));
  cat.push_back(elliptic(11, 0, 0, 0, 0, 1, "elliptic-11b"));
  cat.push_back(elliptic(13, 0, 0, 0, 1, 1, "elliptic-13a"));

  // Diagonal plane cubics: smooth genus-1 curves for p not dividing 3.
  for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
    std::ostringstream label;
    label << "diagonal-cubic/F_" << p;
    cat.push_back(diagonal(p, 2, 3, label.str(), /*genus=*/1));
  }

  // Diagonal surfaces in P^3.
  cat.push_back(diagonal(3, 3, 2, "diagonal-quadric-surface/F_3", -1));
  cat.push_back(diagonal(5, 3, 2, "diagonal-quadric-surface/F_5", -1));
  cat.push_back(diagonal(7, 3, 3, "diagonal-cubic-surface/F_7", -1));

  cat.push_back(grassmannian(2));
  cat.push_back(grassmannian(3));
  return cat;
}

const Fixture& fixture_by_label(const std::vector<Fixture>& cat,
                                std::string_view label) {
  for (const auto& f : cat)
    if (f.variety.label() == label) return f;
  throw UsageError("fixture_by_label: no fixture named \"" +
                   std::string(label) + "\"");
}

int max_depth_within_budget(const VarietySpec& variety, int cap,
                            std::uint64_t budget) {
  int best = 0;
  for (int n = 1; n <= cap; ++n) {
    if (variety.base_field()->degree() * n > kMaxExtensionDegree) break;
    if (enumeration_cost(variety, n) > Int(budget)) break;
    best = n;
  }
  return best;
}

}  // namespace weilv
