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

#include "weilv/ffield.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

using weilv::BudgetError;
using weilv::DomainError;
using weilv::Embedding;
using weilv::FieldCtx;
using weilv::FieldCtxPtr;
using weilv::FieldElement;
using weilv::Int;
using weilv::UsageError;

namespace {

// Reference irreducibility test for small monic polynomials over F_p:
// a quadratic or cubic is irreducible iff it has no roots; a quartic is
// irreducible iff it has no roots and no irreducible quadratic factor.
// Independent of the library's gcd-based test.
bool oracle_irreducible(const std::vector<std::uint64_t>& f,
                        std::uint64_t p) {
  const int deg = static_cast<int>(f.size()) - 1;
  REQUIRE(deg >= 2);
  REQUIRE(deg <= 4);
  auto eval = [&](std::uint64_t x) {
    std::uint64_t acc = 0;
    for (int i = deg; i >= 0; --i)
      acc = (acc * x + f[static_cast<std::size_t>(i)]) % p;
    return acc;
  };
  for (std::uint64_t x = 0; x < p; ++x)
    if (eval(x) == 0) return false;
  if (deg < 4) return true;
  // Quartic: try all monic quadratic divisors q(x) = x^2 + bx + c by
  // explicit long division.
  for (std::uint64_t b = 0; b < p; ++b) {
    for (std::uint64_t c = 0; c < p; ++c) {
      std::vector<std::uint64_t> r = f;
      for (int d = 4; d >= 2; --d) {
        const std::uint64_t lead = r[static_cast<std::size_t>(d)];
        if (lead == 0) continue;
        r[static_cast<std::size_t>(d)] = 0;
        r[static_cast<std::size_t>(d - 1)] =
            (r[static_cast<std::size_t>(d - 1)] + (p - lead % p) * b) % p;
        r[static_cast<std::size_t>(d - 2)] =
            (r[static_cast<std::size_t>(d - 2)] + (p - lead % p) * c) % p;
      }
      if (r[0] % p == 0 && r[1] % p == 0) return false;
    }
  }
  return true;
}

// Lexicographically first irreducible monic polynomial of degree k over
// F_p, with the constant term as the most significant position, found by
// direct enumeration against the reference test above.
std::vector<std::uint64_t> oracle_first_irreducible(std::uint64_t p, int k) {
  std::vector<std::uint64_t> f(static_cast<std::size_t>(k) + 1, 0);
  f[static_cast<std::size_t>(k)] = 1;
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rem = idx;
    for (int j = k - 1; j >= 0; --j) {
      f[static_cast<std::size_t>(j)] = rem % p;
      rem /= p;
    }
    if (oracle_irreducible(f, p)) return f;
  }
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("scalar modular arithmetic") {
  CHECK(weilv::modarith::pow(3, 4, 7) == 4);
  CHECK(weilv::modarith::pow(2, 0, 5) == 1);
  for (std::uint64_t p : {2ull, 3ull, 5ull, 13ull, 101ull}) {
    for (std::uint64_t a = 1; a < p; ++a) {
      const std::uint64_t ia = weilv::modarith::inv(a, p);
      CHECK(weilv::modarith::mul(a, ia, p) == 1 % p);
      CHECK(weilv::modarith::pow(a, p - 1, p) == 1 % p);
    }
  }
  CHECK_THROWS_AS(weilv::modarith::inv(0, 7), DomainError);
}

TEST_CASE("canonical modulus matches enumeration oracle") {
  // Small (p, k) pairs where the brute-force oracle is cheap.
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{
           {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {13, 2}}) {
    CAPTURE(p);
    CAPTURE(k);
    CHECK(weilv::find_irreducible(p, k) == oracle_first_irreducible(p, k));
  }
  // Frozen values re-derived by the oracle above: x^2 + 1 over F_3 and
  // x^4 + x^3 + 1 over F_2.
  CHECK(weilv::find_irreducible(3, 2) ==
        std::vector<std::uint64_t>{1, 0, 1});
  CHECK(weilv::find_irreducible(2, 4) ==
        std::vector<std::uint64_t>{1, 0, 0, 1, 1});
  CHECK(weilv::find_irreducible(5, 1) == std::vector<std::uint64_t>{0, 1});
}

TEST_CASE("field context validation") {
  CHECK_THROWS_AS(FieldCtx::make(4, 2), UsageError);
  CHECK_THROWS_AS(FieldCtx::make(1, 1), UsageError);
  CHECK_THROWS_AS(FieldCtx::make(5, 0), UsageError);
  CHECK_THROWS_AS(FieldCtx::make(5, weilv::kMaxExtensionDegree + 1),
                  UsageError);
  // x^2 + 2 = (x-1)(x+1) over F_3 is reducible.
  CHECK_THROWS_AS(FieldCtx::with_modulus(3, {2, 0, 1}), UsageError);
  // Non-monic and unreduced moduli are rejected.
  CHECK_THROWS_AS(FieldCtx::with_modulus(3, {1, 0, 2}), UsageError);
  CHECK_THROWS_AS(FieldCtx::with_modulus(3, {4, 0, 1}), UsageError);

  auto f9 = FieldCtx::make(3, 2);
  CHECK(f9->characteristic() == 3);
  CHECK(f9->degree() == 2);
  CHECK(f9->cardinality() == 9);
  CHECK(f9->cardinality_u64() == 9);
  CHECK(f9->modulus() == std::vector<std::uint64_t>{1, 0, 1});

  auto f9b = FieldCtx::make(3, 2);
  CHECK(f9->same(*f9b));
  auto f9c = FieldCtx::with_modulus(3, {2, 1, 1});
  CHECK_FALSE(f9->same(*f9c));
}

TEST_CASE("arithmetic in F_4") {
  auto f4 = FieldCtx::make(2, 2);
  const auto g = FieldElement::generator(f4);
  const auto one = FieldElement::one(f4);
  // With modulus x^2 + x + 1: g^2 = g + 1, so (g+1)^2 = g^2 + 1 = g.
  CHECK(g * g == g + one);
  CHECK((g + one) * (g + one) == g);
  CHECK(g * (g + one) == one);
  CHECK(g.pow(3) == one);
  CHECK(g.inverse() == g + one);
}

TEST_CASE("field axioms hold on every element of small fields") {
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, int>>{
           {2, 3}, {3, 2}, {5, 1}, {7, 1}}) {
    CAPTURE(p);
    CAPTURE(k);
    auto ctx = FieldCtx::make(p, k);
    const auto elems = weilv::all_elements(ctx);
    REQUIRE(elems.size() == ctx->cardinality_u64());
    const auto zero = FieldElement::zero(ctx);
    const auto one = FieldElement::one(ctx);
    for (const auto& a : elems) {
      CHECK(a + zero == a);
      CHECK(a * one == a);
      CHECK(a + (-a) == zero);
      CHECK(a - a == zero);
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == one);
        CHECK(a / a == one);
      }
      for (const auto& b : elems) {
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        for (const auto& c : elems) {
          CHECK((a + b) + c == a + (b + c));
          CHECK((a * b) * c == a * (b * c));
          CHECK(a * (b + c) == a * b + a * c);
        }
      }
    }
  }
}

TEST_CASE("multiplicative structure of F_9") {
  auto f9 = FieldCtx::make(3, 2);
  const auto elems = weilv::all_elements(f9);
  const auto one = FieldElement::one(f9);

  // Product of all nonzero elements is -1 (Wilson in a finite field).
  auto prod = one;
  for (const auto& a : elems)
    if (!a.is_zero()) prod = prod * a;
  CHECK(prod == -one);

  // x^(q-1) = 1 and x^q = x, with both word and big-integer exponents.
  for (const auto& a : elems) {
    CHECK(a.pow(Int(9)) == a);
    if (!a.is_zero()) {
      CHECK(a.pow(std::uint64_t{8}) == one);
      CHECK(a.pow(Int(8)) == one);
      CHECK(a.pow(Int(-1)) == a.inverse());
    }
  }
}

TEST_CASE("frobenius is a field automorphism fixing the prime field") {
  auto ctx = FieldCtx::make(3, 4);
  const auto elems = weilv::all_elements(ctx);
  for (const auto& a : elems) {
    CHECK(a.frobenius() == a.pow(std::uint64_t{3}));
    CHECK(a.frobenius(2) == a.frobenius().frobenius());
    CHECK(a.frobenius(4) == a);
    CHECK(a.frobenius(0) == a);
  }
  for (std::size_t i = 0; i < elems.size(); i += 7) {
    for (std::size_t j = 0; j < elems.size(); j += 11) {
      const auto &a = elems[i], &b = elems[j];
      CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
      CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
    }
  }
  // Fixed points of the square of Frobenius form the subfield F_9.
  int fixed = 0;
  for (const auto& a : elems)
    if (a.frobenius(2) == a) ++fixed;
  CHECK(fixed == 9);
  for (std::uint64_t c = 0; c < 3; ++c) {
    const auto a = FieldElement::constant(ctx, c);
    CHECK(a.frobenius() == a);
  }
}

TEST_CASE("trace to the prime field") {
  auto f4 = FieldCtx::make(2, 2);
  const auto g = FieldElement::generator(f4);
  const auto one = FieldElement::one(f4);
  CHECK(FieldElement::zero(f4).trace_to_prime() == 0);
  CHECK(one.trace_to_prime() == 0);
  CHECK(g.trace_to_prime() == 1);
  CHECK((g + one).trace_to_prime() == 1);

  // Trace agrees with the explicit Frobenius orbit sum and is additive.
  auto ctx = FieldCtx::make(5, 3);
  const auto elems = weilv::all_elements(ctx);
  for (std::size_t i = 0; i < elems.size(); i += 3) {
    const auto& a = elems[i];
    auto orbit = a + a.frobenius(1) + a.frobenius(2);
    CHECK(orbit == FieldElement::constant(ctx, a.trace_to_prime()));
  }
  for (std::size_t i = 0; i < elems.size(); i += 17) {
    for (std::size_t j = 0; j < elems.size(); j += 13) {
      const auto &a = elems[i], &b = elems[j];
      CHECK((a + b).trace_to_prime() ==
            (a.trace_to_prime() + b.trace_to_prime()) % 5);
    }
  }
}

TEST_CASE("canonical enumeration order") {
  auto f5 = FieldCtx::make(5, 1);
  const auto elems = weilv::all_elements(f5);
  REQUIRE(elems.size() == 5);
  for (std::uint64_t c = 0; c < 5; ++c)
    CHECK(elems[c] == FieldElement::constant(f5, c));

  // In F_4 the order is 0, g, 1, 1 + g: the constant coefficient is the
  // most significant digit of the element index.
  auto f4 = FieldCtx::make(2, 2);
  const auto e4 = weilv::all_elements(f4);
  REQUIRE(e4.size() == 4);
  const auto g = FieldElement::generator(f4);
  const auto one = FieldElement::one(f4);
  CHECK(e4[0] == FieldElement::zero(f4));
  CHECK(e4[1] == g);
  CHECK(e4[2] == one);
  CHECK(e4[3] == one + g);

  // element_at agrees with enumeration, and all elements are distinct.
  auto f27 = FieldCtx::make(3, 3);
  const auto e27 = weilv::all_elements(f27);
  REQUIRE(e27.size() == 27);
  std::set<std::vector<std::uint64_t>> seen;
  for (std::size_t i = 0; i < e27.size(); ++i) {
    CHECK(weilv::element_at(f27, Int(static_cast<unsigned long>(i))) ==
          e27[i]);
    seen.insert(e27[i].coeffs());
  }
  CHECK(seen.size() == 27);
  CHECK_THROWS_AS(weilv::element_at(f27, Int(27)), UsageError);
}

TEST_CASE("enumeration budget is enforced up front") {
  auto f32 = FieldCtx::make(2, 5);
  int visited = 0;
  try {
    weilv::enumerate(f32, 16, [&](const FieldElement&) { ++visited; });
    CHECK(false);
  } catch (const BudgetError& e) {
    CHECK(e.required() == 32);
    CHECK(e.budget() == 16);
  }
  CHECK(visited == 0);
  CHECK(weilv::all_elements(f32, 32).size() == 32);
}

TEST_CASE("embeddings are deterministic field homomorphisms") {
  auto f2 = FieldCtx::make(2, 1);
  auto f4 = FieldCtx::make(2, 2);
  auto f16 = FieldCtx::make(2, 4);

  Embedding e24(f2, f16);
  CHECK(e24(FieldElement::zero(f2)).is_zero());
  CHECK(e24(FieldElement::one(f2)).is_one());

  Embedding e(f4, f16);
  const auto r = e.generator_image();
  // The image of the F_4 generator must satisfy its minimal polynomial
  // x^2 + x + 1 inside F_16.
  CHECK((r * r + r + FieldElement::one(f16)).is_zero());
  const auto dom = weilv::all_elements(f4);
  for (const auto& a : dom) {
    for (const auto& b : dom) {
      CHECK(e(a + b) == e(a) + e(b));
      CHECK(e(a * b) == e(a) * e(b));
    }
  }
  // Injectivity on a field: distinct inputs stay distinct.
  for (std::size_t i = 0; i < dom.size(); ++i)
    for (std::size_t j = i + 1; j < dom.size(); ++j)
      CHECK_FALSE(e(dom[i]) == e(dom[j]));

  // Same embedding built twice picks the same root.
  Embedding e2(f4, f16);
  CHECK(e2.generator_image() == r);

  auto f9 = FieldCtx::make(3, 2);
  auto f81 = FieldCtx::make(3, 4);
  Embedding e39(FieldCtx::make(3, 1), f9);
  for (std::uint64_t c = 0; c < 3; ++c) {
    CHECK(e39(FieldElement::constant(FieldCtx::make(3, 1), c)) ==
          FieldElement::constant(f9, c));
  }
  Embedding e99(f9, f81);
  const auto r9 = e99.generator_image();
  CHECK((r9 * r9 + FieldElement::one(f81)).is_zero());

  auto f8 = FieldCtx::make(2, 3);
  CHECK_THROWS_AS(Embedding(f4, f8), UsageError);
  CHECK_THROWS_AS(Embedding(f2, f9), UsageError);
}

TEST_CASE("element misuse raises usage errors") {
  auto f5 = FieldCtx::make(5, 1);
  auto f7 = FieldCtx::make(7, 1);
  const auto a = FieldElement::constant(f5, 2);
  const auto b = FieldElement::constant(f7, 2);
  CHECK_THROWS_AS(a + b, UsageError);
  CHECK_THROWS_AS(a * b, UsageError);
  CHECK_THROWS_AS(FieldElement::zero(f5).inverse(), DomainError);
  CHECK_THROWS_AS(FieldElement::from_coeffs(f5, {5}), UsageError);
  CHECK_THROWS_AS(FieldElement::from_coeffs(f5, {0, 1}), UsageError);
  FieldElement detached;
  CHECK_THROWS_AS(detached + detached, UsageError);

  // Structurally equal contexts from separate make calls interoperate.
  auto f5b = FieldCtx::make(5, 1);
  CHECK(a + FieldElement::constant(f5b, 3) == FieldElement::zero(f5));
}

TEST_CASE("alternative modulus gives an isomorphic field") {
  // x^2 + x + 2 is irreducible over F_3 (no roots), giving a second
  // presentation of F_9 that must embed into the canonical one.
  auto canon = FieldCtx::make(3, 2);
  auto alt = FieldCtx::with_modulus(3, {2, 1, 1});
  Embedding iso(alt, canon);
  const auto dom = weilv::all_elements(alt);
  std::set<std::vector<std::uint64_t>> image;
  for (const auto& a : dom) image.insert(iso(a).coeffs());
  CHECK(image.size() == 9);
}

TEST_CASE("high-degree extensions construct promptly with valid moduli") {
  // The modulus search must not wade through the x-divisible block: a
  // degree >= 2 irreducible has a nonzero constant term, and fields near
  // the supported maximum have to come up in well under a second.
  const std::pair<std::uint64_t, int> fields[] = {
      {2, 24}, {3, 16}, {5, 12}, {7, 9}, {13, 6}};
  for (const auto& [p, k] : fields) {
    CAPTURE(p);
    CAPTURE(k);
    const auto ctx = FieldCtx::make(p, k);
    const auto& m = ctx->modulus();
    REQUIRE(static_cast<int>(m.size()) == k + 1);
    CHECK(m.back() == 1);   // monic
    CHECK(m.front() != 0);  // not divisible by x
    // Frobenius has exact order k on a basis generator.
    const auto g = FieldElement::generator(ctx);
    CHECK(g.frobenius(k) == g);
    CHECK_FALSE(g.frobenius(1) == g);
    CHECK(g.trace_to_prime() < p);
    CHECK(g.pow(ctx->cardinality() - 1) == FieldElement::one(ctx));
  }
}
