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

#include <algorithm>
#include <sstream>

namespace weilv {

namespace modarith {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw DomainError("modarith::inv: inverse of zero");
  std::int64_t t = 0, t1 = 1;
  std::uint64_t r = p, r1 = a;
  while (r1 != 0) {
    std::uint64_t q = r / r1;
    std::int64_t t2 = t - static_cast<std::int64_t>(q) * t1;
    t = t1;
    t1 = t2;
    std::uint64_t r2 = r - q * r1;
    r = r1;
    r1 = r2;
  }
  if (r != 1) throw DomainError("modarith::inv: argument not a unit");
  return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(p))
               : static_cast<std::uint64_t>(t);
}

}  // namespace modarith

namespace {

// Dense univariate polynomials over F_p, little-endian, used only for
// modulus construction and verification. Desk-scale degrees, so plain
// vectors are fine here.
using Poly = std::vector<std::uint64_t>;

int poly_deg(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

void poly_trim(Poly& f) { f.resize(static_cast<std::size_t>(poly_deg(f) + 1)); }

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = modarith::add(out[i + j], modarith::mul(a[i], b[j], p), p);
    }
  }
  poly_trim(out);
  return out;
}

// Remainder of a modulo the monic polynomial f.
Poly poly_rem_monic(Poly a, const Poly& f, std::uint64_t p) {
  const int df = poly_deg(f);
  int da = poly_deg(a);
  while (da >= df) {
    const std::uint64_t c = a[static_cast<std::size_t>(da)];
    if (c != 0) {
      for (int j = 0; j <= df; ++j) {
        const std::size_t at = static_cast<std::size_t>(da - df + j);
        a[at] = modarith::sub(
            a[at], modarith::mul(c, f[static_cast<std::size_t>(j)], p), p);
      }
    }
    --da;
  }
  poly_trim(a);
  return a;
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& f, std::uint64_t p) {
  Poly r{1};
  base = poly_rem_monic(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = poly_rem_monic(poly_mul(r, base, p), f, p);
    base = poly_rem_monic(poly_mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

// Remainder of a modulo b for arbitrary nonzero b.
Poly poly_rem(Poly a, const Poly& b, std::uint64_t p) {
  const int db = poly_deg(b);
  const std::uint64_t lead_inv =
      modarith::inv(b[static_cast<std::size_t>(db)], p);
  for (int da = poly_deg(a); da >= db; da = poly_deg(a)) {
    const std::uint64_t c =
        modarith::mul(a[static_cast<std::size_t>(da)], lead_inv, p);
    for (int j = 0; j <= db; ++j) {
      const std::size_t at = static_cast<std::size_t>(da - db + j);
      a[at] = modarith::sub(
          a[at], modarith::mul(c, b[static_cast<std::size_t>(j)], p), p);
    }
    poly_trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  while (poly_deg(b) >= 0) {
    Poly r = poly_rem(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  // Normalise to monic so callers can compare against {1}.
  const int d = poly_deg(a);
  if (d >= 0) {
    const std::uint64_t s =
        modarith::inv(a[static_cast<std::size_t>(d)], p);
    for (auto& c : a) c = modarith::mul(c, s, p);
  }
  return a;
}

bool poly_is_irreducible(const Poly& f, std::uint64_t p) {
  const int k = poly_deg(f);
  if (k < 1) return false;
  if (k == 1) return true;
  // f of degree k is irreducible iff it shares no root with any extension
  // F_{p^m} for m <= k/2; gcd(x^{p^m} - x, f) detects factors of degree
  // dividing m, and a proper factor of minimal degree d <= k/2 is caught
  // at m = d.
  Poly x{0, 1};
  Poly s = x;
  for (int m = 1; m <= k / 2; ++m) {
    s = poly_powmod(std::move(s), p, f, p);
    Poly diff = s;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = modarith::sub(diff[1], 1, p);
    poly_trim(diff);
    Poly g = poly_gcd(f, std::move(diff), p);
    if (poly_deg(g) != 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, int k) {
  if (!is_prime_u64(p)) {
    std::ostringstream os;
    os << "find_irreducible: characteristic " << p << " is not prime";
    throw UsageError(os.str());
  }
  if (k < 1 || k > kMaxExtensionDegree) {
    std::ostringstream os;
    os << "find_irreducible: extension degree " << k
       << " outside supported range [1, " << kMaxExtensionDegree << "]";
    throw UsageError(os.str());
  }
  if (k == 1) return {0, 1};

  // Monic candidates x^k + c_{k-1} x^{k-1} + ... + c_0 are ordered
  // lexicographically by (c_0, ..., c_{k-1}) with the constant term most
  // significant. An irreducible of degree >= 2 cannot be divisible by x,
  // so the enumeration fixes c_0 >= 1 and decodes the counter from its
  // least significant base-p digit into c_{k-1} downwards; the skipped
  // c_0 = 0 block is entirely reducible, so the first hit is still the
  // lexicographically smallest irreducible overall.
  Poly f(static_cast<std::size_t>(k + 1), 0);
  f[static_cast<std::size_t>(k)] = 1;
  for (std::uint64_t c0 = 1; c0 < p; ++c0) {
    f[0] = c0;
    for (std::uint64_t counter = 0;; ++counter) {
      std::uint64_t rem = counter;
      for (int j = k - 1; j >= 1; --j) {
        f[static_cast<std::size_t>(j)] = rem % p;
        rem /= p;
      }
      if (rem != 0) break;  // c_1..c_{k-1} exhausted for this c_0
      if (poly_is_irreducible(f, p)) return f;
    }
  }
  throw CheckFailure("find_irreducible: no irreducible polynomial found");
}

FieldCtx::FieldCtx(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), k_(poly_deg(modulus)), modulus_(std::move(modulus)) {
  neg_modulus_.resize(static_cast<std::size_t>(k_));
  for (int j = 0; j < k_; ++j) {
    const std::uint64_t m = modulus_[static_cast<std::size_t>(j)];
    neg_modulus_[static_cast<std::size_t>(j)] = m == 0 ? 0 : p_ - m;
  }
  fast_ = p_ < (std::uint64_t{1} << 29);

  cardinality_ = int_pow(Int(p_), static_cast<unsigned long>(k_));
  card_fits_u64_ = cardinality_.fits_ulong_p() ||
                   mpz_sizeinbase(cardinality_.get_mpz_t(), 2) <= 64;
  if (card_fits_u64_) {
    std::ostringstream os;
    os << cardinality_;
    cardinality_u64_ = std::stoull(os.str());
  }

  // Basis traces tr(g^j) make element traces a dot product. Computed once
  // here by summing Frobenius orbits of each basis power.
  basis_trace_.assign(static_cast<std::size_t>(k_), 0);
  std::uint64_t gj[kMaxExtensionDegree] = {0};
  std::uint64_t s[kMaxExtensionDegree];
  std::uint64_t acc[kMaxExtensionDegree];
  std::uint64_t tmp[kMaxExtensionDegree];
  for (int j = 0; j < k_; ++j) {
    raw_set_zero(gj);
    if (j == 0) {
      gj[0] = 1 % p_;
    } else {
      gj[j] = 1;
    }
    std::copy(gj, gj + k_, s);
    std::copy(gj, gj + k_, acc);
    for (int i = 1; i < k_; ++i) {
      raw_pow(s, p_, tmp);
      std::copy(tmp, tmp + k_, s);
      raw_add(acc, s, tmp);
      std::copy(tmp, tmp + k_, acc);
    }
    for (int i = 1; i < k_; ++i) {
      if (acc[i] != 0)
        throw CheckFailure("FieldCtx: basis trace is not in the prime field");
    }
    basis_trace_[static_cast<std::size_t>(j)] = acc[0];
  }
}

FieldCtxPtr FieldCtx::make(std::uint64_t p, int k) {
  return FieldCtxPtr(new FieldCtx(p, find_irreducible(p, k)));
}

FieldCtxPtr FieldCtx::with_modulus(std::uint64_t p,
                                   std::vector<std::uint64_t> modulus) {
  if (!is_prime_u64(p))
    throw UsageError("FieldCtx: characteristic is not prime");
  if (p >= (std::uint64_t{1} << 59))
    throw UsageError("FieldCtx: characteristic too large");
  const int k = poly_deg(modulus);
  if (k < 1 || k > kMaxExtensionDegree)
    throw UsageError("FieldCtx: modulus degree outside supported range");
  if (static_cast<int>(modulus.size()) != k + 1 ||
      modulus[static_cast<std::size_t>(k)] != 1)
    throw UsageError("FieldCtx: modulus must be monic");
  for (const auto c : modulus)
    if (c >= p) throw UsageError("FieldCtx: modulus coefficient not reduced");
  if (k == 1) {
    if (modulus[0] != 0)
      throw UsageError("FieldCtx: degree one modulus must be x");
  } else if (!poly_is_irreducible(modulus, p)) {
    throw UsageError("FieldCtx: modulus is reducible");
  }
  return FieldCtxPtr(new FieldCtx(p, std::move(modulus)));
}

std::uint64_t FieldCtx::cardinality_u64() const {
  if (!card_fits_u64_)
    throw UsageError("FieldCtx: cardinality does not fit in 64 bits");
  return cardinality_u64_;
}

void FieldCtx::raw_mul_wide(const std::uint64_t* a, const std::uint64_t* b,
                            std::uint64_t* out) const {
  unsigned __int128 t[2 * kMaxExtensionDegree - 1] = {0};
  for (int i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    const unsigned __int128 ai = a[i];
    for (int j = 0; j < k_; ++j) {
      t[i + j] = (t[i + j] + ai * b[j]) % p_;
    }
  }
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    const std::uint64_t r = static_cast<std::uint64_t>(t[i] % p_);
    if (r == 0) continue;
    for (int j = 0; j < k_; ++j) {
      t[i - k_ + j] =
          (t[i - k_ + j] + static_cast<unsigned __int128>(r) * neg_modulus_[j]) %
          p_;
    }
  }
  for (int i = 0; i < k_; ++i) out[i] = static_cast<std::uint64_t>(t[i] % p_);
}

void FieldCtx::raw_pow(const std::uint64_t* a, std::uint64_t e,
                       std::uint64_t* out) const {
  std::uint64_t base[kMaxExtensionDegree];
  std::uint64_t acc[kMaxExtensionDegree];
  std::uint64_t tmp[kMaxExtensionDegree];
  std::copy(a, a + k_, base);
  raw_set_zero(acc);
  acc[0] = 1 % p_;
  while (e > 0) {
    if (e & 1) {
      raw_mul(acc, base, tmp);
      std::copy(tmp, tmp + k_, acc);
    }
    e >>= 1;
    if (e == 0) break;
    raw_mul(base, base, tmp);
    std::copy(tmp, tmp + k_, base);
  }
  std::copy(acc, acc + k_, out);
}

void FieldCtx::raw_inv(const std::uint64_t* a, std::uint64_t* out) const {
  if (raw_is_zero(a)) throw DomainError("FieldCtx: inverse of zero");
  if (k_ == 1) {
    out[0] = modarith::inv(a[0], p_);
    return;
  }
  // Extended Euclid on (modulus, a), tracking only the cofactor of a.
  Poly r0 = modulus_;
  Poly r1(a, a + k_);
  poly_trim(r1);
  Poly s0{};
  Poly s1{1};
  while (poly_deg(r1) > 0) {
    // Divide r0 by r1 (r1 need not be monic).
    const int d1 = poly_deg(r1);
    const std::uint64_t lead_inv =
        modarith::inv(r1[static_cast<std::size_t>(d1)], p_);
    Poly q(static_cast<std::size_t>(poly_deg(r0) - d1 + 1), 0);
    Poly rem = r0;
    for (int d = poly_deg(rem); d >= d1; d = poly_deg(rem)) {
      const std::uint64_t c =
          modarith::mul(rem[static_cast<std::size_t>(d)], lead_inv, p_);
      q[static_cast<std::size_t>(d - d1)] = c;
      for (int j = 0; j <= d1; ++j) {
        const std::size_t at = static_cast<std::size_t>(d - d1 + j);
        rem[at] = modarith::sub(
            rem[at], modarith::mul(c, r1[static_cast<std::size_t>(j)], p_),
            p_);
      }
      poly_trim(rem);
      if (rem.empty()) break;
    }
    Poly s2 = s0;
    Poly qs1 = poly_mul(q, s1, p_);
    if (s2.size() < qs1.size()) s2.resize(qs1.size(), 0);
    for (std::size_t i = 0; i < qs1.size(); ++i)
      s2[i] = modarith::sub(s2[i], qs1[i], p_);
    poly_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (poly_deg(r1) != 0)
    throw CheckFailure("FieldCtx: inverse failed, modulus not irreducible?");
  const std::uint64_t scale = modarith::inv(r1[0], p_);
  raw_set_zero(out);
  for (std::size_t i = 0; i < s1.size(); ++i)
    out[i] = modarith::mul(s1[i], scale, p_);
}

// ---- FieldElement ---------------------------------------------------------

FieldElement FieldElement::zero(FieldCtxPtr ctx) {
  return FieldElement(std::move(ctx));
}

FieldElement FieldElement::one(FieldCtxPtr ctx) {
  FieldElement e(std::move(ctx));
  e.c_[0] = 1 % e.ctx_->characteristic();
  return e;
}

FieldElement FieldElement::constant(FieldCtxPtr ctx, std::uint64_t c) {
  FieldElement e(std::move(ctx));
  e.c_[0] = c % e.ctx_->characteristic();
  return e;
}

FieldElement FieldElement::generator(FieldCtxPtr ctx) {
  if (ctx->degree() == 1) return one(std::move(ctx));
  FieldElement e(std::move(ctx));
  e.c_[1] = 1;
  return e;
}

FieldElement FieldElement::from_coeffs(
    FieldCtxPtr ctx, const std::vector<std::uint64_t>& coeffs) {
  if (static_cast<int>(coeffs.size()) > ctx->degree())
    throw UsageError("FieldElement: coefficient vector longer than degree");
  FieldElement e(std::move(ctx));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] >= e.ctx_->characteristic())
      throw UsageError("FieldElement: coefficient not reduced mod p");
    e.c_[i] = coeffs[i];
  }
  return e;
}

void FieldElement::require_attached() const {
  if (!ctx_) throw UsageError("FieldElement: operation on detached element");
}

void FieldElement::require_same_ctx(const FieldElement& a,
                                    const FieldElement& b) {
  a.require_attached();
  b.require_attached();
  if (!a.ctx_->same(*b.ctx_))
    throw UsageError("FieldElement: mixed field contexts");
}

std::uint64_t FieldElement::coeff(int i) const {
  require_attached();
  if (i < 0 || i >= ctx_->degree())
    throw UsageError("FieldElement: coefficient index out of range");
  return c_[static_cast<std::size_t>(i)];
}

std::vector<std::uint64_t> FieldElement::coeffs() const {
  require_attached();
  return std::vector<std::uint64_t>(c_.begin(),
                                    c_.begin() + ctx_->degree());
}

bool FieldElement::is_zero() const {
  require_attached();
  return ctx_->raw_is_zero(c_.data());
}

bool FieldElement::is_one() const {
  require_attached();
  if (c_[0] != 1 % ctx_->characteristic()) return false;
  for (int i = 1; i < ctx_->degree(); ++i)
    if (c_[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_ctx(a, b);
  FieldElement out(a.ctx_);
  a.ctx_->raw_add(a.c_.data(), b.c_.data(), out.c_.data());
  return out;
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_ctx(a, b);
  FieldElement out(a.ctx_);
  a.ctx_->raw_sub(a.c_.data(), b.c_.data(), out.c_.data());
  return out;
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  FieldElement::require_same_ctx(a, b);
  FieldElement out(a.ctx_);
  a.ctx_->raw_mul(a.c_.data(), b.c_.data(), out.c_.data());
  return out;
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return a * b.inverse();
}

FieldElement FieldElement::operator-() const {
  require_attached();
  FieldElement out(ctx_);
  ctx_->raw_neg(c_.data(), out.c_.data());
  return out;
}

bool FieldElement::operator==(const FieldElement& other) const {
  require_same_ctx(*this, other);
  const int k = ctx_->degree();
  return std::equal(c_.begin(), c_.begin() + k, other.c_.begin());
}

FieldElement FieldElement::inverse() const {
  require_attached();
  FieldElement out(ctx_);
  ctx_->raw_inv(c_.data(), out.c_.data());
  return out;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  require_attached();
  FieldElement out(ctx_);
  ctx_->raw_pow(c_.data(), e, out.c_.data());
  return out;
}

FieldElement FieldElement::pow(const Int& e) const {
  require_attached();
  if (e < 0) return inverse().pow(Int(-e));
  FieldElement acc = one(ctx_);
  FieldElement base = *this;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return acc;
  for (std::size_t i = 0; i < bits; ++i) {
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = acc * base;
    if (i + 1 < bits) base = base * base;
  }
  return acc;
}

FieldElement FieldElement::frobenius(int i) const {
  require_attached();
  const int k = ctx_->degree();
  int steps = ((i % k) + k) % k;
  FieldElement out = *this;
  FieldElement tmp(ctx_);
  for (int s = 0; s < steps; ++s) {
    ctx_->raw_pow(out.c_.data(), ctx_->characteristic(), tmp.c_.data());
    out = tmp;
  }
  return out;
}

std::uint64_t FieldElement::trace_to_prime() const {
  require_attached();
  return ctx_->raw_trace(c_.data());
}

// ---- enumeration ----------------------------------------------------------

FieldElement element_at(const FieldCtxPtr& ctx, const Int& index) {
  if (index < 0 || index >= ctx->cardinality())
    throw UsageError("element_at: index outside field");
  const int k = ctx->degree();
  const Int p(ctx->characteristic());
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(k), 0);
  Int rem = index;
  for (int j = 0; j < k; ++j) {
    const Int div = int_pow(p, static_cast<unsigned long>(k - 1 - j));
    Int digit = rem / div;
    rem -= digit * div;
    coeffs[static_cast<std::size_t>(j)] = digit.get_ui();
  }
  return FieldElement::from_coeffs(ctx, coeffs);
}

void enumerate(const FieldCtxPtr& ctx, std::uint64_t budget,
               const std::function<void(const FieldElement&)>& fn) {
  if (ctx->cardinality() > Int(budget)) {
    throw BudgetError("enumerate: field larger than budget",
                      ctx->cardinality(), budget);
  }
  const int k = ctx->degree();
  const std::uint64_t p = ctx->characteristic();
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(k), 0);
  for (;;) {
    fn(FieldElement::from_coeffs(ctx, coeffs));
    // Advance the odometer; the constant coefficient is the most
    // significant digit, so the last coefficient ticks fastest.
    int j = k - 1;
    while (j >= 0) {
      if (++coeffs[static_cast<std::size_t>(j)] < p) break;
      coeffs[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) return;
  }
}

std::vector<FieldElement> all_elements(const FieldCtxPtr& ctx,
                                       std::uint64_t budget) {
  std::vector<FieldElement> out;
  if (ctx->cardinality_fits_u64())
    out.reserve(static_cast<std::size_t>(ctx->cardinality_u64()));
  enumerate(ctx, budget, [&out](const FieldElement& e) { out.push_back(e); });
  return out;
}

// ---- Embedding ------------------------------------------------------------

Embedding::Embedding(FieldCtxPtr source, FieldCtxPtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (source_->characteristic() != target_->characteristic())
    throw UsageError("Embedding: characteristics differ");
  const int j = source_->degree();
  const int k = target_->degree();
  if (k % j != 0)
    throw UsageError("Embedding: source degree does not divide target degree");

  // Exhaustive root search for the source modulus inside the target, in
  // canonical enumeration order; the first hit is the canonical image of
  // the source generator.
  const auto& m = source_->modulus();
  const std::uint64_t p = target_->characteristic();
  std::vector<std::uint64_t> cand(static_cast<std::size_t>(k), 0);
  std::uint64_t val[kMaxExtensionDegree];
  std::uint64_t tmp[kMaxExtensionDegree];
  bool found = false;
  for (;;) {
    // Horner evaluation of the source modulus at cand.
    target_->raw_set_zero(val);
    for (int d = j; d >= 0; --d) {
      target_->raw_mul(val, cand.data(), tmp);
      tmp[0] = modarith::add(tmp[0], m[static_cast<std::size_t>(d)] % p, p);
      std::copy(tmp, tmp + k, val);
    }
    if (target_->raw_is_zero(val)) {
      found = true;
      break;
    }
    int pos = k - 1;
    while (pos >= 0) {
      if (++cand[static_cast<std::size_t>(pos)] < p) break;
      cand[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  if (!found)
    throw CheckFailure("Embedding: source modulus has no root in target");
  root_ = FieldElement::from_coeffs(target_, cand);

  root_powers_.assign(static_cast<std::size_t>(j) * k, 0);
  FieldElement pw = FieldElement::one(target_);
  for (int i = 0; i < j; ++i) {
    std::copy(pw.words(), pw.words() + k,
              root_powers_.begin() + static_cast<std::ptrdiff_t>(i) * k);
    if (i + 1 < j) pw = pw * root_;
  }
}

void Embedding::raw_apply(const std::uint64_t* src, std::uint64_t* dst) const {
  const int j = source_->degree();
  const int k = target_->degree();
  const std::uint64_t p = target_->characteristic();
  for (int w = 0; w < k; ++w) {
    unsigned __int128 acc = 0;
    for (int i = 0; i < j; ++i) {
      acc += static_cast<unsigned __int128>(src[i]) *
             root_powers_[static_cast<std::size_t>(i) * k + w];
    }
    dst[w] = static_cast<std::uint64_t>(acc % p);
  }
}

FieldElement Embedding::operator()(const FieldElement& x) const {
  if (!x.attached() || !x.ctx()->same(*source_))
    throw UsageError("Embedding: element not in the source field");
  FieldElement out = FieldElement::zero(target_);
  raw_apply(x.words(), out.mutable_words());
  return out;
}

}  // namespace weilv
