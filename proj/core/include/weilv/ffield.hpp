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

// Arithmetic in finite fields F_{p^k}, realised as polynomial residues
// modulo a monic irreducible modulus over the prime field. Elements are
// little-endian coefficient vectors; the modulus for a given (p, k) is
// chosen deterministically, so two contexts built from the same parameters
// are interchangeable.

#ifndef WEILV_FFIELD_HPP_
#define WEILV_FFIELD_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "weilv/common.hpp"

namespace weilv {

// Largest supported extension degree. Requests beyond it are refused with
// UsageError; the element storage below is sized for this cap.
inline constexpr int kMaxExtensionDegree = 24;

namespace modarith {

// Scalar arithmetic modulo a word-sized prime.
inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

}  // namespace modarith

// Returns the lexicographically smallest monic irreducible polynomial of
// degree k over F_p, as a little-endian coefficient vector of length k+1.
// Candidates are ordered with the constant term most significant. For
// k == 1 the result is x itself.
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, int k);

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// An immutable description of F_{p^k}: the characteristic, the extension
// degree and the monic irreducible modulus. All element operations are
// defined relative to a context; contexts compare structurally.
//
// The raw_* members operate on bare coefficient arrays of length
// degree(). They perform no validation and exist for inner loops that
// cannot afford FieldElement overhead.
class FieldCtx {
 public:
  // Builds F_{p^k} with the canonical modulus from find_irreducible.
  static FieldCtxPtr make(std::uint64_t p, int k);

  // Builds F_{p^k} with a caller-supplied monic irreducible modulus
  // (little-endian, degree k). Irreducibility is verified.
  static FieldCtxPtr with_modulus(std::uint64_t p,
                                  std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }
  const Int& cardinality() const { return cardinality_; }
  bool cardinality_fits_u64() const { return card_fits_u64_; }
  std::uint64_t cardinality_u64() const;

  bool same(const FieldCtx& other) const {
    return this == &other ||
           (p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_);
  }

  // ---- raw kernels -------------------------------------------------------

  void raw_set_zero(std::uint64_t* out) const {
    for (int i = 0; i < k_; ++i) out[i] = 0;
  }

  bool raw_is_zero(const std::uint64_t* a) const {
    for (int i = 0; i < k_; ++i)
      if (a[i] != 0) return false;
    return true;
  }

  void raw_add(const std::uint64_t* a, const std::uint64_t* b,
               std::uint64_t* out) const {
    for (int i = 0; i < k_; ++i) out[i] = modarith::add(a[i], b[i], p_);
  }

  void raw_sub(const std::uint64_t* a, const std::uint64_t* b,
               std::uint64_t* out) const {
    for (int i = 0; i < k_; ++i) out[i] = modarith::sub(a[i], b[i], p_);
  }

  void raw_neg(const std::uint64_t* a, std::uint64_t* out) const {
    for (int i = 0; i < k_; ++i) out[i] = a[i] == 0 ? 0 : p_ - a[i];
  }

  // out = a * b mod modulus. out must not alias a or b. For small
  // characteristics the schoolbook products are accumulated in plain
  // words, with the reduction folding in precomputed negated modulus
  // rows; the bound (2k-1)(p-1)^2 < 2^64 keeps every partial sum exact.
  void raw_mul(const std::uint64_t* a, const std::uint64_t* b,
               std::uint64_t* out) const {
    if (k_ == 1) {
      out[0] = modarith::mul(a[0], b[0], p_);
      return;
    }
    if (fast_) {
      std::uint64_t t[2 * kMaxExtensionDegree - 1] = {0};
      for (int i = 0; i < k_; ++i) {
        const std::uint64_t ai = a[i];
        if (ai == 0) continue;
        for (int j = 0; j < k_; ++j) t[i + j] += ai * b[j];
      }
      for (int i = 2 * k_ - 2; i >= k_; --i) {
        const std::uint64_t r = t[i] % p_;
        if (r == 0) continue;
        const std::uint64_t* row = neg_modulus_.data();
        for (int j = 0; j < k_; ++j) t[i - k_ + j] += r * row[j];
      }
      for (int i = 0; i < k_; ++i) out[i] = t[i] % p_;
    } else {
      raw_mul_wide(a, b, out);
    }
  }

  void raw_pow(const std::uint64_t* a, std::uint64_t e,
               std::uint64_t* out) const;
  void raw_inv(const std::uint64_t* a, std::uint64_t* out) const;

  // Trace to the prime subfield, returned as a residue mod p. Linear in
  // the coefficients, evaluated against a precomputed basis-trace table.
  std::uint64_t raw_trace(const std::uint64_t* a) const {
    unsigned __int128 acc = 0;
    for (int i = 0; i < k_; ++i)
      acc += static_cast<unsigned __int128>(a[i]) * basis_trace_[i];
    return static_cast<std::uint64_t>(acc % p_);
  }

 private:
  FieldCtx(std::uint64_t p, std::vector<std::uint64_t> modulus);

  void raw_mul_wide(const std::uint64_t* a, const std::uint64_t* b,
                    std::uint64_t* out) const;

  std::uint64_t p_;
  int k_;
  std::vector<std::uint64_t> modulus_;
  std::vector<std::uint64_t> neg_modulus_;
  std::vector<std::uint64_t> basis_trace_;
  Int cardinality_;
  bool card_fits_u64_ = false;
  std::uint64_t cardinality_u64_ = 0;
  bool fast_ = false;
};

// An element of F_{p^k}: coefficients of the residue class representative
// in the polynomial basis 1, g, ..., g^{k-1}, little-endian. Mixing
// elements of structurally different contexts raises UsageError.
class FieldElement {
 public:
  FieldElement() = default;

  static FieldElement zero(FieldCtxPtr ctx);
  static FieldElement one(FieldCtxPtr ctx);
  // The residue class of the scalar c (reduced mod p).
  static FieldElement constant(FieldCtxPtr ctx, std::uint64_t c);
  // The basis generator g (equal to one() when degree is 1).
  static FieldElement generator(FieldCtxPtr ctx);
  // Coefficients little-endian; shorter vectors are zero-padded. Each
  // coefficient must already be reduced: values >= p are rejected.
  static FieldElement from_coeffs(FieldCtxPtr ctx,
                                  const std::vector<std::uint64_t>& coeffs);

  const FieldCtxPtr& ctx() const { return ctx_; }
  bool attached() const { return ctx_ != nullptr; }
  std::uint64_t coeff(int i) const;
  std::vector<std::uint64_t> coeffs() const;
  const std::uint64_t* words() const { return c_.data(); }
  std::uint64_t* mutable_words() { return c_.data(); }

  bool is_zero() const;
  bool is_one() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;
  bool operator==(const FieldElement& other) const;
  bool operator!=(const FieldElement& other) const { return !(*this == other); }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement pow(const Int& e) const;

  // The i-th Frobenius power x -> x^{p^i}. frobenius(0) is the identity;
  // i is reduced modulo the extension degree.
  FieldElement frobenius(int i = 1) const;

  // Trace to the prime subfield, as a residue mod p.
  std::uint64_t trace_to_prime() const;

 private:
  FieldElement(FieldCtxPtr ctx) : ctx_(std::move(ctx)) { c_.fill(0); }
  static void require_same_ctx(const FieldElement& a, const FieldElement& b);
  void require_attached() const;

  FieldCtxPtr ctx_;
  std::array<std::uint64_t, kMaxExtensionDegree> c_{};
};

// Canonical enumeration order of a field: element index i has coefficient
// vector equal to the base-p digits of i with the constant coefficient
// most significant. Index 0 is zero; for prime fields the order is
// 0, 1, ..., p-1.
FieldElement element_at(const FieldCtxPtr& ctx, const Int& index);

// Visits every field element once, in canonical order. The budget is
// checked against the field cardinality before any element is produced.
void enumerate(const FieldCtxPtr& ctx, std::uint64_t budget,
               const std::function<void(const FieldElement&)>& fn);

// Convenience form of enumerate that materialises the elements.
std::vector<FieldElement> all_elements(const FieldCtxPtr& ctx,
                                       std::uint64_t budget = kDefaultBudget);

// A field homomorphism F_{p^j} -> F_{p^k} for j | k, fixing the prime
// field. The generator of the source is sent to the first root of the
// source modulus in the canonical enumeration order of the target, which
// makes the map deterministic.
class Embedding {
 public:
  Embedding(FieldCtxPtr source, FieldCtxPtr target);

  const FieldCtxPtr& source() const { return source_; }
  const FieldCtxPtr& target() const { return target_; }
  const FieldElement& generator_image() const { return root_; }

  FieldElement operator()(const FieldElement& x) const;

  // Hot-path form: maps source coefficient words to target words through
  // the precomputed table of root powers.
  void raw_apply(const std::uint64_t* src, std::uint64_t* dst) const;

 private:
  FieldCtxPtr source_;
  FieldCtxPtr target_;
  FieldElement root_;
  // root^i for i < source degree, each as a target coefficient block.
  std::vector<std::uint64_t> root_powers_;
};

}  // namespace weilv

#endif  // WEILV_FFIELD_HPP_
