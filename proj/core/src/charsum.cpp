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

#include "weilv/charsum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace weilv {
namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Compensated accumulation over a fixed partition of the summand index
// space into 64 chunks. The partition (not the thread count) defines the
// merge order, so results are bit-identical however the work is split.
class ChunkedKahan {
 public:
  explicit ChunkedKahan(std::uint64_t total) : total_(total) {}

  void add(std::complex<double> term) {
    const std::size_t chunk =
        total_ <= 1 ? 0
                    : static_cast<std::size_t>(
                          static_cast<unsigned __int128>(index_) * kChunks /
                          total_);
    Lane& lane = lanes_[std::min<std::size_t>(chunk, kChunks - 1)];
    kahan_add(term.real(), lane.sum_re, lane.comp_re);
    kahan_add(term.imag(), lane.sum_im, lane.comp_im);
    ++index_;
  }

  std::complex<double> merged() const {
    double re = 0.0, comp_re = 0.0, im = 0.0, comp_im = 0.0;
    for (const Lane& lane : lanes_) {
      kahan_add(lane.sum_re, re, comp_re);
      kahan_add(lane.sum_im, im, comp_im);
    }
    return {re, im};
  }

 private:
  static constexpr std::size_t kChunks = 64;

  struct Lane {
    double sum_re = 0.0, comp_re = 0.0;
    double sum_im = 0.0, comp_im = 0.0;
  };

  static void kahan_add(double x, double& sum, double& comp) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }

  std::uint64_t total_;
  std::uint64_t index_ = 0;
  std::array<Lane, kChunks> lanes_{};
};

Int tuple_count(const Int& base, int n) {
  Int cost = 1;
  for (int i = 0; i < n; ++i) cost *= base;
  return cost;
}

// Visits every n-tuple of indices in [lo, hi), last position fastest,
// until fn returns false. Deterministic order.
template <typename Fn>
void for_each_tuple(int n, std::size_t lo, std::size_t hi, Fn&& fn) {
  if (lo >= hi) return;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), lo);
  for (;;) {
    if (!fn(idx)) return;
    int pos = n - 1;
    while (pos >= 0) {
      if (++idx[static_cast<std::size_t>(pos)] < hi) break;
      idx[static_cast<std::size_t>(pos)] = lo;
      --pos;
    }
    if (pos < 0) return;
  }
}

// Searches F_{q^m}, m <= 2, for a nonzero common zero of the partial
// derivatives of the leading form. Finding one disproves the
// nonsingularity hypothesis of the exponential-sum bound.
void screen_leading_form(const MultiPoly& q_poly, std::uint64_t budget,
                         CharacterSumResult& res) {
  const FieldCtxPtr& ctx = q_poly.ctx();
  const int n = q_poly.nvars();
  const MultiPoly lead = q_poly.leading_form();
  std::vector<MultiPoly> partials;
  partials.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) partials.push_back(lead.partial_derivative(i));

  for (int m = 1; m <= 2; ++m) {
    const int ext_degree = ctx->degree() * m;
    if (ext_degree > kMaxExtensionDegree) return;
    const FieldCtxPtr ext =
        m == 1 ? ctx : FieldCtx::make(ctx->characteristic(), ext_degree);
    if (!ext->cardinality_fits_u64()) return;
    if (tuple_count(ext->cardinality(), n) > budget) return;

    const std::vector<FieldElement> elems =
        all_elements(ext, ext->cardinality_u64());
    std::optional<Embedding> emb;
    if (m > 1) emb.emplace(ctx, ext);

    std::vector<FieldElement> point(static_cast<std::size_t>(n),
                                    FieldElement::zero(ext));
    bool suspect = false;
    for_each_tuple(n, 0, elems.size(), [&](const std::vector<std::size_t>& idx) {
      bool nonzero = false;
      for (int i = 0; i < n; ++i) {
        point[static_cast<std::size_t>(i)] = elems[idx[static_cast<std::size_t>(i)]];
        nonzero = nonzero || idx[static_cast<std::size_t>(i)] != 0;
      }
      if (!nonzero) return true;
      for (const MultiPoly& partial : partials) {
        const FieldElement v =
            m == 1 ? partial.evaluate(point) : mp_eval(partial, point, *emb);
        if (!v.is_zero()) return true;
      }
      suspect = true;
      return false;
    });

    res.leading_form_checked_depth = m;
    if (suspect) {
      res.leading_form_suspect = true;
      return;
    }
  }
}

void finish_result(CharacterSumResult& res, const ChunkedKahan& acc,
                   std::uint64_t terms, double bound) {
  res.terms = terms;
  res.eps_num = static_cast<double>(terms) * kPerTermRounding;
  res.value = acc.merged();
  res.magnitude = std::abs(res.value);
  res.bound = bound;
  res.margin = res.bound - res.magnitude;
  res.pass = res.margin >= -res.eps_num;
}

}  // namespace

// ---- additive character --------------------------------------------------------

AdditiveCharacter::AdditiveCharacter(FieldCtxPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw UsageError("AdditiveCharacter: null field context");
  angle_unit_ = kTwoPi / static_cast<double>(ctx_->characteristic());
}

std::complex<double> AdditiveCharacter::operator()(
    const FieldElement& x) const {
  if (!x.attached() || !x.ctx()->same(*ctx_)) {
    throw UsageError("AdditiveCharacter: element from a different field");
  }
  const std::uint64_t tr = x.trace_to_prime();
  if (tr == 0) return {1.0, 0.0};
  return std::polar(1.0, angle_unit_ * static_cast<double>(tr));
}

// ---- exponential sums ------------------------------------------------------------

CharacterSumResult exponential_sum(const MultiPoly& q_poly,
                                   const CharSumOptions& options) {
  const FieldCtxPtr& ctx = q_poly.ctx();
  const int n = q_poly.nvars();
  if (n < 1) {
    throw UsageError(
        "exponential_sum: the polynomial must have at least one variable");
  }

  CharacterSumResult res;
  const int d = q_poly.total_degree();
  const std::uint64_t p = ctx->characteristic();
  if (d < 1 ||
      std::gcd(static_cast<std::uint64_t>(d), p) != 1) {
    res.applicable = false;
    return res;
  }

  const Int cost = tuple_count(ctx->cardinality(), n);
  if (cost > options.budget) {
    std::ostringstream msg;
    msg << "exponential_sum: enumerating " << cost << " summands over F_"
        << ctx->cardinality() << "^" << n << " exceeds the budget of "
        << options.budget;
    throw BudgetError(msg.str(), cost, options.budget);
  }
  const std::uint64_t terms = cost.get_ui();

  screen_leading_form(q_poly, options.budget, res);

  const AdditiveCharacter psi(ctx);
  const std::vector<FieldElement> elems =
      all_elements(ctx, ctx->cardinality_u64());
  std::vector<FieldElement> point(static_cast<std::size_t>(n),
                                  FieldElement::zero(ctx));
  ChunkedKahan acc(terms);
  for_each_tuple(n, 0, elems.size(), [&](const std::vector<std::size_t>& idx) {
    for (int i = 0; i < n; ++i) {
      point[static_cast<std::size_t>(i)] = elems[idx[static_cast<std::size_t>(i)]];
    }
    acc.add(psi(q_poly.evaluate(point)));
    return true;
  });

  const double qd = ctx->cardinality().get_d();
  const double bound = std::pow(static_cast<double>(d - 1), n) *
                       std::pow(qd, static_cast<double>(n) / 2.0);
  finish_result(res, acc, terms, bound);
  return res;
}

// ---- Kloosterman sums ------------------------------------------------------------

CharacterSumResult kloosterman(const FieldCtxPtr& ctx, int n,
                               const std::optional<FieldElement>& shift,
                               const CharSumOptions& options) {
  if (!ctx) throw UsageError("kloosterman: null field context");
  if (n < 1) throw UsageError("kloosterman: n must be at least 1");
  if (!ctx->cardinality_fits_u64()) {
    throw UsageError("kloosterman: field too large to enumerate");
  }
  FieldElement a = shift ? *shift : FieldElement::one(ctx);
  if (shift) {
    if (!a.attached() || !a.ctx()->same(*ctx)) {
      throw UsageError("kloosterman: shift belongs to a different field");
    }
    if (a.is_zero()) throw UsageError("kloosterman: shift must be nonzero");
  }

  const Int cost = tuple_count(ctx->cardinality() - 1, n);
  if (cost > options.budget) {
    std::ostringstream msg;
    msg << "kloosterman: enumerating " << cost
        << " summands over (F_" << ctx->cardinality() << "^x)^" << n
        << " exceeds the budget of " << options.budget;
    throw BudgetError(msg.str(), cost, options.budget);
  }
  const std::uint64_t terms = cost.get_ui();

  const AdditiveCharacter psi(ctx);
  const std::vector<FieldElement> elems =
      all_elements(ctx, ctx->cardinality_u64());
  ChunkedKahan acc(terms);
  // Nonzero elements are the canonical indices 1 .. q-1.
  for_each_tuple(n, 1, elems.size(), [&](const std::vector<std::size_t>& idx) {
    FieldElement sum = FieldElement::zero(ctx);
    FieldElement product = FieldElement::one(ctx);
    for (int i = 0; i < n; ++i) {
      const FieldElement& x = elems[idx[static_cast<std::size_t>(i)]];
      sum = sum + x;
      product = product * x;
    }
    acc.add(psi(sum + a * product.inverse()));
    return true;
  });

  const double qd = ctx->cardinality().get_d();
  const double bound = static_cast<double>(n + 1) *
                       std::pow(qd, static_cast<double>(n) / 2.0);
  CharacterSumResult res;
  finish_result(res, acc, terms, bound);
  return res;
}

// ---- Ramanujan tau ---------------------------------------------------------------

namespace {

// a * b truncated at t^order, exact integer coefficients.
std::vector<Int> mul_trunc(const std::vector<Int>& a, const std::vector<Int>& b,
                           int order) {
  std::vector<Int> out(static_cast<std::size_t>(order) + 1, Int(0));
  const int da = std::min<int>(order, static_cast<int>(a.size()) - 1);
  for (int i = 0; i <= da; ++i) {
    const Int& ai = a[static_cast<std::size_t>(i)];
    if (ai == 0) continue;
    const int db = std::min<int>(order - i, static_cast<int>(b.size()) - 1);
    for (int j = 0; j <= db; ++j) {
      mpz_addmul(out[static_cast<std::size_t>(i + j)].get_mpz_t(),
                 ai.get_mpz_t(), b[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  return out;
}

}  // namespace

TauReport ramanujan_tau(int limit) {
  if (limit < 1) throw UsageError("ramanujan_tau: limit must be at least 1");
  const int order = limit - 1;

  // P = prod_{m=1..order} (1 - t^m), truncated at t^order: multiplying by
  // (1 - t^m) is a single backward sweep of subtractions.
  std::vector<Int> p_series(static_cast<std::size_t>(order) + 1, Int(0));
  p_series[0] = 1;
  for (int m = 1; m <= order; ++m) {
    for (int i = order; i >= m; --i) {
      p_series[static_cast<std::size_t>(i)] -=
          p_series[static_cast<std::size_t>(i - m)];
    }
  }

  // P^24 by binary powering on truncated series.
  std::vector<Int> power(static_cast<std::size_t>(order) + 1, Int(0));
  power[0] = 1;
  std::vector<Int> base = std::move(p_series);
  unsigned e = 24;
  for (;;) {
    if (e & 1u) power = mul_trunc(power, base, order);
    e >>= 1u;
    if (e == 0) break;
    base = mul_trunc(base, base, order);
  }

  TauReport report;
  report.tau.resize(static_cast<std::size_t>(limit));
  for (int m = 1; m <= limit; ++m) {
    report.tau[static_cast<std::size_t>(m - 1)] =
        power[static_cast<std::size_t>(m - 1)];
  }
  for (long p = 2; p <= limit; ++p) {
    if (!is_prime_u64(static_cast<std::uint64_t>(p))) continue;
    TauPrimeCheck check;
    check.p = p;
    check.tau = report.tau[static_cast<std::size_t>(p - 1)];
    check.tau_sq = check.tau * check.tau;
    check.bound = Int(4) * int_pow(Int(p), 11);
    check.pass = check.tau_sq <= check.bound;
    report.all_pass = report.all_pass && check.pass;
    report.primes.push_back(std::move(check));
  }
  return report;
}

}  // namespace weilv
