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

#include "weilv/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace weilv {

// ---- MultiPoly -------------------------------------------------------------

MultiPoly::MultiPoly(FieldCtxPtr ctx, int nvars)
    : ctx_(std::move(ctx)), nvars_(nvars) {
  if (nvars_ < 1) throw UsageError("MultiPoly: needs at least one variable");
}

void MultiPoly::add_term(const ExpVec& exps, const FieldElement& c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw UsageError("MultiPoly: exponent vector has wrong arity");
  if (!c.attached() || !c.ctx()->same(*ctx_))
    throw UsageError("MultiPoly: coefficient from a different field");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
    return;
  }
  FieldElement sum = it->second + c;
  if (sum.is_zero()) {
    terms_.erase(it);
  } else {
    it->second = sum;
  }
}

int MultiPoly::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    const int d = std::accumulate(e.begin(), e.end(), 0,
                                  [](int acc, std::uint32_t x) {
                                    return acc + static_cast<int>(x);
                                  });
    deg = std::max(deg, d);
  }
  return deg;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree();
  for (const auto& [e, c] : terms_) {
    const int td = std::accumulate(e.begin(), e.end(), 0,
                                   [](int acc, std::uint32_t x) {
                                     return acc + static_cast<int>(x);
                                   });
    if (td != d) return false;
  }
  return true;
}

MultiPoly MultiPoly::leading_form() const {
  MultiPoly out(ctx_, nvars_);
  const int d = total_degree();
  for (const auto& [e, c] : terms_) {
    const int td = std::accumulate(e.begin(), e.end(), 0,
                                   [](int acc, std::uint32_t x) {
                                     return acc + static_cast<int>(x);
                                   });
    if (td == d) out.add_term(e, c);
  }
  return out;
}

MultiPoly MultiPoly::partial_derivative(int var) const {
  if (var < 0 || var >= nvars_)
    throw UsageError("MultiPoly: derivative variable out of range");
  MultiPoly out(ctx_, nvars_);
  for (const auto& [e, c] : terms_) {
    const std::uint32_t ev = e[static_cast<std::size_t>(var)];
    if (ev == 0) continue;
    ExpVec de = e;
    de[static_cast<std::size_t>(var)] = ev - 1;
    out.add_term(de, c * FieldElement::constant(ctx_, ev %
                                                          ctx_->characteristic()));
  }
  return out;
}

FieldElement MultiPoly::evaluate(
    const std::vector<FieldElement>& point) const {
  if (static_cast<int>(point.size()) != nvars_)
    throw UsageError("MultiPoly: point has wrong arity");
  for (const auto& x : point)
    if (!x.attached() || !x.ctx()->same(*ctx_))
      throw UsageError("MultiPoly: point coordinate from a different field");
  FieldElement acc = FieldElement::zero(ctx_);
  for (const auto& [e, c] : terms_) {
    FieldElement term = c;
    for (int i = 0; i < nvars_; ++i) {
      const std::uint32_t ei = e[static_cast<std::size_t>(i)];
      if (ei != 0)
        term = term * point[static_cast<std::size_t>(i)].pow(
                          static_cast<std::uint64_t>(ei));
    }
    acc = acc + term;
  }
  return acc;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  if (!a.ctx_->same(*b.ctx_) || a.nvars_ != b.nvars_)
    throw UsageError("MultiPoly: mixed contexts in addition");
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (!a.ctx_->same(*b.ctx_) || a.nvars_ != b.nvars_)
    throw UsageError("MultiPoly: mixed contexts in multiplication");
  MultiPoly out(a.ctx_, a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::ExpVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  if (!ctx_->same(*other.ctx_) || nvars_ != other.nvars_) return false;
  if (terms_.size() != other.terms_.size()) return false;
  auto it = other.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (e != it->first || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

FieldElement mp_eval(const MultiPoly& f,
                     const std::vector<FieldElement>& point,
                     const Embedding& emb) {
  if (!f.ctx()->same(*emb.source()))
    throw UsageError("mp_eval: embedding source differs from coefficients");
  if (static_cast<int>(point.size()) != f.nvars())
    throw UsageError("mp_eval: point has wrong arity");
  const auto& target = emb.target();
  for (const auto& x : point)
    if (!x.attached() || !x.ctx()->same(*target))
      throw UsageError("mp_eval: point coordinate not in the target field");
  FieldElement acc = FieldElement::zero(target);
  for (const auto& [e, c] : f.terms()) {
    FieldElement term = emb(c);
    for (int i = 0; i < f.nvars(); ++i) {
      const std::uint32_t ei = e[static_cast<std::size_t>(i)];
      if (ei != 0)
        term = term * point[static_cast<std::size_t>(i)].pow(
                          static_cast<std::uint64_t>(ei));
    }
    acc = acc + term;
  }
  return acc;
}

// ---- IntPoly ----------------------------------------------------------------

namespace {
const Int kZeroInt = 0;
const Rat kZeroRat = 0;
}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::operator[](int i) const {
  if (i < 0) throw UsageError("IntPoly: negative index");
  if (i >= static_cast<int>(c_.size())) return kZeroInt;
  return c_[static_cast<std::size_t>(i)];
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + (*this)[i];
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + Rat((*this)[i]);
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly();
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-() const {
  std::vector<Int> c = c_;
  for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::scaled(const Int& s) const {
  std::vector<Int> c = c_;
  for (auto& x : c) x *= s;
  return IntPoly(std::move(c));
}

IntPoly IntPoly::divexact(const IntPoly& d) const {
  if (d.is_zero()) throw UsageError("IntPoly: division by zero");
  if (is_zero()) return IntPoly();
  const int dd = d.degree();
  int dr = degree();
  if (dr < dd)
    throw CheckFailure("IntPoly: inexact division (degree too small)");
  std::vector<Int> rem = c_;
  std::vector<Int> q(static_cast<std::size_t>(dr - dd + 1), Int(0));
  const Int& lead = d.c_.back();
  for (int i = dr - dd; i >= 0; --i) {
    Int& top = rem[static_cast<std::size_t>(i + dd)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw CheckFailure("IntPoly: inexact division (leading coefficient)");
    Int f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    q[static_cast<std::size_t>(i)] = f;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(i + j)] -= f * d[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw CheckFailure("IntPoly: inexact division (remainder)");
  return IntPoly(std::move(q));
}

// ---- RatPoly ----------------------------------------------------------------

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
  c_.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c_.emplace_back(x);
  trim();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::operator[](int i) const {
  if (i < 0) throw UsageError("RatPoly: negative index");
  if (i >= static_cast<int>(c_.size())) return kZeroRat;
  return c_[static_cast<std::size_t>(i)];
}

Rat RatPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + (*this)[i];
  return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] + b[static_cast<int>(i)];
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[static_cast<int>(i)] - b[static_cast<int>(i)];
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return RatPoly(std::move(c));
}

RatPoly RatPoly::scaled(const Rat& s) const {
  std::vector<Rat> c = c_;
  for (auto& x : c) x *= s;
  return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) throw UsageError("RatPoly: division by zero");
  RatPoly rem = *this;
  const int dd = d.degree();
  if (rem.degree() < dd) return {RatPoly(), rem};
  std::vector<Rat> q(static_cast<std::size_t>(rem.degree() - dd + 1), Rat(0));
  const Rat& lead = d.c_.back();
  while (rem.degree() >= dd) {
    const int dr = rem.degree();
    const Rat f = rem.c_.back() / lead;
    q[static_cast<std::size_t>(dr - dd)] = f;
    for (int j = 0; j <= dd; ++j) {
      rem.c_[static_cast<std::size_t>(dr - dd + j)] -= f * d[j];
    }
    rem.trim();
    if (rem.is_zero()) break;
  }
  return {RatPoly(std::move(q)), rem};
}

IntPoly RatPoly::to_int_poly() const {
  std::vector<Int> c;
  c.reserve(c_.size());
  for (const auto& x : c_) {
    if (x.get_den() != 1) {
      std::ostringstream os;
      os << "RatPoly: coefficient " << x << " is not an integer";
      throw IntegralityError(os.str());
    }
    c.push_back(x.get_num());
  }
  return IntPoly(std::move(c));
}

RatPoly rat_poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    const Rat lead = a.coeffs().back();
    a = a.scaled(1 / lead);
  }
  return a;
}

// ---- TruncatedSeries --------------------------------------------------------

TruncatedSeries::TruncatedSeries(int order) {
  if (order < 0) throw UsageError("TruncatedSeries: negative order");
  c_.assign(static_cast<std::size_t>(order) + 1, Rat(0));
}

TruncatedSeries::TruncatedSeries(std::vector<Rat> coeffs)
    : c_(std::move(coeffs)) {
  if (c_.empty()) throw UsageError("TruncatedSeries: empty coefficient list");
}

const Rat& TruncatedSeries::operator[](int n) const {
  if (n < 0 || n > order())
    throw UsageError("TruncatedSeries: coefficient index out of range");
  return c_[static_cast<std::size_t>(n)];
}

void TruncatedSeries::set(int n, const Rat& v) {
  if (n < 0 || n > order())
    throw UsageError("TruncatedSeries: coefficient index out of range");
  c_[static_cast<std::size_t>(n)] = v;
}

namespace {
void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b,
                        const char* op) {
  if (a.order() != b.order()) {
    std::ostringstream os;
    os << op << ": series orders differ (" << a.order() << " vs " << b.order()
       << ")";
    throw UsageError(os.str());
  }
}
}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a,
                           const TruncatedSeries& b) {
  require_same_order(a, b, "series_add");
  TruncatedSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) out.set(n, a[n] + b[n]);
  return out;
}

TruncatedSeries series_sub(const TruncatedSeries& a,
                           const TruncatedSeries& b) {
  require_same_order(a, b, "series_sub");
  TruncatedSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) out.set(n, a[n] - b[n]);
  return out;
}

TruncatedSeries series_mul(const TruncatedSeries& a,
                           const TruncatedSeries& b) {
  require_same_order(a, b, "series_mul");
  TruncatedSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) {
    Rat acc = 0;
    for (int i = 0; i <= n; ++i) acc += a[i] * b[n - i];
    out.set(n, acc);
  }
  return out;
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rat& s) {
  TruncatedSeries out(a.order());
  for (int n = 0; n <= a.order(); ++n) out.set(n, a[n] * s);
  return out;
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  if (a[0] != 0)
    throw DomainError("series_exp: nonzero constant term");
  const int m = a.order();
  TruncatedSeries b(m);
  b.set(0, Rat(1));
  for (int n = 1; n <= m; ++n) {
    Rat acc = 0;
    for (int j = 1; j <= n; ++j) acc += Rat(j) * a[j] * b[n - j];
    b.set(n, acc / Rat(n));
  }
  return b;
}

TruncatedSeries series_log(const TruncatedSeries& a) {
  if (a[0] != 1)
    throw DomainError("series_log: constant term must be one");
  const int m = a.order();
  TruncatedSeries b(m);
  for (int n = 1; n <= m; ++n) {
    Rat acc = Rat(n) * a[n];
    for (int i = 1; i < n; ++i) acc -= Rat(i) * b[i] * a[n - i];
    b.set(n, acc / Rat(n));
  }
  return b;
}

TruncatedSeries series_inv(const TruncatedSeries& a) {
  if (a[0] == 0)
    throw DomainError("series_inv: constant term is zero");
  const int m = a.order();
  TruncatedSeries b(m);
  const Rat inv0 = 1 / a[0];
  b.set(0, inv0);
  for (int n = 1; n <= m; ++n) {
    Rat acc = 0;
    for (int i = 1; i <= n; ++i) acc += a[i] * b[n - i];
    b.set(n, -inv0 * acc);
  }
  return b;
}

TruncatedSeries series_of_rational(const IntPoly& num, const IntPoly& den,
                                   int order) {
  if (den.is_zero() || den[0] == 0)
    throw DomainError("series_of_rational: denominator has no inverse at 0");
  TruncatedSeries n(order), d(order);
  for (int i = 0; i <= order; ++i) {
    n.set(i, Rat(num[i]));
    d.set(i, Rat(den[i]));
  }
  return series_mul(n, series_inv(d));
}

// ---- characteristic series oracle -------------------------------------------

namespace {

// det of a matrix of integer polynomials by Bareiss fraction-free
// elimination; all intermediate divisions are exact over Z[t].
IntPoly int_poly_matrix_det(std::vector<std::vector<IntPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return IntPoly::constant(1);
  int sign = 1;
  IntPoly prev = IntPoly::constant(1);
  for (std::size_t r = 0; r + 1 < n; ++r) {
    if (m[r][r].is_zero()) {
      std::size_t swap_row = r + 1;
      while (swap_row < n && m[swap_row][r].is_zero()) ++swap_row;
      if (swap_row == n) return IntPoly();
      std::swap(m[r], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = r + 1; j < n; ++j) {
        m[i][j] = (m[r][r] * m[i][j] - m[i][r] * m[r][j]).divexact(prev);
      }
      m[i][r] = IntPoly();
    }
    prev = m[r][r];
  }
  IntPoly det = m[n - 1][n - 1];
  return sign == 1 ? det : -det;
}

}  // namespace

std::pair<TruncatedSeries, TruncatedSeries> charpoly_series_oracle(
    const std::vector<std::vector<Int>>& M, int m) {
  const std::size_t n = M.size();
  for (const auto& row : M)
    if (row.size() != n)
      throw UsageError("charpoly_series_oracle: matrix not square");
  if (m < 0) throw UsageError("charpoly_series_oracle: negative order");

  std::vector<std::vector<IntPoly>> a(
      n, std::vector<IntPoly>(n, IntPoly()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Int> c{i == j ? Int(1) : Int(0), -M[i][j]};
      a[i][j] = IntPoly(std::move(c));
    }
  }
  const IntPoly det = int_poly_matrix_det(std::move(a));
  if (det.is_zero() || det[0] != 1)
    throw CheckFailure(
        "charpoly_series_oracle: det(I - tM) must have constant term 1");

  TruncatedSeries det_series(m);
  for (int i = 0; i <= m; ++i) det_series.set(i, Rat(det[i]));
  TruncatedSeries lhs = series_log(series_inv(det_series));

  TruncatedSeries rhs(m);
  std::vector<std::vector<Int>> power(n, std::vector<Int>(n, Int(0)));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  for (int step = 1; step <= m; ++step) {
    std::vector<std::vector<Int>> next(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (power[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          next[i][j] += power[i][l] * M[l][j];
      }
    power = std::move(next);
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += power[i][i];
    rhs.set(step, make_rat(tr, Int(step)));
  }
  return {lhs, rhs};
}

}  // namespace weilv
