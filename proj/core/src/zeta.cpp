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

#include <sstream>
#include <utility>
#include <vector>

namespace weilv {

namespace {

// C(a - 1 + j, j) for integer a >= 1: the coefficient of t^j in
// (1 - t)^{-a}. Computed as a rising-factorial product with stepwise
// exact division.
Int negative_binomial(const Int& a, int j) {
  Int r = 1;
  for (int i = 1; i <= j; ++i) {
    r *= a - 1 + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(),
                    static_cast<unsigned long>(i));
  }
  return r;
}

// Exact determinant of a square rational matrix by Gaussian elimination.
Rat rat_det(std::vector<std::vector<Rat>> m) {
  const std::size_t n = m.size();
  Rat det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Rat inv_pivot = Rat(1) / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rat f = m[r][col] * inv_pivot;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Exact solve of A x = b with free variables set to zero. Returns
// nothing when the system is inconsistent.
struct LinearSolution {
  bool consistent = false;
  std::vector<Rat> x;
};

LinearSolution solve_linear(std::vector<std::vector<Rat>> a,
                            std::vector<Rat> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[row]);
    std::swap(b[pivot], b[row]);
    const Rat inv = Rat(1) / a[row][col];
    for (std::size_t c = col; c < cols; ++c) a[row][c] *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[row][c];
      b[r] -= f * b[row];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (b[r] != 0) return {};
  LinearSolution out;
  out.consistent = true;
  out.x.assign(cols, Rat(0));
  for (std::size_t r = 0; r < row; ++r)
    out.x[pivot_col_of_row[r]] = b[r];
  return out;
}

// Denominator-fit linear system for degrees (dN, dD): unknowns
// d_1..d_dD with d_0 = 1, equations sum_i d_i s_{j-i} = 0 for
// j = dN+1..order.
LinearSolution fit_denominator(const TruncatedSeries& s, int dn, int dd) {
  std::vector<std::vector<Rat>> a;
  std::vector<Rat> b;
  for (int j = dn + 1; j <= s.order(); ++j) {
    std::vector<Rat> rowv(static_cast<std::size_t>(dd), Rat(0));
    for (int i = 1; i <= dd; ++i)
      if (j - i >= 0) rowv[static_cast<std::size_t>(i - 1)] = s[j - i];
    a.push_back(std::move(rowv));
    b.push_back(-s[j]);
  }
  return solve_linear(std::move(a), std::move(b));
}

bool hankel_candidate_fits(const TruncatedSeries& s, int dn, int dd) {
  // Kronecker criterion: every (dD+1)-square Hankel determinant with
  // offset k >= max(0, dN - dD + 1) vanishes, as far as the window
  // reaches.
  const int k_lo = std::max(0, dn - dd + 1);
  const int k_hi = s.order() - 2 * dd;
  for (int k = k_lo; k <= k_hi; ++k) {
    std::vector<std::vector<Rat>> h(
        static_cast<std::size_t>(dd + 1),
        std::vector<Rat>(static_cast<std::size_t>(dd + 1)));
    for (int i = 0; i <= dd; ++i)
      for (int j = 0; j <= dd; ++j)
        h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            s[k + i + j];
    if (rat_det(std::move(h)) != 0) return false;
  }
  // Confirm with the full overdetermined linear system; the determinant
  // test can be blind to degenerate stacked cancellations.
  return fit_denominator(s, dn, dd).consistent;
}

}  // namespace

TruncatedSeries zeta_series(const CountTable& table, int order) {
  if (order < 0) throw UsageError("zeta_series: negative order");
  if (table.depth() < order) {
    std::ostringstream os;
    os << "zeta_series: order " << order << " needs counts to depth "
       << order << ", table has " << table.depth();
    throw UsageError(os.str());
  }
  TruncatedSeries logz(order);
  for (int n = 1; n <= order; ++n)
    logz.set(n, make_rat(table.at(n), Int(n)));
  return series_exp(logz);
}

TruncatedSeries euler_product_series(const ClosedPointCensus& census,
                                     int order) {
  if (order < 0) throw UsageError("euler_product_series: negative order");
  if (census.depth() < order) {
    std::ostringstream os;
    os << "euler_product_series: order " << order
       << " needs census to depth " << order << ", census has "
       << census.depth();
    throw UsageError(os.str());
  }
  TruncatedSeries result(order);
  result.set(0, Rat(1));
  for (int d = 1; d <= order; ++d) {
    const Int& a = census.at(d);
    if (a == 0) continue;
    TruncatedSeries factor(order);
    for (int j = 0; d * j <= order; ++j)
      factor.set(d * j, Rat(negative_binomial(a, j)));
    result = series_mul(result, factor);
  }
  return result;
}

RationalityVerdict hankel_rationality(const TruncatedSeries& series,
                                      int max_num, int max_den) {
  if (max_num < 0 || max_den < 0)
    throw UsageError("hankel_rationality: negative degree bound");
  if (series.order() < max_num + 2 * max_den + 1) {
    std::ostringstream os;
    os << "hankel_rationality: window (" << max_num << ", " << max_den
       << ") needs series order >= " << max_num + 2 * max_den + 1
       << ", have " << series.order();
    throw UsageError(os.str());
  }
  for (int total = 0; total <= max_num + max_den; ++total) {
    for (int dn = 0; dn <= std::min(total, max_num); ++dn) {
      const int dd = total - dn;
      if (dd > max_den) continue;
      if (hankel_candidate_fits(series, dn, dd)) {
        RationalityVerdict v;
        v.rational = true;
        v.num_degree = dn;
        v.den_degree = dd;
        return v;
      }
    }
  }
  return RationalityVerdict{};
}

RationalFn reconstruct_rational(const TruncatedSeries& series, int num_degree,
                                int den_degree) {
  if (num_degree < 0 || den_degree < 0)
    throw UsageError("reconstruct_rational: negative degree");
  if (series.order() < num_degree + den_degree) {
    std::ostringstream os;
    os << "reconstruct_rational: degrees (" << num_degree << ", "
       << den_degree << ") need series order >= " << num_degree + den_degree
       << ", have " << series.order()
       << "; supply counts to at least that depth";
    throw UsageError(os.str());
  }
  if (series[0] != 1)
    throw DomainError("reconstruct_rational: series constant term must be 1");

  const LinearSolution den_fit =
      fit_denominator(series, num_degree, den_degree);
  if (!den_fit.consistent) {
    std::ostringstream os;
    os << "reconstruct_rational: no rational function of degrees ("
       << num_degree << ", " << den_degree << ") fits the series";
    throw CheckFailure(os.str());
  }

  std::vector<Rat> den_coeffs(static_cast<std::size_t>(den_degree) + 1,
                              Rat(0));
  den_coeffs[0] = Rat(1);
  for (int i = 1; i <= den_degree; ++i)
    den_coeffs[static_cast<std::size_t>(i)] =
        den_fit.x[static_cast<std::size_t>(i - 1)];
  RatPoly den(std::move(den_coeffs));

  // Numerator = first num_degree+1 coefficients of den * series (the
  // higher coefficients vanish by the fit).
  std::vector<Rat> num_coeffs(static_cast<std::size_t>(num_degree) + 1,
                              Rat(0));
  for (int j = 0; j <= num_degree; ++j) {
    Rat c(0);
    for (int i = 0; i <= den.degree() && i <= j; ++i)
      c += den[i] * series[j - i];
    num_coeffs[static_cast<std::size_t>(j)] = c;
  }
  RatPoly num(std::move(num_coeffs));

  // Remove any common factor, then renormalise both constant terms to 1.
  if (!num.is_zero()) {
    const RatPoly g = rat_poly_gcd(num, den);
    if (g.degree() > 0) {
      num = num.divmod(g).first;
      den = den.divmod(g).first;
    }
  }
  if (num.is_zero() || num[0] == 0 || den[0] == 0)
    throw CheckFailure(
        "reconstruct_rational: degenerate fit with vanishing constant "
        "term");
  den = den.scaled(Rat(1) / den[0]);
  num = num.scaled(Rat(1) / num[0]);

  RationalFn fn;
  fn.numerator = num.to_int_poly();
  fn.denominator = den.to_int_poly();

  // Defensive: the reconstruction must reproduce the series exactly.
  if (!(expand(fn, series.order()) == series))
    throw CheckFailure(
        "reconstruct_rational: re-expansion mismatch after reconstruction");
  return fn;
}

TruncatedSeries expand(const RationalFn& fn, int order) {
  return series_of_rational(fn.numerator, fn.denominator, order);
}

}  // namespace weilv
