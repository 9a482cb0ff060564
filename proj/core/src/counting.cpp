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

#include <algorithm>
#include <map>
#include <sstream>
#include <thread>

namespace weilv {

namespace {

// ---- fixed-width field kernel ----------------------------------------------
//
// The enumeration loops run hottest when the extension degree is a
// compile-time constant, so the kernel is templated on the width K; K = 0
// selects a fully dynamic fallback. All routines operate on little-endian
// coefficient blocks of `width` words.

template <int K>
struct Kernel {
  std::uint64_t p = 0;
  int kk = 0;   // runtime width; equals K when K > 0
  bool wide = false;
  std::uint64_t negmod[kMaxExtensionDegree] = {0};

  int width() const { return K > 0 ? K : kk; }
};

template <int K>
inline void kern_add(const Kernel<K>& F, const std::uint64_t* a,
                     const std::uint64_t* b, std::uint64_t* out) {
  const int k = F.width();
  for (int i = 0; i < k; ++i) {
    const std::uint64_t s = a[i] + b[i];
    out[i] = s >= F.p ? s - F.p : s;
  }
}

template <int K>
inline void kern_sub(const Kernel<K>& F, const std::uint64_t* a,
                     const std::uint64_t* b, std::uint64_t* out) {
  const int k = F.width();
  for (int i = 0; i < k; ++i)
    out[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + F.p - b[i];
}

template <int K>
inline bool kern_is_zero(const Kernel<K>& F, const std::uint64_t* a) {
  const int k = F.width();
  std::uint64_t acc = 0;
  for (int i = 0; i < k; ++i) acc |= a[i];
  return acc == 0;
}

template <int K>
inline void kern_mul(const Kernel<K>& F, const std::uint64_t* a,
                     const std::uint64_t* b, std::uint64_t* out) {
  const int k = F.width();
  if (k == 1) {
    out[0] = F.wide ? modarith::mul(a[0], b[0], F.p) : (a[0] * b[0]) % F.p;
    return;
  }
  if (!F.wide) {
    // Word accumulation is exact: every partial sum stays below
    // (2k-1)(p-1)^2 < 2^64 for p < 2^29.
    std::uint64_t t[2 * kMaxExtensionDegree - 1] = {0};
    for (int i = 0; i < k; ++i) {
      const std::uint64_t ai = a[i];
      if (ai == 0) continue;
      for (int j = 0; j < k; ++j) t[i + j] += ai * b[j];
    }
    for (int i = 2 * k - 2; i >= k; --i) {
      const std::uint64_t r = t[i] % F.p;
      if (r == 0) continue;
      for (int j = 0; j < k; ++j) t[i - k + j] += r * F.negmod[j];
    }
    for (int i = 0; i < k; ++i) out[i] = t[i] % F.p;
  } else {
    unsigned __int128 t[2 * kMaxExtensionDegree - 1] = {0};
    for (int i = 0; i < k; ++i) {
      if (a[i] == 0) continue;
      const unsigned __int128 ai = a[i];
      for (int j = 0; j < k; ++j) t[i + j] = (t[i + j] + ai * b[j]) % F.p;
    }
    for (int i = 2 * k - 2; i >= k; --i) {
      const std::uint64_t r = static_cast<std::uint64_t>(t[i]);
      if (r == 0) continue;
      for (int j = 0; j < k; ++j)
        t[i - k + j] =
            (t[i - k + j] + static_cast<unsigned __int128>(r) * F.negmod[j]) %
            F.p;
    }
    for (int i = 0; i < k; ++i) out[i] = static_cast<std::uint64_t>(t[i]);
  }
}

// ---- compiled sparse polynomials --------------------------------------------

struct STerm {
  std::vector<std::uint32_t> e;   // exponents, one per remaining variable
  std::vector<std::uint64_t> c;   // coefficient block of kernel width
};

struct SPoly {
  std::vector<STerm> terms;

  bool is_zero() const { return terms.empty(); }
  bool is_constant() const {
    if (terms.size() != 1) return false;
    for (const auto ei : terms[0].e)
      if (ei != 0) return false;
    return true;
  }
  std::uint32_t max_front_exp() const {
    std::uint32_t m = 0;
    for (const auto& t : terms) m = std::max(m, t.e[0]);
    return m;
  }
};

// Rebuilds a term list with duplicate exponent vectors merged and zero
// coefficients dropped.
template <int K>
SPoly normalize_terms(const Kernel<K>& F,
                      std::map<std::vector<std::uint32_t>,
                               std::vector<std::uint64_t>>&& acc) {
  SPoly out;
  for (auto& [e, c] : acc) {
    if (kern_is_zero(F, c.data())) continue;
    out.terms.push_back(STerm{e, std::move(c)});
  }
  return out;
}

// Substitutes the front variable with a value given by its power table
// (powers[j] is value^j as a coefficient block).
template <int K>
SPoly specialize_front(const Kernel<K>& F, const SPoly& f,
                       const std::vector<std::uint64_t>& powers) {
  const int k = F.width();
  std::map<std::vector<std::uint32_t>, std::vector<std::uint64_t>> acc;
  std::uint64_t prod[kMaxExtensionDegree];
  for (const auto& t : f.terms) {
    const std::uint64_t* pw = powers.data() +
                              static_cast<std::size_t>(t.e[0]) * k;
    kern_mul(F, t.c.data(), pw, prod);
    std::vector<std::uint32_t> rest(t.e.begin() + 1, t.e.end());
    auto it = acc.find(rest);
    if (it == acc.end()) {
      acc.emplace(std::move(rest),
                  std::vector<std::uint64_t>(prod, prod + k));
    } else {
      kern_add(F, it->second.data(), prod, it->second.data());
    }
  }
  return normalize_terms(F, std::move(acc));
}

// Dense univariate polynomial: blocks[d] holds the coefficient of t^d.
struct DensePoly {
  int deg = -1;
  std::vector<std::uint64_t> blocks;  // (deg + 1) * width words
};

template <int K>
DensePoly densify(const Kernel<K>& F, const SPoly& f) {
  const int k = F.width();
  DensePoly out;
  for (const auto& t : f.terms)
    out.deg = std::max(out.deg, static_cast<int>(t.e[0]));
  if (out.deg < 0) return out;
  out.blocks.assign(static_cast<std::size_t>(out.deg + 1) * k, 0);
  for (const auto& t : f.terms) {
    std::uint64_t* dst = out.blocks.data() +
                         static_cast<std::size_t>(t.e[0]) * k;
    kern_add(F, dst, t.c.data(), dst);
  }
  return out;
}

// ---- univariate evaluation over the whole field ------------------------------
//
// Elements are visited in canonical enumeration order. Consecutive
// elements inside a run of p share every digit except the last, so they
// differ by the constant step g^{k-1}; along such an arithmetic
// progression a degree-D polynomial is evaluated with D additions per
// point from its forward difference table. Runs are the natural chunk
// unit for threading.

template <int K>
struct RunEvaluator {
  const Kernel<K>& F;
  const std::vector<DensePoly>& eqs;

  // Per-equation difference tables (or direct Horner when the degree is
  // too large for a difference table to pay off within one run).
  struct EqState {
    bool diff_mode = false;
    int deg = 0;
    std::vector<std::uint64_t> table;  // (deg + 1) blocks
  };
  std::vector<EqState> state;

  explicit RunEvaluator(const Kernel<K>& f,
                        const std::vector<DensePoly>& polys)
      : F(f), eqs(polys) {
    state.resize(eqs.size());
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      state[i].deg = eqs[i].deg;
      state[i].diff_mode =
          static_cast<std::uint64_t>(eqs[i].deg) + 1 < F.p;
      state[i].table.assign(
          static_cast<std::size_t>(eqs[i].deg + 1) * F.width(), 0);
    }
  }

  void horner(const DensePoly& f, const std::uint64_t* x,
              std::uint64_t* out) const {
    const int k = F.width();
    std::uint64_t acc[kMaxExtensionDegree];
    std::uint64_t tmp[kMaxExtensionDegree];
    std::copy(f.blocks.data() + static_cast<std::size_t>(f.deg) * k,
              f.blocks.data() + static_cast<std::size_t>(f.deg + 1) * k, acc);
    for (int d = f.deg - 1; d >= 0; --d) {
      kern_mul(F, acc, x, tmp);
      kern_add(F, tmp, f.blocks.data() + static_cast<std::size_t>(d) * k,
               acc);
    }
    std::copy(acc, acc + k, out);
  }

  // Counts elements x of the runs [run_lo, run_hi) where all equations
  // vanish. run_words holds the first element of run_lo (its last digit
  // is zero) and is advanced in place.
  std::uint64_t count_zeros(std::uint64_t run_lo, std::uint64_t run_hi,
                            std::uint64_t* run_words) {
    const int k = F.width();
    const std::uint64_t p = F.p;
    std::uint64_t zeros = 0;
    std::uint64_t x[kMaxExtensionDegree];
    for (std::uint64_t run = run_lo; run < run_hi; ++run) {
      // Prepare per-equation evaluation state for this run.
      for (std::size_t i = 0; i < eqs.size(); ++i) {
        auto& st = state[i];
        if (!st.diff_mode) continue;
        std::copy(run_words, run_words + k, x);
        for (int j = 0; j <= st.deg; ++j) {
          x[k - 1] = static_cast<std::uint64_t>(j);
          horner(eqs[i], x, st.table.data() + static_cast<std::size_t>(j) * k);
        }
        // In-place forward differences: after level l the block at l
        // holds the l-th difference at the run start.
        for (int l = 1; l <= st.deg; ++l) {
          for (int j = st.deg; j >= l; --j) {
            std::uint64_t* hi = st.table.data() + static_cast<std::size_t>(j) * k;
            const std::uint64_t* lo =
                st.table.data() + static_cast<std::size_t>(j - 1) * k;
            kern_sub(F, hi, lo, hi);
          }
        }
      }
      for (std::uint64_t step = 0; step < p; ++step) {
        bool all_zero = true;
        for (std::size_t i = 0; i < eqs.size() && all_zero; ++i) {
          const auto& st = state[i];
          if (st.diff_mode) {
            all_zero = kern_is_zero(F, st.table.data());
          } else {
            std::copy(run_words, run_words + k, x);
            x[k - 1] = step;
            std::uint64_t val[kMaxExtensionDegree];
            horner(eqs[i], x, val);
            all_zero = kern_is_zero(F, val);
          }
        }
        if (all_zero) ++zeros;
        if (step + 1 == p) break;
        for (auto& st : state) {
          if (!st.diff_mode) continue;
          for (int l = 0; l < st.deg; ++l) {
            std::uint64_t* cur = st.table.data() + static_cast<std::size_t>(l) * k;
            kern_add(F, cur,
                     st.table.data() + static_cast<std::size_t>(l + 1) * k,
                     cur);
          }
        }
      }
      // Advance run_words to the first element of the next run: the last
      // digit stays zero, digit k-2 ticks fastest.
      int pos = k - 2;
      while (pos >= 0) {
        if (++run_words[pos] < p) break;
        run_words[pos] = 0;
        --pos;
      }
    }
    return zeros;
  }
};

// Fills `words` with the first element of run `run` (k - 1 upper digits
// decoded from the run index, last digit zero).
template <int K>
void run_start_words(const Kernel<K>& F, std::uint64_t run,
                     std::uint64_t* words) {
  const int k = F.width();
  for (int i = 0; i < k; ++i) words[i] = 0;
  for (int pos = k - 2; pos >= 0; --pos) {
    words[pos] = run % F.p;
    run /= F.p;
  }
}

inline std::uint64_t pow_u64(std::uint64_t base, int e) {
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// ---- recursive assignment counting ------------------------------------------

template <int K>
std::uint64_t count_assignments(const Kernel<K>& F, std::vector<SPoly> eqs,
                                int arity, std::uint64_t q);

template <int K>
std::uint64_t count_univariate(const Kernel<K>& F,
                               const std::vector<SPoly>& eqs,
                               std::uint64_t q, std::uint64_t run_lo,
                               std::uint64_t run_hi) {
  std::vector<DensePoly> dense;
  dense.reserve(eqs.size());
  for (const auto& f : eqs) {
    DensePoly d = densify(F, f);
    if (d.deg == 0) return 0;  // nonzero constant, no solutions anywhere
    dense.push_back(std::move(d));
  }
  (void)q;
  RunEvaluator<K> ev(F, dense);
  std::uint64_t words[kMaxExtensionDegree];
  run_start_words(F, run_lo, words);
  return ev.count_zeros(run_lo, run_hi, words);
}

// Iterates the front variable over a range of element indices,
// specialising every equation and recursing on the rest.
template <int K>
std::uint64_t count_front_range(const Kernel<K>& F,
                                const std::vector<SPoly>& eqs, int arity,
                                std::uint64_t q, std::uint64_t lo,
                                std::uint64_t hi) {
  const int k = F.width();
  std::uint32_t maxe = 0;
  for (const auto& f : eqs) maxe = std::max(maxe, f.max_front_exp());

  std::uint64_t words[kMaxExtensionDegree];
  // Decode the element with index lo, then tick the odometer.
  {
    std::uint64_t rem = lo;
    for (int pos = k - 1; pos >= 0; --pos) {
      words[pos] = rem % F.p;
      rem /= F.p;
    }
  }
  std::vector<std::uint64_t> powers(
      (static_cast<std::size_t>(maxe) + 1) * k, 0);
  std::uint64_t total = 0;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    // Power table for this value of the front variable.
    powers[0] = 1 % F.p;
    for (int i = 1; i < k; ++i) powers[static_cast<std::size_t>(i)] = 0;
    for (std::uint32_t e = 1; e <= maxe; ++e) {
      kern_mul(F, powers.data() + (static_cast<std::size_t>(e) - 1) * k,
               words, powers.data() + static_cast<std::size_t>(e) * k);
    }
    std::vector<SPoly> next;
    next.reserve(eqs.size());
    for (const auto& f : eqs) next.push_back(specialize_front(F, f, powers));
    total += count_assignments(F, std::move(next), arity - 1, q);
    int pos = k - 1;
    while (pos >= 0) {
      if (++words[pos] < F.p) break;
      words[pos] = 0;
      --pos;
    }
  }
  return total;
}

template <int K>
std::uint64_t count_assignments(const Kernel<K>& F, std::vector<SPoly> eqs,
                                int arity, std::uint64_t q) {
  // Prune: identically zero equations impose nothing; a nonzero constant
  // equation rules out every assignment.
  std::vector<SPoly> live;
  live.reserve(eqs.size());
  for (auto& f : eqs) {
    if (f.is_zero()) continue;
    if (f.is_constant()) return 0;
    live.push_back(std::move(f));
  }
  if (live.empty()) return pow_u64(q, arity);
  if (arity == 1) return count_univariate(F, live, q, 0, q / F.p);
  return count_front_range(F, live, arity, q, 0, q);
}

// Threaded top-level split of one stratum. Workers receive disjoint
// slices of the outermost enumeration and their exact integer subcounts
// are summed, so the result does not depend on the thread count.
template <int K>
std::uint64_t count_stratum(const Kernel<K>& F, std::vector<SPoly> eqs,
                            int arity, std::uint64_t q, int threads,
                            std::uint64_t work_estimate) {
  std::vector<SPoly> live;
  live.reserve(eqs.size());
  for (auto& f : eqs) {
    if (f.is_zero()) continue;
    if (f.is_constant()) return 0;
    live.push_back(std::move(f));
  }
  if (live.empty()) return pow_u64(q, arity);
  if (arity == 0) return 1;

  const std::uint64_t kParallelThreshold = std::uint64_t{1} << 14;
  const std::uint64_t slots = arity == 1 ? q / F.p : q;
  const std::uint64_t nthreads = std::min<std::uint64_t>(
      static_cast<std::uint64_t>(std::max(threads, 1)), slots);
  if (nthreads <= 1 || work_estimate < kParallelThreshold) {
    if (arity == 1) return count_univariate(F, live, q, 0, q / F.p);
    return count_front_range(F, live, arity, q, 0, q);
  }

  std::vector<std::uint64_t> partial(nthreads, 0);
  std::vector<std::exception_ptr> errors(nthreads);
  std::vector<std::thread> workers;
  workers.reserve(nthreads);
  for (std::uint64_t w = 0; w < nthreads; ++w) {
    const std::uint64_t lo = slots * w / nthreads;
    const std::uint64_t hi = slots * (w + 1) / nthreads;
    workers.emplace_back([&, w, lo, hi]() {
      try {
        partial[w] = arity == 1
                         ? count_univariate(F, live, q, lo, hi)
                         : count_front_range(F, live, arity, q, lo, hi);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  std::uint64_t total = 0;
  for (std::uint64_t w = 0; w < nthreads; ++w) {
    if (errors[w]) std::rethrow_exception(errors[w]);
    total += partial[w];
  }
  return total;
}

// ---- compilation and driver ---------------------------------------------------

template <int K>
Int count_in_extension(const VarietySpec& variety, const FieldCtxPtr& ext,
                       const CountOptions& options) {
  Kernel<K> F;
  F.p = ext->characteristic();
  F.kk = ext->degree();
  F.wide = F.p >= (std::uint64_t{1} << 29);
  for (int j = 0; j < ext->degree(); ++j) {
    const std::uint64_t m = ext->modulus()[static_cast<std::size_t>(j)];
    F.negmod[j] = m == 0 ? 0 : F.p - m;
  }
  const std::uint64_t q = ext->cardinality_u64();
  const int k = ext->degree();

  // Map every equation into the extension once.
  Embedding emb(variety.base_field(), ext);
  std::vector<SPoly> compiled;
  compiled.reserve(variety.equations().size());
  for (const auto& eq : variety.equations()) {
    SPoly f;
    f.terms.reserve(eq.terms().size());
    for (const auto& [e, c] : eq.terms()) {
      STerm t;
      t.e = e;
      t.c.assign(static_cast<std::size_t>(k), 0);
      emb.raw_apply(c.words(), t.c.data());
      f.terms.push_back(std::move(t));
    }
    compiled.push_back(std::move(f));
  }

  if (variety.ambient().kind == AmbientKind::kAffine) {
    const int arity = variety.ambient().dim;
    const std::uint64_t est = pow_u64(q, arity);
    return Int(count_stratum(F, std::move(compiled), arity, q,
                             options.threads, est));
  }

  // Projective: enumerate normalised representatives. Stratum s fixes
  // x_0 = ... = x_{s-1} = 0 and x_s = 1, leaving dim - s free
  // coordinates, so every projective point appears exactly once.
  const int dim = variety.ambient().dim;
  std::uint64_t total = 0;
  for (int s = 0; s <= dim; ++s) {
    std::vector<SPoly> sub;
    sub.reserve(compiled.size());
    for (const auto& f : compiled) {
      std::map<std::vector<std::uint32_t>, std::vector<std::uint64_t>> acc;
      for (const auto& t : f.terms) {
        bool killed = false;
        for (int i = 0; i < s; ++i)
          if (t.e[static_cast<std::size_t>(i)] != 0) {
            killed = true;
            break;
          }
        if (killed) continue;
        std::vector<std::uint32_t> rest(
            t.e.begin() + s + 1, t.e.end());
        auto it = acc.find(rest);
        if (it == acc.end()) {
          acc.emplace(std::move(rest), t.c);
        } else {
          kern_add(F, it->second.data(), t.c.data(), it->second.data());
        }
      }
      sub.push_back(normalize_terms(F, std::move(acc)));
    }
    const int arity = dim - s;
    const std::uint64_t est = pow_u64(q, arity);
    total += count_stratum(F, std::move(sub), arity, q, options.threads, est);
  }
  return Int(total);
}

}  // namespace

// ---- public interface ----------------------------------------------------------

VarietySpec::VarietySpec(std::string label, FieldCtxPtr base, Ambient ambient,
                         std::vector<MultiPoly> equations)
    : label_(std::move(label)),
      base_(std::move(base)),
      ambient_(ambient),
      equations_(std::move(equations)) {
  if (!base_) throw UsageError("VarietySpec: missing base field");
  if (ambient_.dim < 1)
    throw UsageError("VarietySpec: ambient dimension must be positive");
  for (const auto& eq : equations_) {
    if (!eq.ctx()->same(*base_))
      throw UsageError("VarietySpec: equation over a different field");
    if (eq.nvars() != coordinate_count()) {
      std::ostringstream os;
      os << "VarietySpec: equation arity " << eq.nvars() << " does not match "
         << coordinate_count() << " coordinates";
      throw UsageError(os.str());
    }
    if (ambient_.kind == AmbientKind::kProjective && !eq.is_homogeneous())
      throw UsageError(
          "VarietySpec: projective equations must be homogeneous");
  }
}

Int enumeration_cost(const VarietySpec& variety, int n) {
  if (n < 1) throw UsageError("enumeration_cost: extension degree must be >= 1");
  const Int q = int_pow(variety.base_field()->cardinality(),
                        static_cast<unsigned long>(n));
  if (variety.ambient().kind == AmbientKind::kAffine)
    return int_pow(q, static_cast<unsigned long>(variety.ambient().dim));
  Int total = 0;
  for (int v = 0; v <= variety.ambient().dim; ++v)
    total += int_pow(q, static_cast<unsigned long>(v));
  return total;
}

Int count_points(const VarietySpec& variety, int n,
                 const CountOptions& options) {
  if (n < 1) throw UsageError("count_points: extension degree must be >= 1");
  const auto& base = variety.base_field();
  const int k_ext = base->degree() * n;
  if (k_ext > kMaxExtensionDegree) {
    std::ostringstream os;
    os << "count_points: extension degree " << k_ext
       << " exceeds the supported maximum " << kMaxExtensionDegree;
    throw UsageError(os.str());
  }
  const Int cost = enumeration_cost(variety, n);
  if (cost > Int(options.budget)) {
    std::ostringstream os;
    os << "count_points: " << cost << " candidates for n = " << n
       << " exceed the budget " << options.budget;
    throw BudgetError(os.str(), cost, options.budget);
  }

  const FieldCtxPtr ext =
      n == 1 ? base : FieldCtx::make(base->characteristic(), k_ext);
  switch (k_ext) {
    case 1:
      return count_in_extension<1>(variety, ext, options);
    case 2:
      return count_in_extension<2>(variety, ext, options);
    case 3:
      return count_in_extension<3>(variety, ext, options);
    case 4:
      return count_in_extension<4>(variety, ext, options);
    case 5:
      return count_in_extension<5>(variety, ext, options);
    case 6:
      return count_in_extension<6>(variety, ext, options);
    case 8:
      return count_in_extension<8>(variety, ext, options);
    default:
      return count_in_extension<0>(variety, ext, options);
  }
}

const Int& CountTable::at(int n) const {
  if (n < 1 || n > depth())
    throw UsageError("CountTable: index outside the table");
  return counts[static_cast<std::size_t>(n - 1)];
}

CountTable count_table(const VarietySpec& variety, int depth,
                       const CountOptions& options) {
  if (depth < 1) throw UsageError("count_table: depth must be >= 1");
  CountTable out;
  out.q = variety.base_field()->cardinality();
  out.counts.reserve(static_cast<std::size_t>(depth));
  for (int n = 1; n <= depth; ++n)
    out.counts.push_back(count_points(variety, n, options));
  return out;
}

std::vector<int> moebius_table(int limit) {
  if (limit < 1) throw UsageError("moebius_table: limit must be >= 1");
  std::vector<int> mu(static_cast<std::size_t>(limit) + 1, 0);
  mu[1] = 1;
  for (int d = 2; d <= limit; ++d) {
    int n = d;
    int value = 1;
    bool squarefree = true;
    for (int f = 2; f * f <= n && squarefree; ++f) {
      if (n % f != 0) continue;
      n /= f;
      value = -value;
      if (n % f == 0) squarefree = false;
    }
    if (n > 1) value = -value;
    mu[static_cast<std::size_t>(d)] = squarefree ? value : 0;
  }
  return mu;
}

const Int& ClosedPointCensus::at(int d) const {
  if (d < 1 || d > depth())
    throw UsageError("ClosedPointCensus: index outside the census");
  return by_degree[static_cast<std::size_t>(d - 1)];
}

ClosedPointCensus closed_point_census(const CountTable& table) {
  const int m = table.depth();
  if (m < 1) throw UsageError("closed_point_census: empty count table");
  const auto mu = moebius_table(m);
  ClosedPointCensus out;
  out.q = table.q;
  out.by_degree.reserve(static_cast<std::size_t>(m));
  for (int d = 1; d <= m; ++d) {
    Int sum = 0;
    for (int e = 1; e <= d; ++e) {
      if (d % e != 0) continue;
      sum += Int(mu[static_cast<std::size_t>(d / e)]) * table.at(e);
    }
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), static_cast<unsigned long>(d))) {
      std::ostringstream os;
      os << "closed_point_census: inversion sum " << sum
         << " is not divisible by " << d
         << "; the count table is inconsistent";
      throw CheckFailure(os.str());
    }
    Int a;
    mpz_divexact_ui(a.get_mpz_t(), sum.get_mpz_t(),
                    static_cast<unsigned long>(d));
    if (a < 0) {
      std::ostringstream os;
      os << "closed_point_census: negative closed point count a_" << d << " = "
         << a << "; the count table is inconsistent";
      throw CheckFailure(os.str());
    }
    out.by_degree.push_back(std::move(a));
  }
  return out;
}

}  // namespace weilv
