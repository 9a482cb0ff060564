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

// Brute-force point counting for affine and projective varieties over
// finite fields: N_n is the number of solutions with coordinates in the
// degree-n extension of the base field, counted by exhaustive enumeration.
// Also the closed-point census obtained from the counts by Moebius
// inversion.

#ifndef WEILV_COUNTING_HPP_
#define WEILV_COUNTING_HPP_

#include <string>
#include <vector>

#include "weilv/algebra.hpp"
#include "weilv/common.hpp"
#include "weilv/ffield.hpp"

namespace weilv {

enum class AmbientKind { kAffine, kProjective };

struct Ambient {
  AmbientKind kind = AmbientKind::kProjective;
  // Dimension of the ambient space: affine dim-space has dim coordinates,
  // projective dim-space has dim + 1 homogeneous coordinates.
  int dim = 1;
};

// A variety over a finite base field, given by a list of polynomial
// equations in the coordinates of its ambient space. For a projective
// ambient every equation must be homogeneous.
class VarietySpec {
 public:
  VarietySpec(std::string label, FieldCtxPtr base, Ambient ambient,
              std::vector<MultiPoly> equations);

  const std::string& label() const { return label_; }
  const FieldCtxPtr& base_field() const { return base_; }
  const Ambient& ambient() const { return ambient_; }
  const std::vector<MultiPoly>& equations() const { return equations_; }

  int coordinate_count() const {
    return ambient_.kind == AmbientKind::kAffine ? ambient_.dim
                                                 : ambient_.dim + 1;
  }

 private:
  std::string label_;
  FieldCtxPtr base_;
  Ambient ambient_;
  std::vector<MultiPoly> equations_;
};

struct CountOptions {
  std::uint64_t budget = kDefaultBudget;
  int threads = 1;
};

// Number of candidate tuples the enumeration for (X, n) visits: q^{n*dim}
// for affine space, and the point count of the ambient projective space
// (summed over the normalisation strata) for projective space.
Int enumeration_cost(const VarietySpec& variety, int n);

// The number of points of the variety with coordinates in F_{q^n},
// where q is the cardinality of the base field. Projective points are
// enumerated in normalised homogeneous coordinates (first nonzero
// coordinate equal to one), so each point is visited exactly once.
//
// Throws UsageError when the required extension exceeds the supported
// degree and BudgetError (before any enumeration) when the candidate
// count exceeds options.budget. Counting is exact and deterministic, also
// across thread counts.
Int count_points(const VarietySpec& variety, int n,
                 const CountOptions& options = {});

// N_1 .. N_depth for a fixed variety.
struct CountTable {
  Int q;                    // cardinality of the base field
  std::vector<Int> counts;  // counts[i] is N_{i+1}

  int depth() const { return static_cast<int>(counts.size()); }
  const Int& at(int n) const;  // N_n, 1-based
};

CountTable count_table(const VarietySpec& variety, int depth,
                       const CountOptions& options = {});

// Numbers a_d of closed points of degree d, recovered from the counts by
// Moebius inversion: a_d = (1/d) sum_{e | d} mu(d/e) N_e. The inversion
// must produce non-negative integers; anything else raises CheckFailure,
// since it certifies that the input table is not a consistent count
// sequence.
struct ClosedPointCensus {
  Int q;
  std::vector<Int> by_degree;  // by_degree[i] is a_{i+1}

  int depth() const { return static_cast<int>(by_degree.size()); }
  const Int& at(int d) const;  // a_d, 1-based
};

ClosedPointCensus closed_point_census(const CountTable& table);

// Moebius function on 1..limit, by sieve.
std::vector<int> moebius_table(int limit);

}  // namespace weilv

#endif  // WEILV_COUNTING_HPP_
