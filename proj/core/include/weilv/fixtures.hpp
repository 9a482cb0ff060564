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

#ifndef WEILV_FIXTURES_HPP_
#define WEILV_FIXTURES_HPP_

#include <functional>
#include <string_view>
#include <vector>

#include "weilv/common.hpp"
#include "weilv/counting.hpp"

namespace weilv {

// A catalog entry: a variety together with whatever is known about it a
// priori — a closed-form point count when one exists, an author-asserted
// smoothness flag, and the geometric data consumed by the bound checks.
struct Fixture {
  VarietySpec variety;
  // Exact N_n when a closed form is known; empty otherwise.
  std::function<Int(int)> oracle;
  // Author-asserted smoothness. For Weierstrass cubics this is backed by
  // a nonvanishing discriminant, for diagonal hypersurfaces by the
  // exponent being prime to the characteristic; it is an input
  // assumption, not an algorithmic certification.
  bool smooth = false;
  // Dimension of the variety itself (not of the ambient space).
  int dimension = 0;
  // Genus, for smooth projective curves; -1 otherwise.
  int genus = -1;
  // Multidegree when the variety is presented as a complete intersection
  // in projective space; empty otherwise. A single entry marks a
  // hypersurface, the only case the point-count deviation bound handles.
  std::vector<int> multidegrees;
};

// The standard catalog:
//   - projective spaces P^d for d <= 3 over q in {2, 3, 4, 5}, with the
//     closed-form oracle N_n = sum_{i<=d} q^{in};
//   - eight smooth Weierstrass cubics over p in {2, 5, 7, 11, 13};
//   - diagonal plane cubics x^3 + y^3 + z^3 over p in {5, 7, 11, 13};
//   - diagonal quadric surfaces over F_3 and F_5 and the diagonal cubic
//     surface over F_7;
//   - the Grassmannian Gr(1,3) as the Pluecker quadric in P^5 over F_2
//     and F_3, with the Gaussian-binomial oracle (q^{2n}+1)(q^{2n}+q^n+1).
std::vector<Fixture> catalog();

// Looks a fixture up by its exact label; UsageError when absent.
const Fixture& fixture_by_label(const std::vector<Fixture>& cat,
                                std::string_view label);

// Largest depth m <= cap whose enumeration cost stays within budget
// (0 when even m = 1 does not fit).
int max_depth_within_budget(const VarietySpec& variety, int cap,
                            std::uint64_t budget);

// Long-form Weierstrass plane cubic
//   y^2 z + a1 xyz + a3 y z^2 = x^3 + a2 x^2 z + a4 x z^2 + a6 z^3
// over the prime field F_p, as a projective variety in P^2.
VarietySpec weierstrass_curve(std::uint64_t p, long a1, long a2, long a3,
                              long a4, long a6, std::string label);

// Exact discriminant test for the curve above: true iff the standard
// discriminant (computed over Z from b2, b4, b6, b8) is nonzero mod p,
// i.e. the curve is smooth.
bool weierstrass_is_smooth(std::uint64_t p, long a1, long a2, long a3,
                           long a4, long a6);

}  // namespace weilv

#endif  // WEILV_FIXTURES_HPP_
