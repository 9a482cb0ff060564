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

#ifndef WEILV_COMMON_HPP_
#define WEILV_COMMON_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace weilv {

// Arbitrary precision integer and rational types. Every arithmetic
// statement the library certifies (point counts, series coefficients,
// determinants, bound comparisons) is carried out in these types; doubles
// appear only in root finding and in human-facing margins.
using Int = mpz_class;
using Rat = mpq_class;

// Base class for everything thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// The caller combined objects incorrectly: mismatched field contexts,
// mismatched series orders, shallower data than an algorithm needs.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

// A mathematically invalid request on valid objects, such as inverting
// zero or reconstructing a rational function from a series that has none.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// An enumeration would visit more candidates than the configured budget.
// Thrown before any work is performed so callers can retry with a larger
// budget or a shallower request.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, const Int& required,
              std::uint64_t budget)
      : Error(what), required_(required), budget_(budget) {}

  const Int& required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  Int required_;
  std::uint64_t budget_;
};

// An internal consistency condition that is guaranteed by theory failed on
// concrete data. Seeing this means a bug or a misuse upstream, never a
// rounding artifact: all such checks are exact.
class CheckFailure : public Error {
 public:
  explicit CheckFailure(const std::string& what) : Error(what) {}
};

// A rational function whose expansion should have integer coefficients
// produced a non-integer. Distinguished from CheckFailure so callers can
// report integrality separately from other consistency conditions.
class IntegralityError : public CheckFailure {
 public:
  explicit IntegralityError(const std::string& what) : CheckFailure(what) {}
};

// An iterative numerical procedure (root refinement) failed to converge.
class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& what) : Error(what) {}
};

// Default cap on candidate points visited by a single enumeration call.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

// Exact p^e for word-sized inputs.
Int int_pow(const Int& base, unsigned long e);

// Deterministic primality test by trial division; intended for the
// word-sized characteristics this library works with.
bool is_prime_u64(std::uint64_t n);

// Canonicalised rational num/den. Throws DomainError when den == 0.
Rat make_rat(const Int& num, const Int& den);

}  // namespace weilv

#endif  // WEILV_COMMON_HPP_
