// Copyright 2026 The fplcount Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Closed-form counts. Every quotient is formed as an exact rational and then
// checked to be integral.

#pragma once

#include <array>
#include <string>

#include "fplcount/exact.hpp"

namespace fplcount {

// Number of rhombus tilings of the hexagon with sides p, q, r, p, q, r.
inline ExactInt macmahon_h(long p, long q, long r) {
  if (p < 0 || q < 0 || r < 0) throw DomainError("macmahon_h: negative side");
  const ExactRat v = make_rat(
      hyperfactorial(p) * hyperfactorial(q) * hyperfactorial(r) *
          hyperfactorial(p + q + r),
      hyperfactorial(p + q) * hyperfactorial(p + r) * hyperfactorial(q + r));
  return require_integer(v, "macmahon_h");
}

inline ExactRat a_factor(long p, long q, long r) {
  if (p < 1 || q < 1 || r < 1) throw DomainError("a_factor: p,q,r >= 1");
  return make_rat(hyperfactorial(p + q + r + 2) * hyperfactorial(r) *
                      hyperfactorial(q) * hyperfactorial(p + 2) *
                      factorial(p + q + 1) * factorial(p + q + 2) *
                      factorial(p + r + 3) * factorial(p + r),
                  hyperfactorial(p + q + 4) * hyperfactorial(p + r + 4) *
                      hyperfactorial(q + r));
}

namespace detail {

// Common prefactor of k, f and z1.
inline ExactRat kf_prefactor(long p, long q, long r) {
  return make_rat(hyperfactorial(p + q + r + 1) * hyperfactorial(p + 1) *
                      hyperfactorial(q) * hyperfactorial(r) *
                      factorial(p + q) * factorial(p + r),
                  hyperfactorial(p + q + 2) * hyperfactorial(p + r + 2) *
                      hyperfactorial(q + r));
}

inline void require_positive(long p, long q, long r, const char* what) {
  if (p < 1 || q < 1 || r < 1) {
    throw DomainError(std::string(what) + ": p,q,r >= 1 required");
  }
}

}  // namespace detail

inline ExactInt k_formula(long p, long q, long r) {
  detail::require_positive(p, q, r, "k_formula");
  const ExactRat v =
      detail::kf_prefactor(p, q, r) * ExactRat(q * (p + 1) * (p + q + 1));
  return require_integer(v, "k_formula");
}

struct LmnValues {
  ExactInt l, m, n;
};

inline LmnValues lmn_formulas(long p, long q, long r) {
  const ExactRat a = a_factor(p, q, r);
  const ExactRat half(1, 2);
  const ExactRat l = a * half * ExactRat((p + 2) * (p + 3) * (p + r + 1) *
                                         (p + r + 2) * r * (r - 1));
  const ExactRat m =
      a * ExactRat((p + 1) * (p + 3) * (p + q + 3) * (p + r + 1) * q * r);
  const ExactRat n = a * half * ExactRat((p + 1) * (p + 2) * (p + q + 2) *
                                         (p + q + 3) * q * (q + 1));
  return {require_integer(l, "l"), require_integer(m, "m"),
          require_integer(n, "n")};
}

inline ExactInt f_formula(long p, long q, long r, long s) {
  detail::require_positive(p, q, r, "f_formula");
  if (s < 0) throw DomainError("f_formula: s >= 0 required");
  const ExactRat v =
      detail::kf_prefactor(p, q, r) *
      ExactRat(q * (p + 1) * (p + q + 1) + s * (p + q + 1) * (p + r + 1));
  return require_integer(v, "f_formula");
}

inline ExactInt z1(long p, long q, long r) {
  detail::require_positive(p, q, r, "z1");
  const long bracket = (p + 1) * (q * (p + q + 1) + r * (p + r + 1)) +
                       p * (p + q + 1) * (p + r + 1);
  return require_integer(detail::kf_prefactor(p, q, r) * ExactRat(bracket),
                         "z1");
}

// The six summands of the even-p decomposition, in the order
// (2s^2+s)h(p+2,q,r), 2s k(p+1,q,r), (2s+1)k(p+1,r,q), l, m, n.
inline std::array<ExactInt, 6> z2_components(long p, long q, long r) {
  detail::require_positive(p, q, r, "z2_components");
  if (p % 2 != 0) throw DomainError("z2_components: p must be even");
  const long s = p / 2;
  const LmnValues lmn = lmn_formulas(p, q, r);
  return {ExactInt(2 * s * s + s) * macmahon_h(p + 2, q, r),
          ExactInt(2 * s) * k_formula(p + 1, q, r),
          ExactInt(2 * s + 1) * k_formula(p + 1, r, q),
          lmn.l,
          lmn.m,
          lmn.n};
}

inline ExactInt z2_component_sum(long p, long q, long r) {
  ExactInt total = 0;
  for (const ExactInt& v : z2_components(p, q, r)) total += v;
  return total;
}

// Compact polynomial with inner factor p(p+r+2) + pq + c*q*r. The value
// c = 3 agrees with the component sum identically; c = 4 is kept for
// diagnostics and is not integral in general.
inline ExactRat z2_compact_rational(long p, long q, long r, long c) {
  detail::require_positive(p, q, r, "z2_compact");
  const ExactRat bracket(
      (p + 1) * (p + q + 3) * (p + r + 1) * (p * (p + r + 2) + p * q + c * q * r) +
      2 * p * (p + q + 3) * q * (p + r + 1) * (p + q + 2) +
      2 * (p + 1) * (p + q + 3) * (p + r + 1) * (p + r + 2) * r +
      (p + 3) * (p + r + 1) * (p + r + 2) * r * (r - 1) +
      (p + 1) * (p + q + 2) * (p + q + 3) * q * (q + 1));
  ExactRat v = a_factor(p, q, r) * make_rat(p + 2, 2) * bracket;
  v.canonicalize();
  return v;
}

inline ExactInt z2(long p, long q, long r) {
  return require_integer(z2_compact_rational(p, q, r, 3), "z2");
}

// Per-case expressions of the four local configurations near P (even p).
inline std::array<ExactInt, 4> z2_case_values(long p, long q, long r) {
  detail::require_positive(p, q, r, "z2_case_values");
  if (p % 2 != 0) throw DomainError("z2_case_values: p must be even");
  const long s = p / 2;
  const ExactInt h = macmahon_h(p + 2, q, r);
  const ExactInt kq = k_formula(p + 1, q, r);
  const ExactInt kr = k_formula(p + 1, r, q);
  const LmnValues lmn = lmn_formulas(p, q, r);
  return {ExactInt(s * (s - 1) / 2) * h + ExactInt(s) * kr + lmn.l,
          ExactInt(s - 1) * kq + ExactInt(s * s - 1) * h + lmn.m +
              ExactInt(s + 1) * kr,
          kq + ExactInt(s + 1) * h,
          lmn.n + ExactInt(s) * kq + ExactInt(s * (s + 1) / 2) * h};
}

}  // namespace fplcount
