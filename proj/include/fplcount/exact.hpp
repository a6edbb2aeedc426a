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

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fplcount {

// Arbitrary-precision values used for every count and formula output.
using ExactInt = mpz_class;
// Always canonicalized: lowest terms, positive denominator.
using ExactRat = mpq_class;

// Raised when an identity that must hold by construction fails, e.g. a
// product formula that should be integral is not.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised for arguments outside an operation's domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an enumeration would exceed its configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline ExactInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative number");
  ExactInt out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

// n!` = (n-1)! (n-2)! ... 1!, empty product for n <= 1.
inline ExactInt hyperfactorial(long n) {
  if (n < 0) throw DomainError("hyperfactorial of negative number");
  ExactInt out = 1;
  ExactInt f = 1;
  for (long i = 1; i < n; ++i) {
    f *= i;
    out *= f;
  }
  return out;
}

inline ExactRat make_rat(const ExactInt& num, const ExactInt& den) {
  if (den == 0) throw DomainError("zero denominator");
  ExactRat q(num, den);
  q.canonicalize();
  return q;
}

// Converts a rational known to be integral; throws InternalError otherwise.
inline ExactInt require_integer(const ExactRat& q, const char* what) {
  if (q.get_den() != 1) {
    throw InternalError(std::string(what) + " is not integral: " + q.get_str());
  }
  return q.get_num();
}

inline std::string to_decimal(const ExactInt& v) { return v.get_str(10); }

inline std::string to_decimal(const ExactRat& v) { return v.get_str(10); }

inline ExactInt parse_exact_int(const std::string& text) {
  ExactInt v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw DomainError("not a decimal integer: " + text);
  }
  return v;
}

}  // namespace fplcount
