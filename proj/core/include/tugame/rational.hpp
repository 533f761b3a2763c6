// Copyright 2026 The tugame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TUGAME_RATIONAL_HPP
#define TUGAME_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tugame {

/// Exact rational number. Always held in canonical form: reduced fraction,
/// positive denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long value) : q_(static_cast<long>(value)) {}  // NOLINT: implicit by design
  Rational(int value) : q_(value) {}                      // NOLINT
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p", or "p/q" (q > 0 after canonicalization). Throws
  /// std::invalid_argument on anything else, including decimal notation.
  static Rational from_string(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  /// Canonical serialization: "p" when integral, "p/q" otherwise.
  std::string str() const;

  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tugame

#endif  // TUGAME_RATIONAL_HPP
