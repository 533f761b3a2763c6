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

#include "tugame/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace tugame {

namespace {

bool valid_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : q_(num, den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::from_string(std::string_view text) {
  // mpz_class rejects a leading '+', which we accept.
  const auto strip_plus = [](std::string_view s) {
    return s.starts_with('+') ? s.substr(1) : s;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_token(text)) {
      throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    }
    return Rational(mpq_class(mpz_class(std::string(strip_plus(text))), 1));
  }
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = text.substr(slash + 1);
  if (!valid_integer_token(num) || !valid_integer_token(den)) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
  mpz_class d{std::string(strip_plus(den))};
  if (d == 0) {
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(mpq_class(mpz_class(std::string(strip_plus(num))), d));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace tugame
