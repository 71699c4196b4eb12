// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#include "puiseux/rat.hpp"

#include <boost/multiprecision/integer.hpp>

#include <ostream>
#include <stdexcept>

namespace puiseux {

using boost::multiprecision::gcd;

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("Rat: zero denominator");
  canonicalize();
}

void Rat::canonicalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rat Rat::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> Int {
    if (s.empty()) throw std::invalid_argument("Rat: empty integer");
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) throw std::invalid_argument("Rat: bare sign");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] < '0' || s[j] > '9') {
        throw std::invalid_argument("Rat: bad digit in '" + std::string(s) +
                                    "'");
      }
    }
    return Int(std::string(s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int n = parse_int(text.substr(0, slash));
  Int d = parse_int(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("Rat: zero denominator");
  return Rat(std::move(n), std::move(d));
}

std::string Rat::str() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += '/';
    s += den_.str();
  }
  return s;
}

Rat operator+(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator-(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rat operator*(const Rat& a, const Rat& b) {
  return Rat(a.num_ * b.num_, a.den_ * b.den_);
}

Rat operator/(const Rat& a, const Rat& b) {
  if (b.is_zero()) throw std::invalid_argument("Rat: division by zero");
  return Rat(a.num_ * b.den_, a.den_ * b.num_);
}

std::ostream& operator<<(std::ostream& os, const Rat& q) {
  return os << q.str();
}

Int floor_int(const Rat& q) {
  Int quo = q.num() / q.den();
  if (q.num() < 0 && quo * q.den() != q.num()) --quo;
  return quo;
}

}  // namespace puiseux
