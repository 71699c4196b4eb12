// Copyright 2026 the puiseux authors.
// Licensed under the Apache License, Version 2.0; see LICENSE in the
// repository root for details.

#ifndef PUISEUX_RAT_HPP
#define PUISEUX_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace puiseux {

using Int = boost::multiprecision::cpp_int;

/// Exact signed rational, always in canonical lowest terms with a
/// positive denominator. Zero is 0/1. For q > 0, num() and den() are the
/// coprime numerator/denominator pair.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rat(Int n) : num_(std::move(n)), den_(1) {}
  Rat(Int num, Int den);

  /// Parses "a/b" or "a" (ASCII, optional leading '-'). Input need not
  /// be in lowest terms; throws std::invalid_argument on malformed text.
  static Rat parse(std::string_view text);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  bool is_negative() const { return num_ < 0; }
  bool is_positive() const { return num_ > 0; }

  std::string str() const;

  friend Rat operator+(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a, const Rat& b);
  friend Rat operator*(const Rat& a, const Rat& b);
  friend Rat operator-(const Rat& a) { Rat r = a; r.num_ = -r.num_; return r; }
  Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
  Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
  Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }

  /// Exact division; throws std::invalid_argument when b is zero.
  friend Rat operator/(const Rat& a, const Rat& b);

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    Int lhs = a.num_ * b.den_;
    Int rhs = b.num_ * a.den_;
    return lhs < rhs ? std::strong_ordering::less
         : lhs > rhs ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& q);

 private:
  void canonicalize();
  Int num_;
  Int den_;
};

/// floor(a/b) for a rational a/b given as a Rat (floor of the value).
Int floor_int(const Rat& q);

}  // namespace puiseux

#endif  // PUISEUX_RAT_HPP
