#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

#include "witt/errors.hpp"

namespace witt {

/// Exact rational scalar. Always in lowest terms, denominator positive,
/// zero stored as 0/1 — so equality is plain representation equality.
class Scalar {
 public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT: integers embed
  Scalar(long num, long den) {
    if (den == 0) throw Error("scalar denominator is zero");
    v_ = mpq_class(mpz_class(num), mpz_class(den));
    v_.canonicalize();
  }

  /// Parses a literal `p` or `p/q` with an optional leading sign.
  /// No whitespace is allowed inside the literal.
  static Scalar from_string(const std::string& text);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar operator+(const Scalar& o) const { return Scalar(mpq_class(v_ + o.v_)); }
  Scalar operator-(const Scalar& o) const { return Scalar(mpq_class(v_ - o.v_)); }
  Scalar operator*(const Scalar& o) const { return Scalar(mpq_class(v_ * o.v_)); }
  Scalar operator/(const Scalar& o) const {
    if (o.is_zero()) throw Error("division by zero");
    return Scalar(mpq_class(v_ / o.v_));
  }
  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }

  Scalar inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    return Scalar(mpq_class(1 / v_));
  }
  Scalar abs() const { return is_negative() ? -*this : *this; }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Scalar& o) const {
    const int c = cmp(v_, o.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Canonical text: `p` for integers, `p/q` otherwise.
  std::string str() const { return v_.get_str(); }

 private:
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

inline Scalar Scalar::from_string(const std::string& text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < n && text[i] >= '0' && text[i] <= '9') { ++i; ++digits; }
  if (digits == 0) throw Error("malformed rational literal: '" + text + "'");
  if (i < n) {
    if (text[i] != '/') throw Error("malformed rational literal: '" + text + "'");
    ++i;
    std::size_t den_digits = 0;
    while (i < n && text[i] >= '0' && text[i] <= '9') { ++i; ++den_digits; }
    if (den_digits == 0 || i != n)
      throw Error("malformed rational literal: '" + text + "'");
  }
  mpq_class q;
  if (q.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0)
    throw Error("malformed rational literal: '" + text + "'");
  if (q.get_den() == 0) throw Error("rational literal with zero denominator: '" + text + "'");
  q.canonicalize();
  Scalar s;
  s.v_ = std::move(q);
  return s;
}

}  // namespace witt
