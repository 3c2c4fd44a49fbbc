#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>

namespace tenscanon {

/// Exact arbitrary-precision rational number.
///
/// All coefficient arithmetic in the engine is exact; canonical forms are
/// compared for equality, so floating point is never acceptable. This is a
/// thin value wrapper over boost::multiprecision::cpp_rational that pins the
/// printed form ("p" or "p/q" with q > 1 and the sign on the numerator) and
/// avoids leaking expression templates into client code.
class Rational {
 public:
  using Rep = boost::multiprecision::cpp_rational;

  Rational() : v_(0) {}
  Rational(long long n) : v_(n) {}  // NOLINT: implicit by design for literals
  Rational(long long num, long long den);
  explicit Rational(Rep v) : v_(std::move(v)) {}

  /// Parses "p" or "p/q" (optional leading '-'). Throws InputError on
  /// malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  bool is_zero() const { return v_.is_zero(); }
  int sign() const { return v_.sign(); }

  Rational abs() const { return Rational(Rep(boost::multiprecision::abs(v_))); }
  bool is_one() const;
  bool is_minus_one() const;

  /// "p" if the denominator is 1, otherwise "p/q".
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(Rep(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(Rep(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(Rep(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a) { return Rational(Rep(-a.v_)); }

  Rational& operator+=(const Rational& b) {
    v_ += b.v_;
    return *this;
  }
  Rational& operator-=(const Rational& b) {
    v_ -= b.v_;
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    v_ *= b.v_;
    return *this;
  }
  Rational& operator/=(const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rep v_;
};

}  // namespace tenscanon
