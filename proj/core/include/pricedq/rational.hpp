#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "pricedq/errors.hpp"

namespace pricedq {

// Exact rational number with 64-bit numerator/denominator, always reduced,
// denominator > 0.  Intermediate products use 128-bit arithmetic; results
// that do not fit back into 64 bits throw std::overflow_error instead of
// silently losing precision.
class Rational {
public:
  constexpr Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit integer conversion is intended
  Rational(long long n, long long d);

  static Rational from_int128(__int128 n, __int128 d);
  // Accepts "3", "-3", "3/4", "0.25", "-1.5e-2" style decimal strings, exactly.
  static Rational parse(std::string_view text);
  // Exact value of a finite double (dyadic rational).
  static Rational from_double(double v);

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  // "p/q", or just "p" when q == 1.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  // Largest integer <= value.
  long long floor() const;

private:
  long long num_ = 0;
  long long den_ = 1;
};

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
Rational abs(const Rational& a);

}  // namespace pricedq
