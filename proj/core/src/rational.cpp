#include "pricedq/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace pricedq {

namespace {

using int128 = __int128;
using uint128 = unsigned __int128;

uint128 uabs128(int128 v) { return v < 0 ? static_cast<uint128>(-v) : static_cast<uint128>(v); }

uint128 gcd128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow_checked(int128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw std::overflow_error("rational overflows 64-bit numerator/denominator");
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long n, long long d) {
  if (d == 0) throw InputError("rational with zero denominator");
  *this = from_int128(n, d);
}

Rational Rational::from_int128(int128 n, int128 d) {
  if (d == 0) throw InputError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    Rational r;
    return r;
  }
  uint128 g = gcd128(uabs128(n), static_cast<uint128>(d));
  n /= static_cast<int128>(g);
  d /= static_cast<int128>(g);
  Rational r;
  r.num_ = narrow_checked(n);
  r.den_ = narrow_checked(d);
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto fail = [&] { throw InputError("cannot parse rational: '" + std::string(text) + "'"); };
  size_t i = 0;
  auto rest = [&] { return text.substr(i); };
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail();
  int128 int_part = 0;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    int_part = int_part * 10 + (text[i] - '0');
    if (int_part > static_cast<int128>(std::numeric_limits<long long>::max())) fail();
    ++i;
  }
  if (i < text.size() && text[i] == '/') {
    ++i;
    if (rest().empty()) fail();
    int128 den = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      den = den * 10 + (text[i] - '0');
      if (den > static_cast<int128>(std::numeric_limits<long long>::max())) fail();
      ++i;
    }
    if (i != text.size() || den == 0) fail();
    return from_int128(neg ? -int_part : int_part, den);
  }
  int128 frac_num = 0;
  int128 frac_den = 1;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      frac_num = frac_num * 10 + (text[i] - '0');
      frac_den *= 10;
      if (frac_den > static_cast<int128>(std::numeric_limits<long long>::max())) fail();
      ++i;
    }
  }
  long long exp10 = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      eneg = text[i] == '-';
      ++i;
    }
    if (i >= text.size()) fail();
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      exp10 = exp10 * 10 + (text[i] - '0');
      if (exp10 > 40) fail();
      ++i;
    }
    if (eneg) exp10 = -exp10;
  }
  if (i != text.size()) fail();
  int128 num = int_part * frac_den + frac_num;
  int128 den = frac_den;
  while (exp10 > 0) {
    num *= 10;
    if (num > (static_cast<int128>(1) << 100)) fail();
    --exp10;
  }
  while (exp10 < 0) {
    den *= 10;
    if (den > (static_cast<int128>(1) << 100)) fail();
    ++exp10;
  }
  return from_int128(neg ? -num : num, den);
}

Rational Rational::from_double(double v) {
  if (!(v == v) || v > 9.2e18 || v < -9.2e18)
    throw InputError("double not representable as rational");
  if (v == static_cast<long long>(v)) return Rational(static_cast<long long>(v));
  int128 den = 1;
  while (v != static_cast<int128>(v)) {
    v *= 2;
    den <<= 1;
    if (den > (static_cast<int128>(1) << 90))
      throw InputError("double not representable as 64-bit rational");
  }
  return from_int128(static_cast<int128>(v), den);
}

std::string Rational::to_string() const {
  std::string s = std::to_string(num_);
  if (den_ != 1) {
    s += '/';
    s += std::to_string(den_);
  }
  return s;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow_checked(-static_cast<int128>(num_));
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  int128 n = static_cast<int128>(num_) * o.den_ + static_cast<int128>(o.num_) * den_;
  int128 d = static_cast<int128>(den_) * o.den_;
  *this = from_int128(n, d);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  int128 n = static_cast<int128>(num_) * o.den_ - static_cast<int128>(o.num_) * den_;
  int128 d = static_cast<int128>(den_) * o.den_;
  *this = from_int128(n, d);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  int128 n = static_cast<int128>(num_) * o.num_;
  int128 d = static_cast<int128>(den_) * o.den_;
  *this = from_int128(n, d);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw InputError("rational division by zero");
  int128 n = static_cast<int128>(num_) * o.den_;
  int128 d = static_cast<int128>(den_) * o.num_;
  *this = from_int128(n, d);
  return *this;
}

long long Rational::floor() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational abs(const Rational& a) { return a.num() < 0 ? -a : a; }

}  // namespace pricedq
