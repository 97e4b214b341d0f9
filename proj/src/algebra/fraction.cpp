#include "sshg/fraction.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace sshg {
namespace {

using wide = __int128;

std::int64_t narrow(wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("exponent arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

wide gcd_wide(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Fraction make(wide n, wide d) {
  if (d == 0) throw std::domain_error("zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  wide g = gcd_wide(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return Fraction(narrow(n), narrow(d));
}

}  // namespace

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

std::int64_t Fraction::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Fraction Fraction::operator-() const { return make(-static_cast<wide>(num_), den_); }

Fraction operator+(const Fraction& a, const Fraction& b) {
  return make(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
              static_cast<wide>(a.den_) * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  return make(static_cast<wide>(a.num_) * b.den_ - static_cast<wide>(b.num_) * a.den_,
              static_cast<wide>(a.den_) * b.den_);
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  return make(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero exponent");
  return make(static_cast<wide>(a.num_) * b.den_, static_cast<wide>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  wide l = static_cast<wide>(a.num_) * b.den_;
  wide r = static_cast<wide>(b.num_) * a.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Fraction::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace sshg
