#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace sshg {

// Element of Q(w), w a primitive eighth root of unity: a0 + a1 w + a2 w^2 + a3 w^3.
// w^2 = i and w^4 = -1.
class CycloScalar {
 public:
  CycloScalar() = default;
  CycloScalar(const mpq_class& q);  // NOLINT(google-explicit-constructor)
  CycloScalar(long q) : CycloScalar(mpq_class(q)) {}  // NOLINT(google-explicit-constructor)
  CycloScalar(const mpq_class& a0, const mpq_class& a1, const mpq_class& a2, const mpq_class& a3);

  static CycloScalar omega_power(long k);
  static CycloScalar i() { return omega_power(2); }

  mpq_class operator[](int k) const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  // q * w^k with q != 0 and k in [0,4) when only one coordinate is non-zero.
  struct Monomial {
    mpq_class q;
    int k;
  };
  std::optional<Monomial> as_monomial() const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
  friend bool operator==(const CycloScalar& a, const CycloScalar& b);

  // Image under the field automorphism w -> w^k, k odd.
  CycloScalar conjugate(int k) const;
  // Throws DomainError on zero.
  CycloScalar inverse() const;

  // Debug form "(a0, a1, a2, a3)".
  std::string debug() const;

 private:
  using Big = std::array<mpq_class, 4>;
  // Small form n_[k] / d_ with d_ > 0 and gcd(n_0..n_3, d_) = 1; every value that
  // fits is kept small, so equal values have equal representations.
  std::array<std::int64_t, 4> n_{};
  std::int64_t d_ = 1;
  std::shared_ptr<const Big> big_;

  Big to_big() const;
  static CycloScalar from_big(Big b);
  static CycloScalar from_wide(const std::array<__int128, 4>& n, __int128 d);
};

}  // namespace sshg
