#include "sshg/cyclo.hpp"

#include <algorithm>

#include "sshg/error.hpp"

namespace sshg {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// keeps products of two small numbers, summed four times, inside i128
constexpr std::int64_t kLimit = std::int64_t(1) << 62;

u128 uabs(i128 v) { return v < 0 ? u128(-v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(i128 v) { return v < kLimit && v > -kLimit; }

mpz_class to_mpz(i128 v) {
  bool neg = v < 0;
  u128 u = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class out = (hi << 64) + lo;
  return neg ? mpz_class(-out) : out;
}

}  // namespace

CycloScalar CycloScalar::from_wide(const std::array<i128, 4>& n, i128 d) {
  if (d < 0) {
    std::array<i128, 4> m;
    for (int k = 0; k < 4; ++k) m[k] = -n[k];
    return from_wide(m, -d);
  }
  u128 g = uabs(d);
  for (i128 v : n) g = gcd128(g, uabs(v));
  if (g == 0) return CycloScalar();
  std::array<i128, 4> r;
  for (int k = 0; k < 4; ++k) r[k] = n[k] / i128(g);
  i128 dd = d / i128(g);
  bool small = fits(dd);
  for (i128 v : r) small = small && fits(v);
  CycloScalar out;
  if (small) {
    for (int k = 0; k < 4; ++k) out.n_[k] = static_cast<std::int64_t>(r[k]);
    out.d_ = static_cast<std::int64_t>(dd);
    return out;
  }
  Big b;
  mpz_class den = to_mpz(dd);
  for (int k = 0; k < 4; ++k) {
    b[k] = mpq_class(to_mpz(r[k]), den);
    b[k].canonicalize();
  }
  out.big_ = std::make_shared<const Big>(std::move(b));
  return out;
}

CycloScalar CycloScalar::from_big(Big b) {
  mpz_class l = 1;
  for (auto& q : b) {
    q.canonicalize();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  std::array<mpz_class, 4> n;
  for (int k = 0; k < 4; ++k) n[k] = b[k].get_num() * (l / b[k].get_den());
  auto small = [](const mpz_class& z) { return mpz_cmp_si(z.get_mpz_t(), kLimit) < 0 && mpz_cmp_si(z.get_mpz_t(), -kLimit) > 0; };
  bool ok = small(l);
  for (const auto& z : n) ok = ok && small(z);
  CycloScalar out;
  if (ok) {
    for (int k = 0; k < 4; ++k) out.n_[k] = n[k].get_si();
    out.d_ = l.get_si();
  } else {
    out.big_ = std::make_shared<const Big>(std::move(b));
  }
  return out;
}

CycloScalar::Big CycloScalar::to_big() const {
  if (big_) return *big_;
  Big b;
  for (int k = 0; k < 4; ++k) {
    b[k] = mpq_class(mpz_class(static_cast<long>(n_[k])), mpz_class(static_cast<long>(d_)));
    b[k].canonicalize();
  }
  return b;
}

CycloScalar::CycloScalar(const mpq_class& q) : CycloScalar(from_big(Big{q, 0, 0, 0})) {}

CycloScalar::CycloScalar(const mpq_class& a0, const mpq_class& a1, const mpq_class& a2,
                         const mpq_class& a3)
    : CycloScalar(from_big(Big{a0, a1, a2, a3})) {}

mpq_class CycloScalar::operator[](int k) const {
  if (big_) return (*big_)[k];
  mpq_class q(mpz_class(static_cast<long>(n_[k])), mpz_class(static_cast<long>(d_)));
  q.canonicalize();
  return q;
}

CycloScalar CycloScalar::omega_power(long k) {
  long m = ((k % 8) + 8) % 8;
  CycloScalar out;
  if (m < 4)
    out.n_[m] = 1;
  else
    out.n_[m - 4] = -1;
  return out;
}

bool CycloScalar::is_zero() const { return !big_ && n_[0] == 0 && n_[1] == 0 && n_[2] == 0 && n_[3] == 0; }

bool CycloScalar::is_one() const { return !big_ && n_[0] == 1 && d_ == 1 && n_[1] == 0 && n_[2] == 0 && n_[3] == 0; }

bool CycloScalar::is_rational() const {
  if (big_) return sgn((*big_)[1]) == 0 && sgn((*big_)[2]) == 0 && sgn((*big_)[3]) == 0;
  return n_[1] == 0 && n_[2] == 0 && n_[3] == 0;
}

std::optional<CycloScalar::Monomial> CycloScalar::as_monomial() const {
  int found = -1;
  for (int k = 0; k < 4; ++k) {
    bool nz = big_ ? sgn((*big_)[k]) != 0 : n_[k] != 0;
    if (nz) {
      if (found >= 0) return std::nullopt;
      found = k;
    }
  }
  if (found < 0) return std::nullopt;
  return Monomial{(*this)[found], found};
}

CycloScalar CycloScalar::operator-() const {
  CycloScalar out;
  if (big_) {
    Big b = *big_;
    for (auto& q : b) q = -q;
    out.big_ = std::make_shared<const Big>(std::move(b));
    return out;
  }
  for (int k = 0; k < 4; ++k) out.n_[k] = -n_[k];
  out.d_ = d_;
  return out;
}

CycloScalar& CycloScalar::operator+=(const CycloScalar& o) {
  if (!big_ && !o.big_) {
    if (d_ == o.d_) {
      std::array<i128, 4> n;
      for (int k = 0; k < 4; ++k) n[k] = i128(n_[k]) + o.n_[k];
      return *this = from_wide(n, d_);
    }
    i128 g = i128(gcd128(u128(d_), u128(o.d_)));
    i128 fa = o.d_ / g, fb = d_ / g;
    std::array<i128, 4> n;
    for (int k = 0; k < 4; ++k) n[k] = i128(n_[k]) * fa + i128(o.n_[k]) * fb;
    return *this = from_wide(n, i128(d_) * fa);
  }
  Big a = to_big(), b = o.to_big();
  for (int k = 0; k < 4; ++k) a[k] += b[k];
  return *this = from_big(std::move(a));
}

CycloScalar& CycloScalar::operator-=(const CycloScalar& o) { return *this += -o; }

CycloScalar& CycloScalar::operator*=(const CycloScalar& o) {
  if (!big_ && !o.big_) {
    std::array<i128, 4> r{};
    for (int a = 0; a < 4; ++a) {
      if (n_[a] == 0) continue;
      for (int b = 0; b < 4; ++b) {
        if (o.n_[b] == 0) continue;
        i128 p = i128(n_[a]) * o.n_[b];
        if (a + b < 4)
          r[a + b] += p;
        else
          r[a + b - 4] -= p;
      }
    }
    return *this = from_wide(r, i128(d_) * o.d_);
  }
  Big x = to_big(), y = o.to_big(), r;
  for (int a = 0; a < 4; ++a) {
    if (sgn(x[a]) == 0) continue;
    for (int b = 0; b < 4; ++b) {
      if (sgn(y[b]) == 0) continue;
      if (a + b < 4)
        r[a + b] += x[a] * y[b];
      else
        r[a + b - 4] -= x[a] * y[b];
    }
  }
  return *this = from_big(std::move(r));
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
  if (a.big_ || b.big_) {
    if (!a.big_ || !b.big_) return false;
    return *a.big_ == *b.big_;
  }
  return a.d_ == b.d_ && a.n_ == b.n_;
}

CycloScalar CycloScalar::conjugate(int k) const {
  CycloScalar out;
  for (int j = 0; j < 4; ++j) {
    mpq_class q = (*this)[j];
    if (sgn(q) == 0) continue;
    out += CycloScalar(q) * omega_power(static_cast<long>(j) * k);
  }
  return out;
}

CycloScalar CycloScalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero scalar");
  // product of the three non-trivial conjugates; a * that is the (rational) norm
  CycloScalar rest = conjugate(3) * conjugate(5) * conjugate(7);
  mpq_class n = (*this * rest)[0];
  Big b = rest.to_big();
  for (auto& q : b) q /= n;
  return from_big(std::move(b));
}

std::string CycloScalar::debug() const {
  return "(" + (*this)[0].get_str() + ", " + (*this)[1].get_str() + ", " + (*this)[2].get_str() + ", " +
         (*this)[3].get_str() + ")";
}

}  // namespace sshg
