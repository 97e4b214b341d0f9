#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "sshg/fraction.hpp"

namespace sshg {

using GenId = std::uint16_t;
inline constexpr GenId kNoGen = 0xFFFF;

// Commuting part of a term: sorted (generator, exponent) pairs, no zero exponents.
class EvenMonomial {
 public:
  using Factor = std::pair<GenId, Fraction>;

  EvenMonomial() = default;
  static EvenMonomial single(GenId g, Fraction e);

  const std::vector<Factor>& factors() const { return f_; }
  bool empty() const { return f_.empty(); }
  Fraction exponent(GenId g) const;
  void set(GenId g, Fraction e);

  EvenMonomial& operator*=(const EvenMonomial& o);
  friend EvenMonomial operator*(EvenMonomial a, const EvenMonomial& b) { return a *= b; }
  // every exponent multiplied by k
  EvenMonomial scaled(Fraction k) const;
  EvenMonomial inverse() const { return scaled(Fraction(-1)); }

  friend bool operator==(const EvenMonomial&, const EvenMonomial&) = default;
  friend auto operator<=>(const EvenMonomial&, const EvenMonomial&) = default;

 private:
  std::vector<Factor> f_;
};

// Ordered product of distinct odd generators, ids strictly increasing.
class GrassmannMonomial {
 public:
  GrassmannMonomial() = default;
  explicit GrassmannMonomial(std::vector<GenId> sorted_ids) : ids_(std::move(sorted_ids)) {}

  const std::vector<GenId>& ids() const { return ids_; }
  std::size_t degree() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  // a*b: returns +1/-1 and writes the merged monomial, or 0 on a repeated generator.
  static int multiply(const GrassmannMonomial& a, const GrassmannMonomial& b, GrassmannMonomial& out);

  friend bool operator==(const GrassmannMonomial&, const GrassmannMonomial&) = default;
  friend std::strong_ordering operator<=>(const GrassmannMonomial& a, const GrassmannMonomial& b);

 private:
  std::vector<GenId> ids_;
};

// r^r_power * D^d_power. Stored form has r_power in {0,1} and d_power <= 0.
struct ExtensionFactor {
  int r_power = 0;
  int d_power = 0;
  bool trivial() const { return r_power == 0 && d_power == 0; }
  friend bool operator==(const ExtensionFactor&, const ExtensionFactor&) = default;
  friend auto operator<=>(const ExtensionFactor&, const ExtensionFactor&) = default;
};

// Everything in a term except the scalar; ordered by (odd, even, extension).
struct MonomialKey {
  GrassmannMonomial odd;
  EvenMonomial even;
  ExtensionFactor ext;
  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
  friend std::strong_ordering operator<=>(const MonomialKey& a, const MonomialKey& b);
};

}  // namespace sshg
