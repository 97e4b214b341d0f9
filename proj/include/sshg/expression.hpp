#pragma once

#include <optional>
#include <set>
#include <vector>

#include "sshg/cyclo.hpp"
#include "sshg/monomial.hpp"
#include "sshg/registry.hpp"

namespace sshg {

struct Term {
  MonomialKey key;
  CycloScalar coeff;
};

enum class ParityClass { Zero, Even, Odd, Mixed };

// Canonical sum of terms: sorted by key, distinct keys, non-zero coefficients,
// r-degree <= 1, only negative D powers, and no common factor (1 + h^2) left
// between the numerator and D^-n.
class Expression {
 public:
  Expression() = default;
  Expression(const CycloScalar& c);  // NOLINT(google-explicit-constructor)
  Expression(long c) : Expression(CycloScalar(c)) {}  // NOLINT(google-explicit-constructor)

  static Expression rational(long num, long den = 1);
  static Expression generator(GenId g, Fraction e = Fraction(1));
  static Expression symbol(std::string_view name);
  static Expression omega() { return Expression(CycloScalar::omega_power(1)); }
  static Expression i() { return Expression(CycloScalar::i()); }
  static Expression r();
  static Expression D(int power);
  // h = exp(phi1/2) exp(-phi2/2) exp(-tau) raised to k
  static Expression h(Fraction k = Fraction(1));
  // normalizes arbitrary raw terms
  static Expression from_terms(std::vector<Term> raw);
  // trusts the caller: terms already sorted, distinct and reduced
  static Expression from_canonical(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;  // a pure scalar (possibly zero)
  std::optional<CycloScalar> as_scalar() const;

  ParityClass parity() const;
  // Grassmann-free part and nilpotent remainder
  Expression body() const;
  Expression soul() const;

  // generators occurring anywhere (excluding r, D)
  std::set<GenId> symbols() const;
  bool contains(GenId g) const;

  Expression operator-() const;
  Expression& operator+=(const Expression& o);
  Expression& operator-=(const Expression& o);
  Expression& operator*=(const Expression& o);
  friend Expression operator+(Expression a, const Expression& b) { return a += b; }
  friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
  friend Expression operator*(const Expression& a, const Expression& b);
  friend bool operator==(const Expression& a, const Expression& b);

  Expression scaled(const CycloScalar& c) const;

 private:
  std::vector<Term> terms_;
};

// normalize(raw) is what every constructor already does; exposed for tests.
Expression normalize(const Expression& e);

// e^k for rational k. Non-negative integers work for any e; other exponents need
// an invertible e (negative integers) or a single Grassmann-free term.
Expression pow(const Expression& e, Fraction k);

// Inverse of an even element whose body is a unit times a power of D; nullopt otherwise.
std::optional<Expression> try_invert(const Expression& e);
// Throws DomainError when not invertible.
Expression invert(const Expression& e);

// q^k for a non-zero scalar; w-phases use the principal branch.
// Throws DomainError when the result leaves Q(w)[2^(1/n)].
Expression scalar_power(const CycloScalar& c, Fraction k);

// Single-term helpers.
Expression term_expression(const Term& t);

}  // namespace sshg
