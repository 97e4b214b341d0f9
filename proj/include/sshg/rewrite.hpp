#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sshg/expression.hpp"

namespace sshg {

// Image of an exponential generator: scale * monomial * D^d_power * (1 + soul),
// scale a positive rational, monomial over exponential generators, d_power in Z/2
// (half-integers carry r) and soul nilpotent. Any rational power stays in this form.
struct ExpImage {
  mpq_class scale = 1;
  EvenMonomial monomial;
  Fraction d_power;
  Expression soul;

  // Decomposes a unit-times-(1 + nilpotent) expression; throws SubstitutionError otherwise.
  static ExpImage from_expression(const Expression& image);
  // exp(L) for L = (rational combination of symbols with exponentials) + nilpotent even part.
  static ExpImage exp_of(const Expression& exponent);

  Expression power(Fraction c) const;
  Expression expression() const { return power(Fraction(1)); }
};

// Ordered substitution rules with "free" metadata.
class RewriteSystem {
 public:
  struct Rule {
    GenId source = kNoGen;
    Expression image;                  // symbol rules, and the plain image of exponential rules
    std::optional<ExpImage> exp_image;  // set for exponential generators
  };

  // Parity of the image must match the source. Exponential sources are decomposed into ExpImage.
  RewriteSystem& add(GenId source, const Expression& image);
  RewriteSystem& add_exp(GenId exp_base, const ExpImage& image);
  RewriteSystem& declare_free(GenId symbol);
  // appends every rule of `other` (sources must be new)
  RewriteSystem& merge(const RewriteSystem& other);

  const std::vector<Rule>& rules() const { return rules_; }
  const std::set<GenId>& free_symbols() const { return free_; }
  const Rule* find(GenId source) const;
  bool empty() const { return rules_.empty(); }
  std::size_t size() const { return rules_.size(); }

  // Symbols rewritten directly or through an exponential partner.
  std::set<GenId> rewritten() const;
  // Throws SubstitutionError if a rewritten symbol occurs in an image or is declared free.
  void check_terminating() const;
  bool is_terminating() const;

 private:
  std::vector<Rule> rules_;
  std::map<GenId, std::size_t> index_;
  std::set<GenId> free_;
};

// One simultaneous pass of every rule over e; the result is normalized.
// exp(c X) follows a rule for X when exp(X) has no rule of its own.
Expression substitute(const Expression& e, const RewriteSystem& rs);

// Simultaneous relabelling of fields (with their exponentials and all jets).
RewriteSystem rename_fields(const std::vector<std::pair<GenId, GenId>>& pairs);

// Rewrites every dt/dx jet through light-cone jets, and the converse.
Expression to_light_cone(const Expression& e);
Expression to_time_space(const Expression& e);

// Binomial coefficient binom(c, j) for rational c.
mpq_class binomial_rational(Fraction c, int j);

}  // namespace sshg
