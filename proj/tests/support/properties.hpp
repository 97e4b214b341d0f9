#pragma once

// Ring-law fuzzing shared by the unit tests and the acceptance binary.
#include <map>
#include <string>

#include "random_expr.hpp"
#include "sshg/derivation.hpp"
#include "sshg/rewrite.hpp"

namespace sshg::testing {

struct PropertyRun {
  std::size_t cases = 0;
  std::map<std::string, std::size_t> checked;
  std::map<std::string, std::size_t> violations;
  std::size_t total_violations() const {
    std::size_t n = 0;
    for (const auto& [k, v] : violations) n += v;
    return n;
  }
};

inline int sign_of(bool odd_a, bool odd_b) { return odd_a && odd_b ? -1 : 1; }

inline PropertyRun run_properties(std::uint64_t seed, std::size_t cases) {
  const Registry& reg = Registry::instance();
  RandomExpr gen(seed);
  RewriteSystem rs;
  rs.add(reg.id("phi0"), Expression::symbol("phi0") + Expression::symbol("g1") * Expression::symbol("g2"));
  rs.add(reg.id("g1"), Expression::symbol("g1") + Expression::symbol("psi0") * Expression::symbol("g2") *
                                                      Expression::symbol("f1"));
  rs.add(reg.id("dpphi0"), Expression::symbol("dpphi1") + Expression::symbol("sigma"));
  Derivation dplus(Direction::Plus);

  PropertyRun run;
  run.cases = cases;
  auto record = [&](const char* name, bool ok) {
    ++run.checked[name];
    if (!ok) ++run.violations[name];
    else run.violations.try_emplace(name, 0);
  };
  for (std::size_t k = 0; k < cases; ++k) {
    Expression a = gen.any(), b = gen.any(), c = gen.any();
    record("associativity", (a * b) * c == a * (b * c));
    record("distributivity", a * (b + c) == a * b + a * c && (a + b) * c == a * c + b * c);

    bool pa = gen.pick(2) == 1, pb = gen.pick(2) == 1;
    Expression ha = gen.homogeneous(pa), hb = gen.homogeneous(pb);
    record("graded-commutativity", ha * hb == Expression(sign_of(pa, pb)) * (hb * ha));

    bool leibniz = derive(a * b, dplus) == derive(a, dplus) * b + a * derive(b, dplus);
    GenId theta = gen.odd_symbol();
    leibniz = leibniz && left_partial(ha * hb, theta) ==
                             left_partial(ha, theta) * hb + Expression(pa ? -1 : 1) * ha * left_partial(hb, theta);
    record("leibniz", leibniz);

    record("substitution-homomorphism", substitute(a * b, rs) == substitute(a, rs) * substitute(b, rs) &&
                                            substitute(a + b, rs) == substitute(a, rs) + substitute(b, rs));

    record("normalize-idempotence", normalize(a) == a && Expression::from_terms(a.terms()) == a &&
                                        normalize(normalize(a * b)) == a * b);

    Expression odd = gen.homogeneous(true);
    record("grassmann-nilpotency", (Expression::generator(theta) * Expression::generator(theta)).is_zero() &&
                                       (odd * odd).is_zero());
  }
  return run;
}

}  // namespace sshg::testing
