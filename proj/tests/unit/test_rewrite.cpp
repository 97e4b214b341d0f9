#include "helpers.hpp"
#include "sshg/error.hpp"
#include "sshg/model.hpp"
#include "sshg/rewrite.hpp"

using namespace sshg;
using namespace sshg::testing;

TEST_CASE("substituting the psi jump") {
  RewriteSystem rs;
  rs.add(G("psi0"), P("-psi1 + 2*2^(1/2)*sigma1^(-1/2)*cosh((phi0 - phi1)/2)*g1"));
  CHECK(substitute(P("psi0 + psi1"), rs) == P("2*(2/sigma1)^(1/2)*cosh((phi0 - phi1)/2)*g1"));
}

TEST_CASE("empty system is the identity") {
  RewriteSystem rs;
  for (const char* s : {"exp(phi0)*g1 + sigma", "r*D^(-2)*psi1*psib2", "0"}) CHECK(substitute(P(s), rs) == P(s));
}

TEST_CASE("parity of a rule must match") {
  RewriteSystem rs;
  CHECK_THROWS_AS(rs.add(G("psi0"), S("phi1")), SubstitutionError);
  CHECK_THROWS_AS(rs.add(G("phi0"), S("g1")), SubstitutionError);
  rs.add(G("phi0"), S("phi1"));
  CHECK_THROWS_AS(rs.add(G("phi0"), S("phi2")), SubstitutionError);
}

TEST_CASE("termination check") {
  RewriteSystem ok;
  ok.add(G("psi0"), P("psi1 + g1"));
  CHECK(ok.is_terminating());
  RewriteSystem loop;
  loop.add(G("psi0"), P("psi1 + g1"));
  loop.add(G("g1"), P("psi0"));
  CHECK_FALSE(loop.is_terminating());
  CHECK_THROWS_AS(loop.check_terminating(), SubstitutionError);
}

TEST_CASE("exponentials follow a rule for their exponent") {
  RewriteSystem rs;
  rs.add(G("phi0"), P("phi1 + Lambda"));
  CHECK(substitute(P("exp(2*phi0)"), rs) == P("exp(2*phi1 + 2*Lambda)"));
  CHECK(substitute(P("exp(phi0/2)*phi0"), rs) == P("exp(phi1/2 + Lambda/2)*(phi1 + Lambda)"));
}

TEST_CASE("nilpotent exponent truncates") {
  ExpImage e = ExpImage::exp_of(P("phi1 + i*f1*ft1"));
  CHECK(e.expression() == P("exp(phi1)*(1 + i*f1*ft1)"));
  CHECK(e.power(Fraction(1, 2)) * e.power(Fraction(1, 2)) == e.expression());
}

TEST_CASE("image of exp(phi0) under the reparametrization") {
  RewriteSystem rs = model::reparametrization();
  Expression image = substitute(P("exp(phi0)"), rs);
  Expression h = Expression::h(), dinv = Expression::D(-1);
  Expression expected = P("exp(-Lambda + phi1/2 + phi2/2)") * Expression(2) * h * dinv *
                        (Expression(1) - Expression::i() * h * dinv * P("f1*ft1"));
  CHECK(image == expected);
  CHECK_FALSE(image.contains(G("phi0")));
  // squaring back
  CHECK(image * image == substitute(P("exp(2*phi0)"), rs));
  CHECK(image * substitute(P("exp(-phi0)"), rs) == Expression(1));
}

TEST_CASE("light-cone and time-space conversions invert each other") {
  for (const char* s : {"dtphi0*dxpsi1", "dttphi2 + dxxphi2", "dpmphi1*dmg1"}) {
    Expression e = P(s);
    CHECK(to_time_space(to_light_cone(e)) == to_time_space(e));
    CHECK(to_light_cone(to_time_space(e)) == to_light_cone(e));
  }
}

TEST_CASE("rational binomials") {
  CHECK(binomial_rational(Fraction(1, 2), 2) == mpq_class(-1, 8));
  CHECK(binomial_rational(Fraction(3), 2) == 3);
}
