#include "helpers.hpp"
#include "sshg/derivation.hpp"
#include "sshg/rewrite.hpp"

using namespace sshg;
using namespace sshg::testing;

TEST_CASE("chain rule on exponentials") {
  Derivation dp(Direction::Plus);
  CHECK(derive(P("exp(phi1)"), dp) == P("dpphi1*exp(phi1)"));
  CHECK(derive(P("sigma1*lambda^(-1/2)*c1*exp(phi1 + phi0)"), dp) ==
        P("sigma1*lambda^(-1/2)*c1*(dpphi1 + dpphi0)*exp(phi1 + phi0)"));
}

TEST_CASE("even derivation on odd products has no sign") {
  Derivation dp(Direction::Plus);
  CHECK(derive(P("g1*g2"), dp) == P("dpg1*g2 + g1*dpg2"));
}

TEST_CASE("derivative of r from r^2 = 1 + h^2") {
  Derivation dp(Direction::Plus);
  Expression dr = derive(Expression::r(), dp);
  Expression expected = Expression::rational(1, 2) * Expression::h(Fraction(2)) * P("dpphi1 - dpphi2") *
                        Expression::r() * Expression::D(-1);
  CHECK(dr == expected);
  // 2 r r' = (r^2)'
  CHECK(Expression(2) * Expression::r() * dr == derive(Expression(1) + Expression::h(Fraction(2)), dp));
  CHECK(derive(Expression::D(-1), dp) * Expression::D(1) == -derive(Expression::D(1), dp) * Expression::D(-1));
}

TEST_CASE("time and space derivations in light-cone form") {
  Derivation dp(Direction::Plus), dm(Direction::Minus), dt(Direction::Time), dx(Direction::Space);
  for (const char* s : {"exp(phi0)*psi1", "phi2*g1*psib0", "exp(Lambda/2)*f1*dppsi1", "r*D^(-1)*tau"}) {
    Expression e = P(s);
    CHECK(to_light_cone(derive(e, dt)) == derive(e, dp) - derive(e, dm));
    CHECK(to_light_cone(derive(e, dx)) == derive(e, dp) + derive(e, dm));
  }
}

TEST_CASE("constants are annihilated") {
  Derivation dp(Direction::Plus);
  CHECK(derive(P("lambda^(1/2)*sigma*c1*m*2^(1/2)*i"), dp).is_zero());
}

TEST_CASE("partial derivative with respect to one symbol") {
  CHECK(derive(P("phi0^2*exp(phi0)*dtphi0"), Derivation::partial(G("phi0"))) ==
        P("(2*phi0 + phi0^2)*exp(phi0)*dtphi0"));
  CHECK(derive(P("phi0*dtphi0^2"), Derivation::partial(G("dtphi0"))) == P("2*phi0*dtphi0"));
}

TEST_CASE("left derivative by an odd symbol") {
  CHECK(left_partial(P("g1*g2"), G("g1")) == S("g2"));
  CHECK(left_partial(P("g1*g2"), G("g2")) == -S("g1"));
  CHECK(left_partial(P("sigma*psi0"), G("g1")).is_zero());
}
