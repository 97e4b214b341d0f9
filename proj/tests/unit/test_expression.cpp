#include "helpers.hpp"
#include "sshg/error.hpp"

using namespace sshg;
using namespace sshg::testing;

namespace {
// h^2 written out from its definition
Expression h2() { return P("exp(phi1 - phi2 - 2*tau)"); }
}  // namespace

TEST_CASE("Grassmann nilpotency and antisymmetry") {
  CHECK((S("psi1") * S("psi1")).is_zero());
  Expression g12 = S("g1") * S("g2");
  CHECK(S("g2") * S("g1") == -g12);
  CHECK(P("g1*g2 + g2*g1").is_zero());
  CHECK(g12.terms().size() == 1);
  CHECK(g12.terms()[0].coeff.is_one());
}

TEST_CASE("integer part of the exponent of 2 folds into the scalar") {
  Expression e = Expression::generator(Registry::instance().two(), Fraction(3, 2));
  REQUIRE(e.size() == 1);
  CHECK(e.terms()[0].coeff == CycloScalar(2));
  CHECK(e.terms()[0].key.even.exponent(Registry::instance().two()) == Fraction(1, 2));
  CHECK(e == Expression(2) * Expression::generator(Registry::instance().two(), Fraction(1, 2)));
  CHECK(Expression::generator(Registry::instance().two(), Fraction(2)) == Expression(4));
}

TEST_CASE("r squared is 1 + h^2") {
  CHECK(Expression::r() * Expression::r() == Expression(1) + h2());
  CHECK(Expression::h(Fraction(2)) == h2());
  CHECK(pow(Expression::r(), Fraction(3)) == Expression::r() + h2() * Expression::r());
}

TEST_CASE("D cancels against 1 + h^2") {
  CHECK((Expression(1) + h2()) * Expression::D(-1) == Expression(1));
  CHECK(Expression::D(1) == Expression(1) + h2());
  CHECK(Expression::D(-2) * Expression::D(1) == Expression::D(-1));
}

TEST_CASE("mu identities against a brute-force rationalization") {
  // 2/(1+E) with E = h^2 and E = h^-2, computed through division by the parser
  Expression mp2 = P("2/(1 + exp(phi1 - phi2 - 2*tau))");
  Expression mm2 = P("2/(1 + exp(-phi1 + phi2 + 2*tau))");
  Expression mu_p = Expression::generator(Registry::instance().two(), Fraction(1, 2)) * Expression::r() *
                    Expression::D(-1);
  Expression mu_m = mu_p * Expression::h();
  CHECK(mu_p * mu_p == mp2);
  CHECK(mu_m * mu_m == mm2);
  CHECK(mu_p * mu_p + mu_m * mu_m == Expression(2));
  // mu+ mu- = 2h/(1+h^2)
  CHECK(mu_p * mu_m == Expression(2) * Expression::h() * invert(Expression(1) + h2()));
}

TEST_CASE("parity classes") {
  CHECK((S("g1") * S("g2")).parity() == ParityClass::Even);
  CHECK((S("psib0") + S("g1")).parity() == ParityClass::Odd);
  CHECK((Expression(1) + S("g1")).parity() == ParityClass::Mixed);
  CHECK(Expression().parity() == ParityClass::Zero);
}

TEST_CASE("canonical form: sorted, distinct keys, non-zero coefficients") {
  Expression e = P("3*g1*phi0 + exp(phi1) - 3*phi0*g1 + 2*exp(phi1) + sigma");
  CHECK(e == P("3*exp(phi1) + sigma"));
  for (std::size_t k = 1; k < e.size(); ++k) CHECK(e.terms()[k - 1].key < e.terms()[k].key);
  for (const auto& t : e.terms()) CHECK_FALSE(t.coeff.is_zero());
}

TEST_CASE("exponentials combine") {
  CHECK(P("exp(phi0)*exp(-phi0)") == Expression(1));
  CHECK(P("exp(phi0 + phi1)") == P("exp(phi0)*exp(phi1)"));
  CHECK(P("2*sigma1*cosh(phi0 + phi1)") == P("sigma1*exp(phi0 + phi1) + sigma1*exp(-phi0 - phi1)"));
}

TEST_CASE("inversion") {
  Expression a = P("exp(phi0)*sigma + exp(phi0)*sigma*g1*g2");
  CHECK(invert(a) * a == Expression(1));
  CHECK_FALSE(try_invert(P("1 + exp(phi0)")));
  CHECK_FALSE(try_invert(S("g1")));
  CHECK_THROWS_AS(invert(Expression()), DomainError);
}

TEST_CASE("rational powers of single terms") {
  CHECK(pow(P("4*sigma"), Fraction(1, 2)) ==
        Expression(2) * Expression::generator(G("sigma"), Fraction(1, 2)));
  CHECK(pow(P("sigma1^(1/3)"), Fraction(3)) == S("sigma1"));
}

TEST_CASE("body and soul") {
  Expression e = P("sigma + g1*g2*exp(phi0) + 2");
  CHECK(e.body() == P("sigma + 2"));
  CHECK(e.soul() == P("g1*g2*exp(phi0)"));
  CHECK(e.body() + e.soul() == e);
}
