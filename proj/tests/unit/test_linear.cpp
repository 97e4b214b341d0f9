#include "helpers.hpp"
#include "sshg/error.hpp"
#include "sshg/linear.hpp"
#include "sshg/model.hpp"

using namespace sshg;
using namespace sshg::testing;

TEST_CASE("single monomial pivot") {
  LinearSystem ls({G("phi0")});
  ls.add("a", P("sigma*exp(phi1)*phi0 - tau"));
  LinearSolution s = ls.solve();
  REQUIRE(s.find(G("phi0")));
  CHECK(s.find(G("phi0"))->value == P("tau*sigma^(-1)*exp(-phi1)"));
  CHECK(s.consistent());
}

TEST_CASE("inconsistent system") {
  LinearSystem ls({G("phi0")});
  ls.add("one", P("phi0"));
  ls.add("two", P("phi0 - 1"));
  LinearSolution s = ls.solve();
  CHECK_FALSE(s.consistent());
  REQUIRE(s.leftovers.size() == 1);
  CHECK(s.leftovers[0].residual.as_scalar());
}

TEST_CASE("boson rows solved for the right-region jets") {
  model::ConditionSet cs = model::conditions_type1(model::defect1());
  LinearSystem ls({G("dtphi0"), G("dxphi0")});
  for (const char* l : {"boson-t", "boson-x"}) ls.add(l, cs.find(l)->residual());
  LinearSolution s = ls.solve(true);
  REQUIRE(s.consistent());
  // 2x2 solve by hand: the rows are already diagonal in (dtphi0, dxphi0)
  CHECK(s.find(G("dtphi0"))->value == P("dxphi1") + cs.find("boson-t")->rhs);
  CHECK(s.find(G("dxphi0"))->value == P("dtphi1") + cs.find("boson-x")->rhs);
  // combinations reproduce x - value from the rows
  for (const auto& u : s.solved) {
    Expression acc;
    for (std::size_t i = 0; i < ls.rows(); ++i) acc += u.combination[i] * cs.find(ls.label(i))->residual();
    CHECK(acc == Expression::generator(u.unknown) - u.value);
  }
}

TEST_CASE("odd unknowns") {
  LinearSystem ls({G("psi0"), G("psib0")});
  ls.add("p", P("psi0 + psi1 - g1*sigma"));
  ls.add("q", P("psib0 - psi0 + g1"));
  LinearSolution s = ls.solve();
  REQUIRE(s.consistent());
  CHECK(s.find(G("psib0"))->value == P("-psi1 + g1*sigma - g1"));
}

TEST_CASE("fraction-free fallback for a non-invertible pivot") {
  // (1 + exp(phi0)) x = sigma, and a second row that is a multiple of it
  LinearSystem ls({G("phi1")});
  ls.add("a", P("(1 + exp(phi0))*phi1 - sigma"));
  ls.add("b", P("2*(1 + exp(phi0))*phi1 - 2*sigma"));
  LinearSolution s = ls.solve();
  const SolvedUnknown* x = s.find(G("phi1"));
  REQUIRE(x);
  CHECK(x->implicit);
  CHECK(x->pivot == P("1 + exp(phi0)"));
  CHECK(x->value == P("sigma"));
  CHECK(s.consistent());
  CHECK(s.rules().empty());

  LinearSystem bad({G("phi1")});
  bad.add("a", P("(1 + exp(phi0))*phi1 - sigma"));
  bad.add("b", P("phi1"));
  CHECK_FALSE(bad.solve().consistent());
}

TEST_CASE("a nilpotent coefficient is no pivot") {
  LinearSystem ls({G("phi1")});
  ls.add("a", P("g1*g2*phi1 - sigma*g1*g2"));
  LinearSolution s = ls.solve();
  CHECK_FALSE(s.find(G("phi1")));
  REQUIRE(s.unsolved.size() == 1);
  CHECK_FALSE(s.diagnostics.empty());
}

TEST_CASE("non-linear occurrence is rejected") {
  CHECK_THROWS_AS(split_linear(P("phi0^2"), {G("phi0")}), SolveError);
  CHECK_THROWS_AS(split_linear(P("phi0*phi1"), {G("phi0"), G("phi1")}), SolveError);
}
