#include <set>

#include "helpers.hpp"
#include "sshg/model.hpp"
#include "sshg/verifier.hpp"

using namespace sshg;
using namespace sshg::model;
using namespace sshg::testing;

namespace {
RewriteSystem zero_all(std::initializer_list<const char*> names) {
  RewriteSystem rs;
  for (const char* n : names) rs.add(G(n), Expression());
  return rs;
}
Expression rhs_of(const ConditionSet& cs, const std::string& label) {
  const Equation* e = cs.find(label);
  REQUIRE(e);
  return e->rhs;
}
}  // namespace

TEST_CASE("Lax entries") {
  for (int p = 0; p <= 2; ++p) {
    CHECK(lax(Chirality::Plus, p)(1, 0) == P("-lambda"));
    CHECK(lax(Chirality::Minus, p)(2, 2) == P("2*lambda^(-1/2)"));
  }
  Region r0 = Region::of(0);
  RewriteSystem b;
  b.add(r0.psib, Expression());
  SuperMatrix ap = mat_substitute(lax(Chirality::Plus, 0), b);
  CHECK(ap(2, 2) == P("2*lambda^(1/2)"));
  for (std::size_t k = 0; k < 2; ++k) {
    CHECK(ap(k, 2).is_zero());
    CHECK(ap(2, k).is_zero());
  }
}

TEST_CASE("Type-I defect matrix entries") {
  SuperMatrix k1 = defect_matrix(defect1());
  CHECK(k1(0, 1) == P("c1*lambda^(1/2)*(sigma1/lambda)*exp(phi1 + phi0)"));
  CHECK(k1(2, 2) == P("c1*lambda^(1/2)*(1 - sigma1*lambda^(-1/2))"));
  // sigma1 -> 0: every sigma1 exponent is positive, so drop those terms
  SuperMatrix lim = map_entries(k1, [](const Expression& e) {
    std::vector<Term> keep;
    for (const auto& t : e.terms())
      if (t.key.even.exponent(G("sigma1")).is_zero()) keep.push_back(t);
    return Expression::from_terms(keep);
  });
  CHECK(lim == P("c1*lambda^(1/2)") * SuperMatrix::identity(SuperMatrix::sl21()));
}

TEST_CASE("fused matrix entries") {
  SuperMatrix k2 = fused_closed_form();
  CHECK(k2(1, 1) == P("c*(lambda + sigma^2*exp(phi1 - phi2) + 2*i*sigma*exp(-(phi1 - phi2)/2)*g1*g2)"));
  CHECK(k2(2, 2) ==
        P("c*(lambda + sigma^2 - 2*sigma*lambda^(1/2)*(cosh(tau) - 2*i*g1*g2*cosh((phi1 - phi2)/2)))"));
  RewriteSystem b = zero_all({"g1", "g2"});
  CHECK(substitute(k2(0, 1), b) == P("c*sigma*exp(phi0)*(exp(phi1 - tau) + exp(phi2 + tau))"));
}

TEST_CASE("row one times column one of the product") {
  SuperMatrix prod = fused_product();
  CHECK(prod(0, 0) == P("c1*c2*(lambda + sigma^2*exp(-(phi1 - phi2)) + 2*i*sigma*exp(-(phi1 - phi2)/2)*g1*g2*lambda^(1/2))"));
}

TEST_CASE("fusion product vs closed form: bosonic truncation") {
  RewriteSystem b = zero_all({"g1", "g2"});
  SuperMatrix printed = mat_substitute(fused_closed_form(), fusion_parameters());
  SuperMatrix diff = mat_substitute(fused_product() - printed, b);
  std::set<std::pair<std::size_t, std::size_t>> pinned;
  for (const auto& e : fused_errata()) pinned.insert({e.row, e.col});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (!pinned.count({i, j})) CHECK(diff(i, j).is_zero());
  // (2,1) of the printed matrix lacks the factor lambda of the product
  CHECK(diff(1, 0) == substitute(P("(lambda - 1)*sigma*c*(exp(-tau - phi0 - phi1) + exp(tau - phi0 - phi2))"),
                                 fusion_parameters()));
}

TEST_CASE("pinned errata are exactly the product minus the printed matrix") {
  SuperMatrix diff = fused_product() - mat_substitute(fused_closed_form(), fusion_parameters());
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) nonzero += !diff(i, j).is_zero();
  CHECK(nonzero == fused_errata().size());
  for (const auto& e : fused_errata()) {
    CHECK(substitute(e.delta, fusion_parameters()) == diff(e.row, e.col));
    CHECK_FALSE(e.note.empty());
  }
}

TEST_CASE("Type-I conditions") {
  ConditionSet cs = conditions_type1(defect1());
  CHECK(cs.find("psibar-jump")->residual() ==
        P("psib0 - psib1 + 2*(2*sigma1)^(1/2)*cosh((phi0 + phi1)/2)*g1"));
  RewriteSystem b = zero_all({"g1", "psi0", "psi1", "psib0", "psib1"});
  CHECK(substitute(cs.find("boson-t")->residual(), b) ==
        P("dtphi0 - dxphi1 - 2*sigma1*sinh(phi0 + phi1) + (2/sigma1)*sinh(phi0 - phi1)"));
}

TEST_CASE("Type-II psi condition") {
  ConditionSet cs = conditions_type2();
  CHECK(cs.find("psi-diff")->residual() ==
        P("psi1 - psi2 - (m/sigma)^(1/2)*(exp(Lambda/2)*sinh((phi1 - phi2)/2)*f1 - "
          "(exp(-Lambda/2) + exp(Lambda/2)*cosh(tau))*ft1)"));
}

TEST_CASE("bulk potential") {
  RewriteSystem b = zero_all({"psi0", "psib0", "dtphi0", "dxphi0", "dtpsi0", "dxpsi0", "dtpsib0", "dxpsib0"});
  CHECK(substitute(bulk_lagrangian(0).density, b) == P("2*exp(2*phi0) + 2*exp(-2*phi0) - 4"));
  CHECK(substitute(bulk_lagrangian(0).density, b) == P("4*cosh(2*phi0) - 4"));
}

TEST_CASE("Type-II density: bosonic kinetic part") {
  RewriteSystem b = zero_all({"f1", "ft1", "psi1", "psi2", "psib1", "psib2"});
  Expression bos = substitute(type2_lagrangian().density, b);
  Expression rest = bos - P("(phi1 - phi2)*dtLambda - 1/2*(phi1 - phi2)*(dtphi1 + dtphi2)");
  for (const char* jet : {"dtLambda", "dtphi1", "dtphi2", "dxphi1", "dxphi2"}) CHECK_FALSE(rest.contains(G(jet)));
  CHECK(rest.contains(G("m")));
}

TEST_CASE("reparametrization identities") {
  Expression mp = mu_plus(), mm = mu_minus();
  CHECK(mp * mp + mm * mm == Expression(2));
  CHECK(mp * mm == Expression(2) * Expression::h() * Expression::D(-1));
  RewriteSystem fwd = auxiliary_forward();
  // (mu+ g2 + mu- g1)(mu- g2 - mu+ g1) = -(mu+^2 + mu-^2) g2 g1 = 2 g1 g2
  CHECK(substitute(P("f1*ft1"), fwd) == P("2*g1*g2"));
  CHECK(substitute(P("exp(phi0)"), reparametrization()).symbols().count(G("phi0")) == 0);
}

TEST_CASE("orientation of the boson rows") {
  ConditionSet cs = conditions_type1(defect1());
  OrientedSystem o = orient_type1(cs, defect1());
  CHECK(o.unsolved.empty());
  // d+(phi0 - phi1) = (R1 + R2)/2 with R1, R2 the right-hand sides of the boson rows
  Expression r1 = rhs_of(cs, "boson-t"), r2 = rhs_of(cs, "boson-x");
  Expression lhs = substitute(P("dpphi0"), o.rules) - P("dpphi1");
  CHECK(lhs == substitute(Expression::rational(1, 2) * (r1 + r2), o.rules));
  CHECK(substitute(P("psi0"), o.rules) == P("-psi1 + 2*(2/sigma1)^(1/2)*cosh((phi0 - phi1)/2)*g1"));
  CHECK(o.rules.is_terminating());

  ConditionSet empty;
  CHECK(orient_rewrite_system(empty, {}, {}).rules.empty());
}

TEST_CASE("bosonic Backlund rule makes the plus residual vanish") {
  // classical sinh-Gordon defect: K A(1) - A(0) K with fermions and g1 removed
  RewriteSystem b = zero_all({"g1", "psi0", "psi1", "psib0", "psib1"});
  ConditionSet cs = conditions_type1(defect1());
  Expression r1 = substitute(rhs_of(cs, "boson-t"), b), r2 = substitute(rhs_of(cs, "boson-x"), b);
  RewriteSystem rule;
  rule.add(G("dpphi0"), P("dpphi1") + Expression::rational(1, 2) * (r1 + r2));
  SuperMatrix k = mat_substitute(defect_matrix(defect1()), b);
  SuperMatrix a1 = mat_substitute(lax(Chirality::Plus, 1), b), a0 = mat_substitute(lax(Chirality::Plus, 0), b);
  SuperMatrix res = mat_derive(k, Derivation(Direction::Plus)) - k * a1 + a0 * k;
  CHECK(mat_substitute(res, rule).is_zero());
}

TEST_CASE("trivial defect") {
  SuperMatrix id = SuperMatrix::identity(SuperMatrix::sl21());
  SuperMatrix a = lax(Chirality::Plus, 0);
  CHECK((mat_derive(id, Derivation(Direction::Plus)) - id * a + a * id).is_zero());
}
