#include "internal.hpp"
#include "sshg/text.hpp"

namespace sshg::verifier {

using namespace sshg::model;

ResidualReport check_reparam_identities(const Sources& src) {
  const Registry& reg = Registry::instance();
  ResidualReport r;
  r.check = "reparam-identities";
  RewriteSystem back = src.rules("reparametrization");
  RewriteSystem forward = src.rules("auxiliary-forward");
  // mu+- are read off the forward map: f1 = mu+ g2 + mu- g1
  LinearForm f = split_linear(forward.find(reg.id("f1"))->image, {reg.id("g2"), reg.id("g1")});
  Expression mp = f.coefficients[0], mm = f.coefficients[1];
  Expression one_plus_h2 = Expression(1) + Expression::h(Fraction(2));
  Expression g1 = Expression::symbol("g1"), g2 = Expression::symbol("g2");
  Expression f1 = Expression::symbol("f1"), ft1 = Expression::symbol("ft1");

  std::vector<Labelled> identities = {
      {"mu+^2 + mu-^2 - 2", mp * mp + mm * mm - Expression(2)},
      {"mu+ mu- - 2 h / (1 + h^2)", mp * mm - Expression(2) * Expression::h() * invert(one_plus_h2)},
      {"mu+^2 - 2 / (1 + h^2)", mp * mp - Expression(2) * invert(one_plus_h2)},
      {"mu-^2 - 2 h^2 / (1 + h^2)", mm * mm - Expression(2) * Expression::h(Fraction(2)) * invert(one_plus_h2)},
      {"f1 ft1 - 2 g1 g2", substitute(f1 * ft1, forward) - Expression(2) * g1 * g2},
      {"g1 -> f -> g1", substitute(substitute(g1, back), forward) - g1},
      {"g2 -> f -> g2", substitute(substitute(g2, back), forward) - g2},
      {"f1 -> g -> f1", substitute(substitute(f1, forward), back) - f1},
      {"ft1 -> g -> ft1", substitute(substitute(ft1, forward), back) - ft1},
  };
  GenId e0 = reg.exp_of(reg.id("phi0"));
  identities.push_back({"image(exp(phi0)) image(exp(-phi0)) - 1",
                        substitute(Expression::generator(e0), back) *
                                substitute(Expression::generator(e0, Fraction(-1)), back) -
                            Expression(1)});
  // symmetric point h = 1
  RewriteSystem sym;
  sym.add(reg.exp_of(reg.id("phi1")), parse_expression("exp(phi2 + 2*tau)"));
  identities.push_back({"mu+^2 - 1 at h = 1", substitute(mp * mp, sym) - Expression(1)});

  for (auto& id : identities)
    if (!id.value.is_zero()) r.residuals.push_back(std::move(id));
  r.notes.push_back("mu+ = " + render_expression(mp));
  r.notes.push_back("mu- = " + render_expression(mm));
  detail::settle(r);
  return r;
}

}  // namespace sshg::verifier
