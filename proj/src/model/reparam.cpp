#include "macros.hpp"
#include "sshg/model.hpp"

namespace sshg::model {

using detail::parse_model;

Expression mu_plus() { return Expression::generator(Registry::instance().two(), Fraction(1, 2)) * Expression::r() * Expression::D(-1); }

Expression mu_minus() { return mu_plus() * Expression::h(); }

RewriteSystem reparametrization() {
  const Registry& reg = Registry::instance();
  Expression f1 = Expression::symbol("f1"), ft1 = Expression::symbol("ft1");
  Expression half = Expression::rational(1, 2);
  RewriteSystem rs;
  rs.add(reg.exp_of(reg.id("phi0")),
         parse_model("exp(-Lambda + PHIP/2 - ln(cosh(PHIM/2 - tau)) - i/2*sech(PHIM/2 - tau)*f1*ft1)"));
  rs.add(reg.id("g1"), half * (mu_minus() * f1 - mu_plus() * ft1));
  rs.add(reg.id("g2"), half * (mu_plus() * f1 + mu_minus() * ft1));
  return rs;
}

RewriteSystem auxiliary_forward() {
  const Registry& reg = Registry::instance();
  Expression g1 = Expression::symbol("g1"), g2 = Expression::symbol("g2");
  RewriteSystem rs;
  rs.add(reg.id("f1"), mu_plus() * g2 + mu_minus() * g1);
  rs.add(reg.id("ft1"), mu_minus() * g2 - mu_plus() * g1);
  return rs;
}

}  // namespace sshg::model
