#include <utility>

#include "macros.hpp"
#include "sshg/error.hpp"
#include "sshg/model.hpp"
#include "sshg/text.hpp"

namespace sshg::model {
namespace detail {
namespace {

void replace_all(std::string& s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
    s.replace(pos, from.size(), to);
}

}  // namespace

Expression parse_model(std::string text, int region) {
  // longest names first: PSIBP contains PSIP's prefix
  replace_all(text, "PSIBP", "(psib1+psib2)");
  replace_all(text, "PSIBM", "(psib1-psib2)");
  replace_all(text, "PSIP", "(psi1+psi2)");
  replace_all(text, "PSIM", "(psi1-psi2)");
  replace_all(text, "PHIP", "(phi1+phi2)");
  replace_all(text, "PHIM", "(phi1-phi2)");
  if (region >= 0) replace_all(text, "@", std::to_string(region));
  return parse_expression(text);
}

}  // namespace detail

Direction direction(Chirality c) { return c == Chirality::Plus ? Direction::Plus : Direction::Minus; }
std::string chirality_name(Chirality c) { return c == Chirality::Plus ? "plus" : "minus"; }

Region Region::of(int p) {
  if (p < 0 || p > 2) throw DomainError("region must be 0, 1 or 2");
  const Registry& reg = Registry::instance();
  const std::string d = std::to_string(p);
  return Region{p, reg.id("phi" + d), reg.id("psi" + d), reg.id("psib" + d)};
}

TypeIDefect defect1() {
  const Registry& reg = Registry::instance();
  return TypeIDefect{1, 1, 0, reg.id("sigma1"), reg.id("g1"), reg.id("c1")};
}

TypeIDefect defect2() {
  const Registry& reg = Registry::instance();
  return TypeIDefect{2, 0, 2, reg.id("sigma2"), reg.id("g2"), reg.id("c2")};
}

TypeIIDefect defect_type2() {
  const Registry& reg = Registry::instance();
  return TypeIIDefect{reg.id("sigma"), reg.id("tau"), reg.id("m"), reg.id("Lambda"), reg.id("f1"), reg.id("ft1")};
}

RewriteSystem relabel_from_defect1(const TypeIDefect& d) {
  const TypeIDefect d1 = defect1();
  if (d.left == d1.left && d.right == d1.right && d.g == d1.g && d.sigma == d1.sigma && d.c == d1.c)
    return RewriteSystem();
  Region l1 = Region::of(d1.left), r1 = Region::of(d1.right);
  Region l = Region::of(d.left), r = Region::of(d.right);
  std::vector<std::pair<GenId, GenId>> pairs = {
      {l1.phi, l.phi}, {l1.psi, l.psi}, {l1.psib, l.psib}, {r1.phi, r.phi}, {r1.psi, r.psi}, {r1.psib, r.psib},
      {d1.g, d.g}};
  RewriteSystem rs = rename_fields(pairs);
  rs.add(d1.sigma, Expression::generator(d.sigma));
  rs.add(d1.c, Expression::generator(d.c));
  return rs;
}

const Equation* ConditionSet::find(const std::string& label) const {
  for (const auto& e : equations)
    if (e.label == label) return &e;
  return nullptr;
}

std::vector<Expression> ConditionSet::residuals() const {
  std::vector<Expression> out;
  for (const auto& e : equations) out.push_back(e.residual());
  return out;
}

}  // namespace sshg::model
