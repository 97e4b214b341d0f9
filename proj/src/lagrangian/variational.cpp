#include "sshg/lagrangian.hpp"

#include "sshg/error.hpp"

namespace sshg::lagrangian {
namespace {

Expression partial(const Expression& e, GenId q) {
  if (Registry::instance().at(q).parity() == Parity::Odd) return left_partial(e, q);
  return derive(e, Derivation::partial(q));
}

bool mentions(const Expression& L, GenId q) {
  const Registry& reg = Registry::instance();
  for (GenId s : L.symbols()) {
    const Generator& g = reg.at(s);
    if (s == q || g.field == q || g.exponent_symbol == q) return true;
  }
  return false;
}

// dL/d(d_x q), left derivative for odd q
Expression space_momentum(const Expression& L, GenId q) {
  return partial(L, Registry::instance().jet(q, Frame::TimeSpace, 0, 1));
}

}  // namespace

Variation variational_derivative(const Expression& L, GenId q) {
  const Registry& reg = Registry::instance();
  if (!reg.at(q).is_field()) throw DomainError(reg.name(q) + " is not a field");
  Expression lt = to_time_space(L);
  Variation out;
  if (!mentions(lt, q)) {
    out.absent = true;
    return out;
  }
  GenId qt = reg.jet(q, Frame::TimeSpace, 1, 0);
  GenId qx = reg.jet(q, Frame::TimeSpace, 0, 1);
  out.value = partial(lt, q) - derive(partial(lt, qt), Derivation(Direction::Time)) -
              derive(partial(lt, qx), Derivation(Direction::Space));
  return out;
}

model::ConditionSet bulk_euler_lagrange(int p) {
  const Registry& reg = Registry::instance();
  model::Region rg = model::Region::of(p);
  Expression L = model::bulk_lagrangian(p).density;
  const std::pair<const char*, GenId> eqs[] = {{"phi-eom", rg.phi}, {"psi-eom", rg.psi}, {"psibar-eom", rg.psib}};
  std::vector<GenId> unknowns = {reg.jet(rg.phi, Frame::LightCone, 1, 1), reg.jet(rg.psi, Frame::LightCone, 1, 0),
                                 reg.jet(rg.psib, Frame::LightCone, 0, 1)};
  LinearSystem ls(unknowns);
  for (const auto& [label, q] : eqs) ls.add(label, to_light_cone(variational_derivative(L, q).value));
  LinearSolution sol = ls.solve();
  if (!sol.unsolved.empty() || !sol.consistent()) throw SolveError("bulk equations of motion are not solvable");
  model::ConditionSet cs{model::ConditionKind::BulkEom, {}};
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const SolvedUnknown* s = sol.find(unknowns[k]);
    cs.equations.push_back({eqs[k].first, Expression::generator(unknowns[k]), s->value});
  }
  return cs;
}

RewriteSystem bulk_eom_rules(int p) {
  RewriteSystem rs;
  for (const auto& eq : bulk_euler_lagrange(p).equations) rs.add(*eq.lhs.symbols().begin(), eq.rhs);
  return rs;
}

FluxSigns calibrated_flux_signs() { return FluxSigns{1, 1, 1}; }

FluxTable::FluxTable(int left, int right, std::vector<GenId> localized, FluxSigns signs) : signs_(signs) {
  const std::pair<int, int> sides[] = {{left, -1}, {right, 1}};
  for (const auto& [p, side] : sides) {
    model::Region rg = model::Region::of(p);
    Expression L = model::bulk_lagrangian(p).density;
    const std::pair<GenId, int> fields[] = {{rg.phi, signs.boson}, {rg.psi, signs.psi}, {rg.psib, signs.psibar}};
    for (const auto& [q, s] : fields) {
      // d_x integration by parts: +P where the left region ends, -P where the right one starts
      long sign = side < 0 ? s : -s;
      entries_.push_back({q, side, Expression(sign) * space_momentum(L, q)});
    }
  }
  for (GenId g : localized) entries_.push_back({g, 0, Expression()});
}

FluxTable FluxTable::type1(const model::TypeIDefect& d, FluxSigns signs) {
  return FluxTable(d.left, d.right, {d.g}, signs);
}

FluxTable FluxTable::type2(FluxSigns signs) {
  model::TypeIIDefect d = model::defect_type2();
  return FluxTable(1, 2, {d.Lambda, d.f1, d.ft1}, signs);
}

const FluxEntry* FluxTable::find(GenId field) const {
  for (const auto& e : entries_)
    if (e.field == field) return &e;
  return nullptr;
}

model::ConditionSet defect_euler_lagrange(const model::LagrangianDensity& ld, const FluxTable& flux) {
  const Registry& reg = Registry::instance();
  model::ConditionSet cs{ld.kind == model::LagrangianKind::TypeII ? model::ConditionKind::TypeII
                                                                   : model::ConditionKind::TypeI,
                         {}};
  for (const auto& e : flux.entries()) {
    Variation v = variational_derivative(ld.density, e.field);
    if (v.absent && e.side == 0)
      throw DomainError("defect field " + reg.name(e.field) + " does not occur in the defect Lagrangian");
    cs.equations.push_back({"vary-" + reg.name(e.field), e.flux + v.value, Expression()});
  }
  return cs;
}

}  // namespace sshg::lagrangian
