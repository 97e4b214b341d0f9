#include <algorithm>

#include "sshg/error.hpp"
#include "sshg/model.hpp"
#include "sshg/text.hpp"

namespace sshg::model {

OrientedSystem orient_rewrite_system(const ConditionSet& cs, const std::vector<GenId>& eliminate,
                                     const std::vector<GenId>& free, bool light_cone) {
  OrientedSystem out;
  if (cs.equations.empty()) return out;
  LinearSystem ls(eliminate);
  for (const auto& eq : cs.equations) ls.add(eq.label, light_cone ? to_light_cone(eq.residual()) : eq.residual());
  LinearSolution sol = ls.solve();
  for (const auto& row : sol.leftovers) {
    if (!row.residual.is_zero())
      throw SolveError("inconsistent system: row " + row.label + " leaves " + render_expression(row.residual));
  }
  out.rules = sol.rules();
  for (GenId g : free) out.rules.declare_free(g);
  out.unsolved = sol.unsolved;
  out.rules.check_terminating();
  return out;
}

OrientedSystem orient_type1(const ConditionSet& cs, const TypeIDefect& d) {
  const Registry& reg = Registry::instance();
  Region left = Region::of(d.left), right = Region::of(d.right);
  std::vector<GenId> eliminate = {reg.jet(right.phi, Frame::LightCone, 1, 0),
                                  reg.jet(right.phi, Frame::LightCone, 0, 1), right.psi, right.psib};
  std::vector<GenId> free = {left.phi,
                             reg.jet(left.phi, Frame::LightCone, 1, 0),
                             reg.jet(left.phi, Frame::LightCone, 0, 1),
                             left.psi,
                             left.psib,
                             right.phi,
                             d.g};
  ConditionSet algebraic{cs.kind, {}};
  for (const auto& eq : cs.equations) {
    // the aux-dt equation carries d_t g, which needs a chirality split of its own
    bool has_aux_jet = false;
    for (GenId s : eq.residual().symbols())
      if (reg.at(s).is_jet() && reg.at(s).field == d.g) has_aux_jet = true;
    if (!has_aux_jet) algebraic.equations.push_back(eq);
  }
  return orient_rewrite_system(algebraic, eliminate, free, true);
}

}  // namespace sshg::model
