#pragma once

#include <vector>

#include "sshg/model.hpp"

// Graded Euler-Lagrange calculus for bulk and defect densities.
namespace sshg::lagrangian {

struct Variation {
  Expression value;
  bool absent = false;  // q and its jets do not occur in L
};

// dL/dq - d_t dL/d(d_t q) - d_x dL/d(d_x q); left derivatives for odd q.
// Light-cone jets in L are first rewritten over d_t, d_x.
Variation variational_derivative(const Expression& L, GenId q);

// Equations of motion of region p solved for d+d-phi_p, d+psi_p, d-psib_p.
// labels: phi-eom, psi-eom, psibar-eom
model::ConditionSet bulk_euler_lagrange(int p);
RewriteSystem bulk_eom_rules(int p);

// Sign per field class applied to the boundary flux dL/d(d_x q): +s on the
// left region, -s on the right region.
struct FluxSigns {
  int boson = 1;
  int psi = 1;
  int psibar = 1;
  friend bool operator==(const FluxSigns&, const FluxSigns&) = default;
};

// Frozen convention; the unit tests re-derive it by scanning all eight sign choices.
FluxSigns calibrated_flux_signs();

struct FluxEntry {
  GenId field = kNoGen;
  int side = 0;  // -1 left region, +1 right region, 0 defect-localized
  Expression flux;
};

class FluxTable {
 public:
  // bulk fields of both regions plus the fields living on the defect
  FluxTable(int left, int right, std::vector<GenId> localized, FluxSigns signs = calibrated_flux_signs());
  static FluxTable type1(const model::TypeIDefect& d, FluxSigns signs = calibrated_flux_signs());
  static FluxTable type2(FluxSigns signs = calibrated_flux_signs());

  const std::vector<FluxEntry>& entries() const { return entries_; }
  const FluxEntry* find(GenId field) const;
  const FluxSigns& signs() const { return signs_; }

 private:
  std::vector<FluxEntry> entries_;
  FluxSigns signs_;
};

// One condition flux(q) + dL_D/dq == 0 per entry of the table, labelled
// "vary-<field>", in the d_t, d_x presentation.
model::ConditionSet defect_euler_lagrange(const model::LagrangianDensity& ld, const FluxTable& flux);

}  // namespace sshg::lagrangian
