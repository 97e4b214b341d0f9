#include "internal.hpp"
#include "sshg/text.hpp"

namespace sshg::verifier {

using namespace sshg::model;

namespace detail {

ChiralitySplit solve_chirality_split(const Sources& src, const SuperMatrix& K, const TypeIDefect& d,
                                     const RewriteSystem& orientation) {
  const Registry& reg = Registry::instance();
  ChiralitySplit out;
  for (Chirality ch : {Chirality::Plus, Chirality::Minus}) {
    SuperMatrix R = defect_residual(K, direction(ch), lax_of(src, ch, d.left), lax_of(src, ch, d.right));
    R = mat_substitute(R, orientation);
    bool plus = ch == Chirality::Plus;
    GenId u = reg.jet(d.g, Frame::LightCone, plus ? 1 : 0, plus ? 0 : 1);
    LinearSystem ls({u});
    for (std::size_t i = 0; i < R.dim(); ++i)
      for (std::size_t j = 0; j < R.dim(); ++j) ls.add(entry_label(chirality_name(ch), i, j), R(i, j));
    LinearSolution sol = ls.solve();
    for (const auto& s : sol.solved)
      if (!s.implicit) out.rules.add(s.unknown, s.value);
    for (const auto& l : sol.leftovers)
      if (!l.residual.is_zero()) out.leftovers.push_back({l.label, l.residual});
    out.diagnostics.insert(out.diagnostics.end(), sol.diagnostics.begin(), sol.diagnostics.end());
  }
  return out;
}

}  // namespace detail

ResidualReport check_defect_matrix(const Sources& src, const CheckOptions& opt) {
  const Registry& reg = Registry::instance();
  ResidualReport r;
  r.check = "defect-matrix";
  TypeIDefect d = defect1();
  SuperMatrix K = src.matrix("defect-matrix-1");
  ConditionSet cs = src.conditions("type1-conditions");

  RewriteSystem orientation, split;
  if (opt.mode == Mode::Solve) {
    orientation = orient_type1(cs, d).rules;
    auto s = detail::solve_chirality_split(src, K, d, orientation);
    split = s.rules;
    r.residuals = s.leftovers;
    r.notes = s.diagnostics;
    for (const auto& rule : split.rules()) r.assignments.push_back({reg.name(rule.source), rule.image});
  } else {
    orientation = src.rules("type1-orientation");
    split = src.rules("type1-chirality-split");
    for (Chirality ch : {Chirality::Plus, Chirality::Minus}) {
      SuperMatrix R = detail::defect_residual(K, direction(ch), detail::lax_of(src, ch, d.left),
                                              detail::lax_of(src, ch, d.right));
      R = mat_substitute(mat_substitute(R, orientation), split);
      detail::add_matrix_residuals(r, R, chirality_name(ch));
    }
  }
  r.notes.push_back("orientation: " + std::to_string(orientation.size()) + " rule(s), mode " + mode_name(opt.mode));

  // the split must reproduce the printed d_t equation of the auxiliary field
  const Equation* aux = cs.find("aux-dt");
  if (!aux) {
    r.notes.push_back("type1-conditions has no aux-dt equation");
  } else {
    Expression lhs = substitute(substitute(to_light_cone(aux->lhs), orientation), split);
    Expression rhs = substitute(substitute(to_light_cone(aux->rhs), orientation), split);
    if (!(lhs - rhs).is_zero()) r.residuals.push_back({"aux-dt", lhs - rhs});
  }
  if (split.size() != 2) r.notes.push_back("chirality split incomplete: " + std::to_string(split.size()) + " of 2");
  std::set<GenId> syms;
  for (const auto& rule : split.rules())
    for (GenId g : rule.image.symbols()) syms.insert(g);
  r.free_symbols = detail::symbol_names(syms);

  if (!r.residuals.empty() || split.size() != 2 || !aux)
    r.status = Status::Fail;
  else
    r.status = opt.mode == Mode::Solve ? Status::PassWithAssignment : Status::Pass;
  return r;
}

}  // namespace sshg::verifier
