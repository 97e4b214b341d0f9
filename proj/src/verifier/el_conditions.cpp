#include "internal.hpp"
#include "sshg/text.hpp"

namespace sshg::verifier {

using namespace sshg::model;

namespace {

LinearSystem system_of(const ConditionSet& cs, const std::vector<GenId>& unknowns) {
  LinearSystem ls(unknowns);
  for (const auto& e : cs.equations) ls.add(e.label, e.residual());
  return ls;
}

// rows of `target` that do not vanish under the solution of `source`
std::vector<Labelled> reduce_under(const ConditionSet& target, const LinearSolution& source) {
  RewriteSystem rules = source.rules();
  std::vector<Labelled> out;
  for (const auto& e : target.equations) {
    Expression v = substitute(e.residual(), rules);
    if (!v.is_zero()) out.push_back({e.label, v});
  }
  return out;
}

bool leftovers_vanish(const LinearSolution& s) { return s.consistent() && s.unsolved.empty(); }

}  // namespace

Comparison compare_condition_sets(const ConditionSet& derived, const ConditionSet& printed,
                                  const std::vector<GenId>& unknowns) {
  const Registry& reg = Registry::instance();
  Comparison c;
  LinearSystem ld = system_of(derived, unknowns);
  LinearSolution sd = ld.solve(true);
  LinearSolution sp = system_of(printed, unknowns).solve();
  for (const auto& d : sd.diagnostics) c.diagnostics.push_back("derived: " + d);
  for (const auto& d : sp.diagnostics) c.diagnostics.push_back("printed: " + d);
  for (const auto& l : sd.leftovers)
    if (!l.residual.is_zero()) c.derived_residuals.push_back({"leftover " + l.label, l.residual});
  for (const auto& l : sp.leftovers)
    if (!l.residual.is_zero()) c.printed_residuals.push_back({"leftover " + l.label, l.residual});

  auto pr = reduce_under(printed, sd);
  auto dr = reduce_under(derived, sp);
  c.printed_in_derived = leftovers_vanish(sd) && pr.empty();
  c.derived_in_printed = leftovers_vanish(sp) && dr.empty();
  c.printed_residuals.insert(c.printed_residuals.end(), pr.begin(), pr.end());
  c.derived_residuals.insert(c.derived_residuals.end(), dr.begin(), dr.end());

  // a printed row that misses by a scalar multiple of one solved value has one wrong coefficient
  for (const auto& row : pr) {
    const Equation* e = printed.find(row.label);
    LinearForm f = split_linear(e->residual(), unknowns);
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      const SolvedUnknown* s = sd.find(unknowns[j]);
      if (!s || s->implicit) continue;
      auto q = scalar_ratio(row.value, s->value);
      if (!q || q->is_zero()) continue;
      Expression printed_coeff = f.coefficients[j];
      Expression needed = printed_coeff - Expression(*q);
      c.localized.push_back(row.label + ": coefficient of " + reg.name(unknowns[j]) +
                            " in lhs - rhs is " + render_expression(printed_coeff) +
                            " as printed; the derived equations require " + render_expression(needed));
    }
  }

  if (c.printed_in_derived) {
    Recombination rc;
    for (const auto& e : printed.equations) rc.rows.push_back(e.label);
    for (const auto& e : derived.equations) rc.columns.push_back(e.label);
    for (const auto& e : printed.equations) {
      LinearForm f = split_linear(e.residual(), unknowns);
      std::vector<Expression> row(derived.equations.size());
      for (std::size_t j = 0; j < unknowns.size(); ++j) {
        if (f.coefficients[j].is_zero()) continue;
        const SolvedUnknown* s = sd.find(unknowns[j]);
        for (std::size_t k = 0; k < row.size(); ++k) row[k] += f.coefficients[j] * s->combination[k];
      }
      rc.matrix.push_back(std::move(row));
    }
    c.recombination = std::move(rc);
  }
  return c;
}

namespace {

ResidualReport el_report(const std::string& name, const ConditionSet& derived, const ConditionSet& printed,
                         const std::vector<GenId>& unknowns) {
  ResidualReport r;
  r.check = name;
  Comparison c = compare_condition_sets(derived, printed, unknowns);
  for (const auto& x : c.printed_residuals) r.residuals.push_back({"printed " + x.label, x.value});
  for (const auto& x : c.derived_residuals) r.residuals.push_back({"derived " + x.label, x.value});
  r.recombination = c.recombination;
  std::string derived_labels;
  for (const auto& e : derived.equations) derived_labels += " " + e.label;
  r.notes.push_back("derived equations:" + derived_labels);
  auto signs = lagrangian::calibrated_flux_signs();
  r.notes.push_back("flux signs boson " + std::to_string(signs.boson) + ", psi " + std::to_string(signs.psi) +
                    ", psibar " + std::to_string(signs.psibar));
  r.notes.push_back(std::string("printed rows follow from the derived set: ") + (c.printed_in_derived ? "yes" : "no"));
  r.notes.push_back(std::string("derived rows follow from the printed set: ") + (c.derived_in_printed ? "yes" : "no"));
  for (const auto& l : c.localized) r.notes.push_back("localized: " + l);
  for (const auto& d : c.diagnostics) r.notes.push_back(d);
  std::set<GenId> syms;
  for (const auto& e : printed.equations)
    for (GenId g : e.residual().symbols()) syms.insert(g);
  r.free_symbols = detail::symbol_names(syms);
  r.status = c.printed_in_derived && c.derived_in_printed && r.residuals.empty() ? Status::Pass : Status::Fail;
  return r;
}

std::vector<GenId> ids(std::initializer_list<const char*> names) {
  std::vector<GenId> out;
  for (const char* n : names) out.push_back(Registry::instance().id(n));
  return out;
}

}  // namespace

ResidualReport check_el_type1(const Sources& src) {
  TypeIDefect d = defect1();
  LagrangianDensity ld{LagrangianKind::TypeI, d.index, src.density("lagrangian-type1")};
  ConditionSet derived = lagrangian::defect_euler_lagrange(ld, lagrangian::FluxTable::type1(d));
  return el_report("el-type1", derived, src.conditions("type1-conditions"),
                   ids({"dtphi0", "dxphi0", "psi0", "psib0", "dtg1"}));
}

ResidualReport check_el_type2(const Sources& src) {
  LagrangianDensity ld{LagrangianKind::TypeII, 0, src.density("lagrangian-type2")};
  ConditionSet derived = lagrangian::defect_euler_lagrange(ld, lagrangian::FluxTable::type2());
  ConditionSet printed = src.conditions("type2-conditions");
  ResidualReport r = el_report("el-type2", derived, printed,
                               ids({"dtLambda", "dxphi2", "dtphi2", "psi2", "psib2", "dtf1", "dtft1"}));
  GenId m = Registry::instance().id("m");
  std::size_t with_m = 0, failing_with_m = 0;
  for (const auto& e : printed.equations) {
    if (!e.residual().contains(m)) continue;
    ++with_m;
    for (const auto& x : r.residuals)
      if (x.label == "printed " + e.label) ++failing_with_m;
  }
  r.notes.push_back("m kept formal: " + std::to_string(with_m - failing_with_m) + " of " + std::to_string(with_m) +
                    " printed rows containing m are reproduced identically, so they impose no constraint on m");
  return r;
}

}  // namespace sshg::verifier
