#include <map>

#include "internal.hpp"
#include "sshg/error.hpp"
#include "sshg/text.hpp"

namespace sshg::verifier {

using namespace sshg::model;

namespace {

std::string sector_name(std::int64_t twice) { return "lambda^(" + Fraction(twice, 2).str() + ")"; }

}  // namespace

ResidualReport check_zero_curvature(const Sources& src, const CheckOptions& opt) {
  const Registry& reg = Registry::instance();
  ResidualReport r;
  r.check = "zero-curvature";
  GenId kappa = reg.id("kappa");

  // flatness residual per region, and the equations of motion scaled by kappa
  std::vector<SuperMatrix> curvature;
  std::vector<RewriteSystem> eom;
  for (int p = 0; p <= 2; ++p) {
    SuperMatrix ap = detail::lax_of(src, Chirality::Plus, p);
    SuperMatrix am = detail::lax_of(src, Chirality::Minus, p);
    SuperMatrix F = mat_derive(am, Derivation(Direction::Plus)) - mat_derive(ap, Derivation(Direction::Minus)) +
                    commutator(ap, am);
    std::set<std::int64_t> raw;
    for (std::size_t i = 0; i < F.dim(); ++i)
      for (std::size_t j = 0; j < F.dim(); ++j)
        for (const auto& [k, part] : lambda_sectors(F(i, j))) raw.insert(k);
    std::string sectors;
    for (auto k : raw) sectors += " " + sector_name(k);
    r.notes.push_back("region " + std::to_string(p) + ": sectors needing the equations of motion:" +
                      (sectors.empty() ? " none" : sectors));
    curvature.push_back(F);

    RewriteSystem rules;
    for (const auto& e : src.conditions("bulk-eom-" + std::to_string(p)).equations) {
      if (e.lhs.size() != 1 || !e.lhs.terms()[0].coeff.is_one())
        throw DomainError("bulk-eom-" + std::to_string(p) + ": '" + e.label + "' is not solved for a jet");
      auto syms = e.lhs.symbols();
      if (syms.size() != 1) throw DomainError("bulk-eom-" + std::to_string(p) + ": '" + e.label + "' lhs is not a symbol");
      GenId target = *syms.begin();
      if (!(Expression::generator(target) == e.lhs))
        throw DomainError("bulk-eom-" + std::to_string(p) + ": '" + e.label + "' lhs is not a symbol");
      rules.add(target, opt.allow_normalization ? Expression::generator(kappa) * e.rhs : e.rhs);
    }
    eom.push_back(rules);
  }

  std::vector<SuperMatrix> reduced;
  for (int p = 0; p <= 2; ++p) reduced.push_back(mat_substitute(curvature[p], eom[p]));

  if (opt.allow_normalization) {
    LinearSystem ls({kappa});
    for (int p = 0; p <= 2; ++p)
      for (std::size_t i = 0; i < reduced[p].dim(); ++i)
        for (std::size_t j = 0; j < reduced[p].dim(); ++j)
          ls.add(detail::entry_label("region " + std::to_string(p), i, j), reduced[p](i, j));
    LinearSolution sol = ls.solve();
    const SolvedUnknown* k = sol.find(kappa);
    Expression scale(1);
    // an implicit solution reads pivot * kappa = value
    std::optional<Expression> solved;
    if (k && !k->implicit) solved = k->value;
    if (k && k->implicit)
      if (auto q = scalar_ratio(k->value, k->pivot)) solved = Expression(*q);
    if (solved && sol.consistent()) {
      scale = *solved;
      r.notes.push_back("equations of motion enter with normalization " + render_expression(scale));
      if (!scale.is_constant()) r.notes.push_back("normalization is not a constant: " + render_expression(scale));
    } else {
      r.notes.push_back("normalization not determined; kept at 1");
    }
    r.normalization = scale;
    RewriteSystem fix;
    fix.add(kappa, scale);
    for (auto& m : reduced) m = mat_substitute(m, fix);
  }

  for (int p = 0; p <= 2; ++p) {
    const SuperMatrix& m = reduced[p];
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j)
        for (const auto& [k, part] : lambda_sectors(m(i, j)))
          r.residuals.push_back(
              {detail::entry_label("region " + std::to_string(p), i, j) + " " + sector_name(k), part});
  }
  r.notes.push_back("each power of lambda^(1/2) checked separately");
  detail::settle(r);
  return r;
}

}  // namespace sshg::verifier
