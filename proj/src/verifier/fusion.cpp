#include "internal.hpp"
#include "sshg/text.hpp"

namespace sshg::verifier {

using namespace sshg::model;

namespace {

ResidualReport compare_fusion(const std::string& name, const SuperMatrix& product, const SuperMatrix& printed,
                              bool use_errata) {
  ResidualReport r;
  r.check = name;
  RewriteSystem fp = fusion_parameters();
  SuperMatrix diff = mat_substitute(product, fp) - mat_substitute(printed, fp);
  if (use_errata) {
    for (const auto& e : fused_errata()) {
      Expression delta = substitute(e.delta, fp);
      const Expression& d = diff(e.row, e.col);
      if (d.is_zero()) continue;
      if (d == delta) {
        r.notes.push_back("pinned discrepancy " + detail::entry_label(e.row, e.col) + ": " + e.note +
                          "; product - printed = " + render_expression(delta));
        diff.set(e.row, e.col, Expression());
      }
    }
  }
  detail::add_matrix_residuals(r, diff);
  for (const auto& res : r.residuals)
    r.notes.push_back(res.label + ": " + std::to_string(res.value.size()) + " mismatching monomial(s)");
  std::set<GenId> syms;
  for (std::size_t i = 0; i < diff.dim(); ++i)
    for (std::size_t j = 0; j < diff.dim(); ++j)
      for (GenId g : mat_substitute(product, fp)(i, j).symbols()) syms.insert(g);
  r.free_symbols = detail::symbol_names(syms);
  detail::settle(r);
  return r;
}

}  // namespace

ResidualReport check_fusion_product(const Sources& src) {
  SuperMatrix k1 = src.matrix("defect-matrix-1");
  SuperMatrix k2 = src.matrix("defect-matrix-2");
  return compare_fusion("fusion-product", k2 * k1, src.matrix("fused-matrix"), true);
}

ResidualReport check_fusion_product_reversed(const Sources& src) {
  SuperMatrix k1 = src.matrix("defect-matrix-1");
  SuperMatrix k2 = src.matrix("defect-matrix-2");
  return compare_fusion("fusion-product-reversed", k1 * k2, src.matrix("fused-matrix"), true);
}

ResidualReport check_composition(const Sources& src) {
  ResidualReport r;
  r.check = "composition";
  TypeIDefect d1 = defect1(), d2 = defect2();
  SuperMatrix k1 = src.matrix("defect-matrix-1");
  SuperMatrix k2 = src.matrix("defect-matrix-2");
  SuperMatrix fused = k2 * k1;
  for (Chirality ch : {Chirality::Plus, Chirality::Minus}) {
    Direction dir = direction(ch);
    SuperMatrix a_outer = detail::lax_of(src, ch, d1.left);
    SuperMatrix a_middle = detail::lax_of(src, ch, d1.right);
    SuperMatrix a_inner = detail::lax_of(src, ch, d2.right);
    SuperMatrix r1 = detail::defect_residual(k1, dir, a_outer, a_middle);
    SuperMatrix r2 = detail::defect_residual(k2, dir, a_middle, a_inner);
    SuperMatrix rf = detail::defect_residual(fused, dir, a_outer, a_inner);
    detail::add_matrix_residuals(r, rf - (r2 * k1 + k2 * r1), chirality_name(ch));
  }
  r.notes.push_back("identity checked before any condition substitution");
  detail::settle(r);
  return r;
}

}  // namespace sshg::verifier
