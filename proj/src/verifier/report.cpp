#include <algorithm>
#include <map>

#include "internal.hpp"
#include "sshg/error.hpp"

namespace sshg::verifier {

namespace detail {

std::string entry_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

std::string entry_label(const std::string& prefix, std::size_t i, std::size_t j) {
  return prefix.empty() ? entry_label(i, j) : prefix + " " + entry_label(i, j);
}

void add_matrix_residuals(ResidualReport& r, const SuperMatrix& m, const std::string& prefix) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j)
      if (!m(i, j).is_zero()) r.residuals.push_back({entry_label(prefix, i, j), m(i, j)});
}

void settle(ResidualReport& r) { r.status = r.residuals.empty() ? Status::Pass : Status::Fail; }

std::vector<std::string> symbol_names(const std::set<GenId>& ids) {
  std::vector<std::string> out;
  for (GenId g : ids) out.push_back(Registry::instance().name(g));
  std::sort(out.begin(), out.end());
  return out;
}

SuperMatrix defect_residual(const SuperMatrix& K, Direction dir, const SuperMatrix& a_left,
                            const SuperMatrix& a_right) {
  return mat_derive(K, Derivation(dir)) - K * a_left + a_right * K;
}

SuperMatrix lax_of(const Sources& src, model::Chirality ch, int p) {
  return src.matrix((ch == model::Chirality::Plus ? "lax-plus-" : "lax-minus-") + std::to_string(p));
}

}  // namespace detail

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::PassWithAssignment: return "pass-with-assignment";
    case Status::ObstructionReported: return "obstruction-reported";
  }
  return "fail";
}

std::string mode_name(Mode m) { return m == Mode::Posit ? "posit" : "solve"; }

std::optional<Mode> parse_mode(const std::string& s) {
  if (s == "posit") return Mode::Posit;
  if (s == "solve") return Mode::Solve;
  return std::nullopt;
}

bool ResidualReport::failing(bool strict) const {
  if (passed()) return false;
  return blocking || strict;
}

std::optional<CycloScalar> scalar_ratio(const Expression& a, const Expression& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return CycloScalar(0);
  if (a.size() != b.size()) return std::nullopt;
  // canonical order is by key, so a == q b pairs terms index by index
  CycloScalar q = a.terms()[0].coeff * b.terms()[0].coeff.inverse();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!(a.terms()[k].key == b.terms()[k].key)) return std::nullopt;
    if (!(a.terms()[k].coeff == q * b.terms()[k].coeff)) return std::nullopt;
  }
  return q;
}

std::vector<std::pair<std::int64_t, Expression>> lambda_sectors(const Expression& e) {
  GenId lambda = Registry::instance().id("lambda");
  std::map<std::int64_t, std::vector<Term>> by;
  for (const Term& t : e.terms()) {
    Fraction x = t.key.even.exponent(lambda) * Fraction(2);
    if (!x.is_integer()) throw DomainError("lambda power " + x.str() + "/2 is not a multiple of 1/2");
    by[x.num()].push_back(t);
  }
  std::vector<std::pair<std::int64_t, Expression>> out;
  for (auto& [k, ts] : by) out.emplace_back(k, Expression::from_terms(std::move(ts)));
  return out;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "composition",       "defect-matrix",        "el-type1",           "el-type2",
      "fusion-product",    "reparam-identities",   "reparametrized-k2", "zero-curvature"};
  return names;
}

ResidualReport run_check(const std::string& name, const Sources& src, const CheckOptions& opt) {
  if (name == "composition") return check_composition(src);
  if (name == "defect-matrix") return check_defect_matrix(src, opt);
  if (name == "el-type1") return check_el_type1(src);
  if (name == "el-type2") return check_el_type2(src);
  if (name == "fusion-product") return check_fusion_product(src);
  if (name == "reparam-identities") return check_reparam_identities(src);
  if (name == "reparametrized-k2") return check_reparametrized_k2(src, opt);
  if (name == "zero-curvature") return check_zero_curvature(src, opt);
  throw DomainError("unknown check '" + name + "'");
}

std::vector<ResidualReport> build_report(std::vector<ResidualReport> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const ResidualReport& a, const ResidualReport& b) { return a.check < b.check; });
  return reports;
}

}  // namespace sshg::verifier
