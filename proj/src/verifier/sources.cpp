#include <sstream>

#include "internal.hpp"
#include "sshg/error.hpp"

namespace sshg::verifier {

using namespace sshg::model;

namespace {

std::string kind_name(ConditionKind k) {
  switch (k) {
    case ConditionKind::TypeI: return "type-I";
    case ConditionKind::TypeII: return "type-II";
    case ConditionKind::BulkEom: return "bulk-eom";
  }
  return "type-I";
}

std::optional<ConditionKind> parse_kind(const std::string& s) {
  if (s == "type-I") return ConditionKind::TypeI;
  if (s == "type-II") return ConditionKind::TypeII;
  if (s == "bulk-eom") return ConditionKind::BulkEom;
  return std::nullopt;
}

// "lax-plus-1" -> (Plus, 1)
bool parse_indexed(const std::string& name, const std::string& prefix, int& index) {
  if (name.size() != prefix.size() + 1 || name.compare(0, prefix.size(), prefix) != 0) return false;
  char c = name.back();
  if (c < '0' || c > '2') return false;
  index = c - '0';
  return true;
}

}  // namespace

Document conditions_document(const ConditionSet& cs) {
  Document doc;
  doc.directives.emplace_back("conditions", kind_name(cs.kind));
  for (const auto& e : cs.equations) doc.entries.push_back({e.label, e.lhs, e.rhs, 0});
  return doc;
}

ConditionSet document_conditions(const Document& doc, ConditionKind kind) {
  ConditionSet cs;
  cs.kind = kind;
  if (auto k = doc.directive("conditions")) {
    auto parsed = parse_kind(*k);
    if (!parsed) throw ParseError("unknown condition kind '" + *k + "'", 1, 1);
    cs.kind = *parsed;
  }
  for (const auto& e : doc.entries) {
    if (!e.rhs) throw ParseError("condition '" + e.label + "' is not an equation", e.line, 1);
    cs.equations.push_back({e.label, e.lhs, *e.rhs});
  }
  return cs;
}

Document rules_document(const RewriteSystem& rs) {
  const Registry& reg = Registry::instance();
  Document doc;
  doc.directives.emplace_back("rules", "");
  if (!rs.free_symbols().empty()) {
    std::string names;
    for (GenId g : rs.free_symbols()) names += (names.empty() ? "" : " ") + reg.name(g);
    doc.directives.emplace_back("free", names);
  }
  for (const auto& rule : rs.rules()) doc.entries.push_back({reg.name(rule.source), rule.image, std::nullopt, 0});
  return doc;
}

RewriteSystem document_rules(const Document& doc) {
  const Registry& reg = Registry::instance();
  RewriteSystem rs;
  for (const auto& e : doc.entries) {
    if (e.rhs) throw ParseError("rule '" + e.label + "' must not be an equation", e.line, 1);
    auto g = reg.find(e.label);
    if (!g) throw ParseError("rule source '" + e.label + "' is not a symbol", e.line, 1);
    rs.add(*g, e.lhs);
  }
  if (auto f = doc.directive("free")) {
    std::istringstream in(*f);
    std::string w;
    while (in >> w) rs.declare_free(reg.id(w));
  }
  return rs;
}

Document density_document(const Expression& density) {
  Document doc;
  doc.directives.emplace_back("lagrangian", "");
  doc.entries.push_back({"density", density, std::nullopt, 0});
  return doc;
}

Expression document_density(const Document& doc) {
  const DocumentEntry* e = doc.find("density");
  if (!e || e->rhs) throw ParseError("expected 'density: expression'", 1, 1);
  return e->lhs;
}

Sources::Sources(std::optional<std::filesystem::path> golden) : golden_(std::move(golden)) {}

const std::vector<std::string>& Sources::object_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (int p = 0; p <= 2; ++p) {
      n.push_back("lax-plus-" + std::to_string(p));
      n.push_back("lax-minus-" + std::to_string(p));
    }
    n.insert(n.end(), {"defect-matrix-1", "defect-matrix-2", "fused-matrix", "type1-conditions",
                       "type2-conditions", "lagrangian-type1", "lagrangian-type2", "reparametrization",
                       "auxiliary-forward", "type1-orientation", "type1-chirality-split"});
    for (int p = 0; p <= 2; ++p) {
      n.push_back("lagrangian-bulk-" + std::to_string(p));
      n.push_back("bulk-eom-" + std::to_string(p));
    }
    return n;
  }();
  return names;
}

Document Sources::builtin(const std::string& name) {
  int p = 0;
  if (parse_indexed(name, "lax-plus-", p)) return matrix_document(lax(Chirality::Plus, p));
  if (parse_indexed(name, "lax-minus-", p)) return matrix_document(lax(Chirality::Minus, p));
  if (parse_indexed(name, "lagrangian-bulk-", p)) return density_document(bulk_lagrangian(p).density);
  if (parse_indexed(name, "bulk-eom-", p)) return conditions_document(lagrangian::bulk_euler_lagrange(p));
  if (name == "defect-matrix-1") return matrix_document(defect_matrix(defect1()));
  if (name == "defect-matrix-2") return matrix_document(defect_matrix(defect2()));
  if (name == "fused-matrix") return matrix_document(fused_closed_form());
  if (name == "type1-conditions") return conditions_document(conditions_type1(defect1()));
  if (name == "type2-conditions") return conditions_document(conditions_type2());
  if (name == "lagrangian-type1") return density_document(type1_lagrangian(defect1()).density);
  if (name == "lagrangian-type2") return density_document(type2_lagrangian().density);
  if (name == "reparametrization") return rules_document(reparametrization());
  if (name == "auxiliary-forward") return rules_document(auxiliary_forward());
  if (name == "type1-orientation") {
    TypeIDefect d = defect1();
    return rules_document(orient_type1(conditions_type1(d), d).rules);
  }
  if (name == "type1-chirality-split") {
    TypeIDefect d = defect1();
    RewriteSystem orientation = orient_type1(conditions_type1(d), d).rules;
    auto split = detail::solve_chirality_split(Sources(), defect_matrix(d), d, orientation);
    if (!split.leftovers.empty() || split.rules.size() != 2)
      throw SolveError("chirality split of the Type-I matrix is not determined");
    return rules_document(split.rules);
  }
  throw DomainError("unknown object '" + name + "'");
}

Document Sources::document(const std::string& name) const {
  if (golden_) {
    std::filesystem::path file = *golden_ / (name + ".expr");
    if (std::filesystem::exists(file)) return read_document(file);
  }
  return builtin(name);
}

SuperMatrix Sources::matrix(const std::string& name) const { return document_matrix(document(name)); }

ConditionSet Sources::conditions(const std::string& name) const {
  return document_conditions(document(name), ConditionKind::TypeI);
}

RewriteSystem Sources::rules(const std::string& name) const { return document_rules(document(name)); }

Expression Sources::density(const std::string& name) const { return document_density(document(name)); }

}  // namespace sshg::verifier
