#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sshg/document.hpp"
#include "sshg/lagrangian.hpp"
#include "sshg/model.hpp"

// Checks of the defect model; each returns a ResidualReport.
namespace sshg::verifier {

enum class Status { Pass, Fail, PassWithAssignment, ObstructionReported };
enum class Mode { Posit, Solve };

std::string status_name(Status s);  // pass, fail, pass-with-assignment, obstruction-reported
std::string mode_name(Mode m);
std::optional<Mode> parse_mode(const std::string& s);

struct Labelled {
  std::string label;
  Expression value;
};

// printed_i = sum_j matrix[i][j] * derived_j
struct Recombination {
  std::vector<std::string> rows;     // printed equations
  std::vector<std::string> columns;  // derived equations
  std::vector<std::vector<Expression>> matrix;
};

struct ResidualReport {
  std::string check;
  Status status = Status::Pass;
  bool blocking = true;             // a non-blocking failure does not fail the suite
  std::vector<Labelled> residuals;  // non-zero residuals only
  std::vector<std::string> free_symbols;
  std::vector<Labelled> assignments;
  Expression normalization = Expression(1);
  std::optional<Recombination> recombination;
  std::vector<std::string> notes;

  bool passed() const { return status == Status::Pass || status == Status::PassWithAssignment; }
  // counts against the exit status
  bool failing(bool strict) const;
};

// ---- model objects as documents ---------------------------------------------

Document conditions_document(const model::ConditionSet& cs);
model::ConditionSet document_conditions(const Document& doc, model::ConditionKind kind);
Document rules_document(const RewriteSystem& rs);
RewriteSystem document_rules(const Document& doc);
Document density_document(const Expression& density);
Expression document_density(const Document& doc);

// Named model objects. A file <golden>/<name>.expr replaces the built-in object.
class Sources {
 public:
  explicit Sources(std::optional<std::filesystem::path> golden = std::nullopt);

  static const std::vector<std::string>& object_names();
  static Document builtin(const std::string& name);  // throws DomainError for unknown names

  Document document(const std::string& name) const;
  SuperMatrix matrix(const std::string& name) const;
  model::ConditionSet conditions(const std::string& name) const;
  RewriteSystem rules(const std::string& name) const;
  Expression density(const std::string& name) const;
  const std::optional<std::filesystem::path>& golden() const { return golden_; }

 private:
  std::optional<std::filesystem::path> golden_;
};

// ---- checks -------------------------------------------------------------------

struct CheckOptions {
  Mode mode = Mode::Solve;
  bool allow_normalization = true;
};

// product of the two Type-I matrices against the printed fused matrix
ResidualReport check_fusion_product(const Sources& src);
// same with the factors in the wrong order; expected to fail
ResidualReport check_fusion_product_reversed(const Sources& src);
// d+-K1 = K1 A(1) - A(0) K1 under the oriented Type-I conditions
ResidualReport check_defect_matrix(const Sources& src, const CheckOptions& opt);
// flatness of the bulk Lax pair of regions 0, 1, 2 modulo the bulk equations of motion
ResidualReport check_zero_curvature(const Sources& src, const CheckOptions& opt);
ResidualReport check_el_type1(const Sources& src);
ResidualReport check_el_type2(const Sources& src);
ResidualReport check_reparam_identities(const Sources& src);
// residual(K2) = residual(K1(sigma2)) K1(sigma1) + K1(sigma2) residual(K1(sigma1))
ResidualReport check_composition(const Sources& src);
// zero curvature of the reparametrized fused matrix; non-blocking
ResidualReport check_reparametrized_k2(const Sources& src, const CheckOptions& opt);

// Checks reachable by name, sorted.
const std::vector<std::string>& check_names();
ResidualReport run_check(const std::string& name, const Sources& src, const CheckOptions& opt);
// sorted by check name
std::vector<ResidualReport> build_report(std::vector<ResidualReport> reports);

// ---- helpers shared by checks and tests -----------------------------------------

// Compares a derived equation set to a printed one modulo invertible recombination:
// each side is solved for `unknowns` and substituted into the other.
struct Comparison {
  bool derived_in_printed = false;
  bool printed_in_derived = false;
  std::vector<Labelled> printed_residuals;  // printed rows under the derived solution
  std::vector<Labelled> derived_residuals;  // derived rows under the printed solution
  std::optional<Recombination> recombination;
  std::vector<std::string> localized;  // single-coefficient discrepancies
  std::vector<std::string> diagnostics;
};
Comparison compare_condition_sets(const model::ConditionSet& derived, const model::ConditionSet& printed,
                                  const std::vector<GenId>& unknowns);

// Scalar q with a == q * b, if any.
std::optional<CycloScalar> scalar_ratio(const Expression& a, const Expression& b);

// Terms of e grouped by the power of lambda^(1/2): (2 * exponent, part).
std::vector<std::pair<std::int64_t, Expression>> lambda_sectors(const Expression& e);

}  // namespace sshg::verifier
