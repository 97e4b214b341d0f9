#pragma once

#include <string>
#include <vector>

#include "sshg/derivation.hpp"
#include "sshg/linear.hpp"
#include "sshg/rewrite.hpp"
#include "sshg/supermatrix.hpp"

// Encodings of the sshG bulk, Type-I and fused Type-II defect formulas.
namespace sshg::model {

enum class Chirality { Plus, Minus };
Direction direction(Chirality c);
std::string chirality_name(Chirality c);

// Field symbols of bulk region p (0, 1 or 2).
struct Region {
  int p = 0;
  GenId phi = kNoGen;
  GenId psi = kNoGen;
  GenId psib = kNoGen;

  static Region of(int p);
};

// Type-I defect sewing region `left` (x < x_k) to region `right`.
struct TypeIDefect {
  int index = 1;
  int left = 1;
  int right = 0;
  GenId sigma = kNoGen;  // Backlund parameter
  GenId g = kNoGen;      // odd auxiliary field
  GenId c = kNoGen;      // free normalization of the defect matrix
};

TypeIDefect defect1();  // regions 1 -> 0, sigma1, g1, c1
TypeIDefect defect2();  // regions 0 -> 2, sigma2, g2, c2

// Fused defect between regions 1 and 2: sigma1 = sigma e^-tau, sigma2 = sigma e^tau.
struct TypeIIDefect {
  GenId sigma = kNoGen;
  GenId tau = kNoGen;
  GenId m = kNoGen;
  GenId Lambda = kNoGen;
  GenId f1 = kNoGen;
  GenId ft1 = kNoGen;
};
TypeIIDefect defect_type2();

// relabelling that carries defect1's symbols to `d`
RewriteSystem relabel_from_defect1(const TypeIDefect& d);

// ---- matrices --------------------------------------------------------------

SuperMatrix lax(Chirality c, int p);
SuperMatrix defect_matrix(const TypeIDefect& d);
// K2 as printed: nine closed-form components in c, sigma, tau
SuperMatrix fused_closed_form();
// sigma1 -> sigma e^-tau, sigma2 -> sigma e^tau, c -> c1 c2
RewriteSystem fusion_parameters();
// defect_matrix(defect2) * defect_matrix(defect1), fusion parameters applied
SuperMatrix fused_product();

// Entries of the printed K2 that differ from the product. `delta` is
// product - printed, hand-derived and pinned here.
struct Erratum {
  std::size_t row = 0, col = 0;  // 0-based
  Expression delta;
  std::string note;
};
const std::vector<Erratum>& fused_errata();

// ---- conditions ------------------------------------------------------------

enum class ConditionKind { TypeI, TypeII, BulkEom };

struct Equation {
  std::string label;
  Expression lhs;
  Expression rhs;
  Expression residual() const { return lhs - rhs; }
};

struct ConditionSet {
  ConditionKind kind = ConditionKind::TypeI;
  std::vector<Equation> equations;

  const Equation* find(const std::string& label) const;
  std::vector<Expression> residuals() const;
};

// labels: boson-t, boson-x, psi-jump, psibar-jump, aux-dt
ConditionSet conditions_type1(const TypeIDefect& d);
// labels: phi-sum, phi-diff-plus, phi-diff-minus, psi-diff, psibar-diff, f1-dt, ft1-dt
ConditionSet conditions_type2();

// ---- Lagrangians -----------------------------------------------------------

enum class LagrangianKind { Bulk, TypeI, TypeII };

struct LagrangianDensity {
  LagrangianKind kind = LagrangianKind::Bulk;
  int index = 0;  // region p for Bulk, defect k for TypeI
  Expression density;
};

LagrangianDensity bulk_lagrangian(int p);
LagrangianDensity type1_lagrangian(const TypeIDefect& d);
LagrangianDensity type2_lagrangian();

// ---- reparametrization -----------------------------------------------------

Expression mu_plus();   // 2^(1/2) r D^-1
Expression mu_minus();  // 2^(1/2) h r D^-1
// exp(phi0) -> Lambda, phi1, phi2, tau, f1, ft1 form; g1, g2 -> f1, ft1
RewriteSystem reparametrization();
// f1 -> mu+ g2 + mu- g1, ft1 -> mu- g2 - mu+ g1
RewriteSystem auxiliary_forward();

// ---- orientation -----------------------------------------------------------

struct OrientedSystem {
  RewriteSystem rules;
  std::vector<GenId> unsolved;  // eliminated symbols left symbolic
};

// Solves the (linear) equations for `eliminate`. When `light_cone` is set the
// residuals are first rewritten over light-cone jets. Throws SolveError on a
// non-linear occurrence or an inconsistent system.
OrientedSystem orient_rewrite_system(const ConditionSet& cs, const std::vector<GenId>& eliminate,
                                     const std::vector<GenId>& free, bool light_cone = true);

// The standard orientation of a Type-I set: d+-phi_right, psi_right, psib_right
// eliminated, every left-region symbol and g free.
OrientedSystem orient_type1(const ConditionSet& cs, const TypeIDefect& d);

}  // namespace sshg::model
