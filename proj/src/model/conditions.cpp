#include "macros.hpp"
#include "sshg/model.hpp"

namespace sshg::model {
namespace {

using detail::parse_model;

struct EquationText {
  const char* label;
  const char* lhs;
  const char* rhs;
};

// defect 1: left region 1, right region 0
const EquationText kTypeI[] = {
    {"boson-t", "dtphi0 - dxphi1",
     "2*sigma1*sinh(phi0+phi1) - 2/sigma1*sinh(phi0-phi1)"
     " + (2*sigma1)^(1/2)*i*g1*(sinh((phi0+phi1)/2)*(psib0+psib1) - 1/sigma1*sinh((phi0-phi1)/2)*(psi0-psi1))"},
    {"boson-x", "dxphi0 - dtphi1",
     "2*sigma1*sinh(phi0+phi1) + 2/sigma1*sinh(phi0-phi1)"
     " + (2*sigma1)^(1/2)*i*g1*(sinh((phi0+phi1)/2)*(psib0+psib1) + 1/sigma1*sinh((phi0-phi1)/2)*(psi0-psi1))"},
    {"psi-jump", "psi0 + psi1", "2*(2/sigma1)^(1/2)*cosh((phi0-phi1)/2)*g1"},
    {"psibar-jump", "psib0 - psib1", "-2*(2*sigma1)^(1/2)*cosh((phi0+phi1)/2)*g1"},
    {"aux-dt", "dtg1",
     "(sigma1/2)^(1/2)*(1/sigma1*cosh((phi0-phi1)/2)*(psi1-psi0) - cosh((phi0+phi1)/2)*(psib0+psib1))"},
};

// fused defect between regions 1 and 2; E = exp(-(phi_+ - Lambda))
const EquationText kTypeII[] = {
    {"phi-sum", "(dxphi1 + dxphi2) - (dtphi1 + dtphi2)",
     "dtLambda - m*(sigma*exp(Lambda-PHIP) + 1/sigma*exp(Lambda))*sinh(PHIM)"
     " - i*m*(sigma + 1/sigma)*sinh(PHIM/2)*f1*ft1"
     " + i*(m*sigma)^(1/2)*exp((Lambda-PHIP)/2)*cosh(PHIM/2)*PSIBP*ft1"
     " - i*(m/sigma)^(1/2)*exp(Lambda/2)*cosh(PHIM/2)*PSIP*f1"
     " - i*m*(sigma*exp(Lambda-PHIP) + 1/sigma*exp(Lambda))*cosh(tau)*sinh(PHIM/2)*f1*ft1"},
    {"phi-diff-plus", "(dxphi1 - dxphi2) + (dtphi1 - dtphi2)",
     "2*m*sigma*(exp(Lambda-PHIP)*(sinh(PHIM/2)^2 + cosh(tau)^2) - exp(PHIP-Lambda))"
     " + i*(m*sigma)^(1/2)*(exp((PHIP-Lambda)/2) - exp((Lambda-PHIP)/2)*cosh(tau))*PSIBP*f1"
     " - i*(m*sigma)^(1/2)*exp((Lambda-PHIP)/2)*sinh(PHIM/2)*PSIBP*ft1"
     " + 2*i*m*sigma*exp(Lambda-PHIP)*cosh(tau)*cosh(PHIM/2)*f1*ft1"},
    {"phi-diff-minus", "(dxphi1 - dxphi2) - (dtphi1 - dtphi2)",
     "2*m/sigma*(exp(-Lambda) - exp(Lambda)*(sinh(PHIM/2)^2 + cosh(tau)^2))"
     " - i*(m/sigma)^(1/2)*((exp(-Lambda/2) - exp(Lambda/2)*cosh(tau))*PSIP*ft1"
     " + exp(Lambda/2)*sinh(PHIM/2)*PSIP*f1)"
     " - 2*i*m/sigma*exp(Lambda)*cosh(tau)*cosh(PHIM/2)*f1*ft1"},
    {"psi-diff", "PSIM",
     "(m/sigma)^(1/2)*(exp(Lambda/2)*sinh(PHIM/2)*f1 - (exp(-Lambda/2) + exp(Lambda/2)*cosh(tau))*ft1)"},
    {"psibar-diff", "PSIBM",
     "(m*sigma)^(1/2)*((exp((PHIP-Lambda)/2) + exp((Lambda-PHIP)/2)*cosh(tau))*f1"
     " + exp((Lambda-PHIP)/2)*sinh(PHIM/2)*ft1)"},
    {"f1-dt", "dtf1",
     "-(m*sigma)^(1/2)/2*(exp((PHIP-Lambda)/2) + exp((Lambda-PHIP)/2)*cosh(tau))*PSIBP"
     " + 1/2*(m/sigma)^(1/2)*exp(Lambda/2)*sinh(PHIM/2)*PSIP"
     " - m/2*((sigma + 1/sigma) + (sigma*exp(Lambda-PHIP) + 1/sigma*exp(Lambda))*cosh(tau))*cosh(PHIM/2)*ft1"},
    {"ft1-dt", "dtft1",
     "-(m*sigma)^(1/2)/2*exp((Lambda-PHIP)/2)*sinh(PHIM/2)*PSIBP"
     " - 1/2*(m/sigma)^(1/2)*(exp(-Lambda/2) + exp(Lambda/2)*cosh(tau))*PSIP"
     " + m/2*((sigma + 1/sigma) + (sigma*exp(Lambda-PHIP) + 1/sigma*exp(Lambda))*cosh(tau))*cosh(PHIM/2)*f1"},
};

}  // namespace

ConditionSet conditions_type1(const TypeIDefect& d) {
  RewriteSystem rs = relabel_from_defect1(d);
  ConditionSet cs{ConditionKind::TypeI, {}};
  for (const auto& e : kTypeI) {
    Expression lhs = parse_model(e.lhs), rhs = parse_model(e.rhs);
    if (!rs.empty()) {
      lhs = substitute(lhs, rs);
      rhs = substitute(rhs, rs);
    }
    cs.equations.push_back({e.label, lhs, rhs});
  }
  return cs;
}

ConditionSet conditions_type2() {
  ConditionSet cs{ConditionKind::TypeII, {}};
  for (const auto& e : kTypeII) cs.equations.push_back({e.label, parse_model(e.lhs), parse_model(e.rhs)});
  return cs;
}

}  // namespace sshg::model
