#include "macros.hpp"
#include "sshg/model.hpp"

namespace sshg::model {
namespace {

using detail::parse_model;

const char* const kBulk =
    "1/2*dxphi@^2 - 1/2*dtphi@^2 + i*psi@*(dxpsi@ + dtpsi@) - i*psib@*(dxpsib@ - dtpsib@)"
    " + 4*(cosh(2*phi@) - 1) - 8*i*psib@*psi@*cosh(phi@)";

// defect 1: left region 1, right region 0
const char* const kTypeI =
    "1/2*(phi0*dtphi1 - phi1*dtphi0) - i*psi1*psi0 - i*psib1*psib0 + 2*i*g1*dtg1"
    " + 2*sigma1*cosh(phi0+phi1) + 2/sigma1*cosh(phi0-phi1)"
    " + 2*i*2^(1/2)*g1*(sigma1^(1/2)*cosh((phi0+phi1)/2)*(psib0+psib1)"
    " + sigma1^(-1/2)*cosh((phi0-phi1)/2)*(psi0-psi1))";

const char* const kTypeIIKinetic =
    "PHIM*dtLambda - 1/2*PHIM*(dtphi1 + dtphi2) + i/2*(PSIBP*PSIBM - PSIP*PSIM)"
    " + i*f1*dtf1 + i*ft1*dtft1";

const char* const kTypeIIPotential[4] = {
    "m*sigma*(exp(PHIP-Lambda) + exp(Lambda-PHIP)*(sinh(PHIM/2)^2 + cosh(tau)^2))",
    "m/sigma*(exp(-Lambda) + exp(Lambda)*(sinh(PHIM/2)^2 + cosh(tau)^2))",
    "-i*(m*sigma)^(1/2)*((exp((PHIP-Lambda)/2) + exp((Lambda-PHIP)/2)*cosh(tau))*PSIBP*f1"
    " + exp((Lambda-PHIP)/2)*sinh(PHIM/2)*PSIBP*ft1)"
    " + i*m*sigma*(1 + exp(Lambda-PHIP)*cosh(tau))*cosh(PHIM/2)*f1*ft1",
    "-i*(m/sigma)^(1/2)*((exp(-Lambda/2) + exp(Lambda/2)*cosh(tau))*PSIP*ft1"
    " - exp(Lambda/2)*sinh(PHIM/2)*PSIP*f1)"
    " + i*m/sigma*(1 + exp(Lambda)*cosh(tau))*cosh(PHIM/2)*f1*ft1",
};

}  // namespace

LagrangianDensity bulk_lagrangian(int p) {
  Region::of(p);  // validates p
  return {LagrangianKind::Bulk, p, parse_model(kBulk, p)};
}

LagrangianDensity type1_lagrangian(const TypeIDefect& d) {
  Expression density = parse_model(kTypeI);
  RewriteSystem rs = relabel_from_defect1(d);
  if (!rs.empty()) density = substitute(density, rs);
  return {LagrangianKind::TypeI, d.index, density};
}

LagrangianDensity type2_lagrangian() {
  Expression density = parse_model(kTypeIIKinetic);
  for (const char* b : kTypeIIPotential) density += parse_model(b);
  return {LagrangianKind::TypeII, 0, density};
}

}  // namespace sshg::model
