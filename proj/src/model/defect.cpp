#include "macros.hpp"
#include "sshg/model.hpp"

namespace sshg::model {
namespace {

using detail::parse_model;

// defect 1: right region 0, left region 1
const char* const kDefect1Inner[9] = {
    "1",
    "sigma1/lambda*exp(phi1+phi0)",
    "-(2*i*sigma1/lambda)^(1/2)*exp((phi1+phi0)/2)*g1",
    "sigma1*exp(-(phi1+phi0))",
    "1",
    "-(2*i*sigma1)^(1/2)*exp(-(phi1+phi0)/2)*g1",
    "(2*i*sigma1)^(1/2)*exp(-(phi1+phi0)/2)*g1",
    "(2*i*sigma1/lambda)^(1/2)*exp((phi1+phi0)/2)*g1",
    "1 - sigma1/lambda^(1/2)"};

const char* const kFused[9] = {
    // (1,1)
    "c*(lambda + sigma^2*exp(-PHIM) + 2*i*sigma*exp(-PHIM/2)*g1*g2*lambda^(1/2))",
    // (1,2)
    "c*sigma*exp(phi0)*(exp(phi1-tau) + exp(phi2+tau) + 2*i*exp(PHIP/2)*g1*g2)",
    // (1,3)
    "-c*sigma*(2*i*sigma)^(1/2)*exp(phi0/2)*(exp(phi2-(phi1-tau)/2)*g1 - exp((phi2-tau)/2)*g2)"
    " - c*(2*i*sigma)^(1/2)*lambda^(1/2)*exp(phi0/2)*(exp((phi1-tau)/2)*g1 + exp((phi2+tau)/2)*g2)",
    // (2,1)
    "c*sigma*exp(-phi0)*(exp(-(phi1+tau)) + exp(-(phi2-tau)) + 2*i*exp(-PHIP/2)*g1*g2)",
    // (2,2)
    "c*(lambda + sigma^2*exp(PHIM) + 2*i*sigma*exp(-PHIM/2)*g1*g2)",
    // (2,3)
    "-c*(2*i*sigma)^(1/2)*lambda*exp(-phi0/2)*(g1*exp(-(phi1+tau)/2) + g2*exp(-(phi2-tau)/2))"
    " + c*sigma*(2*i*sigma)^(1/2)*lambda^(1/2)*exp(-phi0/2)*(g2*exp(-(phi2+tau)/2) - g1*exp((phi1+tau)/2-phi2))",
    // (3,1)
    "c*(2*i*sigma)^(1/2)*lambda*exp(-phi0/2)*(g1*exp(-(phi1+tau)/2) + g2*exp(-(phi2-tau)/2))"
    " + c*sigma*(2*i*sigma)^(1/2)*lambda^(1/2)*exp(-phi0/2)*(g2*exp((phi2-tau)/2-phi1) - g1*exp((phi1+tau)/2))",
    // (3,2)
    "c*sigma*(2*i*sigma)^(1/2)*exp(phi0/2)*(g2*exp(-(phi2+tau)/2+phi1) - g1*exp((phi1+tau)/2))"
    " + c*(2*i*sigma)^(1/2)*lambda^(1/2)*exp(phi0/2)*(exp((phi1-tau)/2)*g1 + exp((phi2+tau)/2)*g2)",
    // (3,3)
    "c*(lambda + sigma^2 - 2*sigma*lambda^(1/2)*(cosh(tau) - 2*i*g1*g2*cosh(PHIM/2)))"};

}  // namespace

SuperMatrix defect_matrix(const TypeIDefect& d) {
  SuperMatrix inner(SuperMatrix::sl21());
  for (std::size_t k = 0; k < 9; ++k) inner.set(k / 3, k % 3, parse_model(kDefect1Inner[k]));
  SuperMatrix k1 = parse_model("c1*lambda^(1/2)") * inner;
  RewriteSystem rs = relabel_from_defect1(d);
  return rs.empty() ? k1 : mat_substitute(k1, rs);
}

SuperMatrix fused_closed_form() {
  SuperMatrix m(SuperMatrix::sl21());
  for (std::size_t k = 0; k < 9; ++k) m.set(k / 3, k % 3, parse_model(kFused[k]));
  return m;
}

RewriteSystem fusion_parameters() {
  const Registry& reg = Registry::instance();
  RewriteSystem rs;
  rs.add(reg.id("sigma1"), parse_model("sigma*exp(-tau)"));
  rs.add(reg.id("sigma2"), parse_model("sigma*exp(tau)"));
  rs.add(reg.id("c"), parse_model("c1*c2"));
  return rs;
}

SuperMatrix fused_product() {
  return mat_substitute(defect_matrix(defect2()) * defect_matrix(defect1()), fusion_parameters());
}

const std::vector<Erratum>& fused_errata() {
  static const std::vector<Erratum> errata = [] {
    // c is the closed-form constant; fusion_parameters() applies to delta as well
    std::vector<Erratum> out;
    out.push_back({1, 0,
                   parse_model("c*(lambda - 1)*sigma*exp(-phi0)*(exp(-(phi1+tau)) + exp(-(phi2-tau)) + "
                               "2*i*exp(-PHIP/2)*g1*g2)"),
                   "printed entry lacks the overall factor lambda"});
    out.push_back({1, 1, parse_model("2*i*c*sigma*(lambda^(1/2)*exp(PHIM/2) - exp(-PHIM/2))*g1*g2"),
                   "g1 g2 term: printed exp(-phi_-/2) without lambda^(1/2); product has lambda^(1/2) exp(phi_-/2)"});
    out.push_back({2, 0,
                   parse_model("-c*sigma*(2*i*sigma)^(1/2)*lambda^(1/2)*exp(-phi0/2)*"
                               "(exp((tau-phi1)/2) - exp((phi1+tau)/2))*g1"),
                   "lambda^(1/2) g1 term: printed exp((phi1+tau)/2); product has exp((tau-phi1)/2)"});
    return out;
  }();
  return errata;
}

}  // namespace sshg::model
