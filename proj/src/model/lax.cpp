#include "macros.hpp"
#include "sshg/model.hpp"

namespace sshg::model {
namespace {

SuperMatrix from_rows(const char* const (&cells)[9], int p) {
  SuperMatrix m(SuperMatrix::sl21());
  for (std::size_t k = 0; k < 9; ++k) m.set(k / 3, k % 3, detail::parse_model(cells[k], p));
  return m;
}

const char* const kPlus[9] = {
    "lambda^(1/2) - dpphi@",        "-1",                           "omega*psib@",
    "-lambda",                      "lambda^(1/2) + dpphi@",        "lambda^(1/2)*omega*psib@",
    "lambda^(1/2)*omega*psib@",     "omega*psib@",                  "2*lambda^(1/2)"};

const char* const kMinus[9] = {
    "lambda^(-1/2)",                        "-lambda^(-1)*exp(2*phi@)",              "lambda^(-1/2)*omega*psi@*exp(phi@)",
    "-exp(-2*phi@)",                        "lambda^(-1/2)",                         "omega*psi@*exp(-phi@)",
    "-omega*psi@*exp(-phi@)",               "-omega*lambda^(-1/2)*psi@*exp(phi@)",   "2*lambda^(-1/2)"};

}  // namespace

SuperMatrix lax(Chirality c, int p) {
  Region::of(p);  // validates p
  return from_rows(c == Chirality::Plus ? kPlus : kMinus, p);
}

}  // namespace sshg::model
