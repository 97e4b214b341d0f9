#include "helpers.hpp"
#include "sshg/error.hpp"
#include "sshg/model.hpp"
#include "sshg/supermatrix.hpp"

using namespace sshg;
using namespace sshg::testing;

namespace {
RewriteSystem bosonic(std::initializer_list<const char*> odd) {
  RewriteSystem rs;
  for (const char* n : odd) rs.add(G(n), Expression());
  return rs;
}
}  // namespace

TEST_CASE("identity and linear combinations") {
  SuperMatrix k1 = model::defect_matrix(model::defect1());
  SuperMatrix id = SuperMatrix::identity(SuperMatrix::sl21());
  CHECK(id * k1 == k1);
  CHECK(k1 * id == k1);
  CHECK(mat_linear(k1, id, Expression()) == k1);
  CHECK(mat_linear(k1, k1, Expression(-1)).is_zero());
}

TEST_CASE("product of odd entries carries merge signs") {
  // grading (even, odd): off-diagonal entries are odd
  std::vector<Parity> gr{Parity::Even, Parity::Odd};
  SuperMatrix a(gr), b(gr);
  a.set(0, 1, S("g1"));
  a.set(1, 0, S("g2"));
  b.set(0, 1, S("psi0"));
  b.set(1, 0, S("psi1"));
  SuperMatrix ab = a * b, ba = b * a;
  // by hand: (ab)00 = g1 psi1, (ab)11 = g2 psi0, (ba)00 = psi0 g2 = -g2 psi0
  CHECK(ab(0, 0) == P("g1*psi1"));
  CHECK(ab(1, 1) == P("g2*psi0"));
  CHECK(ab(0, 1).is_zero());
  CHECK(ba(0, 0) == P("-g2*psi0"));
  CHECK(ba(1, 1) == P("-g1*psi1"));
  CHECK(commutator(a, b)(0, 0) == P("g1*psi1 + g2*psi0"));
}

TEST_CASE("scalar prefactor") {
  SuperMatrix k1 = model::defect_matrix(model::defect1());
  SuperMatrix inner = map_entries(k1, [](const Expression& e) { return e * P("c1^(-1)*lambda^(-1/2)"); });
  CHECK(P("c1*lambda^(1/2)") * inner == k1);
}

TEST_CASE("derivatives of matrices") {
  Derivation dp(Direction::Plus);
  CHECK(mat_derive(SuperMatrix::identity(SuperMatrix::sl21()), dp).is_zero());
  SuperMatrix dk = mat_derive(model::defect_matrix(model::defect1()), dp);
  CHECK(dk(0, 1) == P("c1*lambda^(-1/2)*sigma1*(dpphi1 + dpphi0)*exp(phi1 + phi0)"));
  // (1,3) = -w 2^(1/2) sigma1^(1/2) c1 e^{(phi0+phi1)/2} g1, Leibniz by hand
  Expression pre = P("-omega*2^(1/2)*sigma1^(1/2)*c1");
  CHECK(dk(0, 2) == pre * (P("1/2*(dpphi0 + dpphi1)*exp(phi0/2 + phi1/2)*g1") + P("exp(phi0/2 + phi1/2)*dpg1")));
  CHECK(dk(0, 2).contains(G("dpg1")));
}

TEST_CASE("commutators") {
  SuperMatrix ap = model::lax(model::Chirality::Plus, 0);
  CHECK(commutator(ap, ap).is_zero());
  CHECK(commutator(SuperMatrix::identity(SuperMatrix::sl21()), ap).is_zero());
}

TEST_CASE("bosonic block of the Lax commutator") {
  RewriteSystem b = bosonic({"psi0", "psib0"});
  SuperMatrix ap = mat_substitute(model::lax(model::Chirality::Plus, 0), b);
  SuperMatrix am = mat_substitute(model::lax(model::Chirality::Minus, 0), b);
  // hand expansion of the 2x2 block: (1,1) = e^{-2 phi} - e^{2 phi}, no lambda^(-1/2) term
  CHECK(commutator(ap, am)(0, 0) == P("exp(-2*phi0) - exp(2*phi0)"));
  CHECK(commutator(ap, am)(1, 1) == P("exp(2*phi0) - exp(-2*phi0)"));
}

TEST_CASE("parity pattern") {
  for (int p = 0; p <= 2; ++p) {
    CHECK(check_parity_pattern(model::lax(model::Chirality::Plus, p)).empty());
    CHECK(check_parity_pattern(model::lax(model::Chirality::Minus, p)).empty());
  }
  SuperMatrix k1 = model::defect_matrix(model::defect1());
  CHECK(check_parity_pattern(k1).empty());
  CHECK(check_parity_pattern(model::fused_closed_form()).empty());
  k1.set(0, 0, S("g1"));
  auto v = check_parity_pattern(k1);
  REQUIRE(v.size() == 1);
  CHECK(v[0].row == 0);
  CHECK(v[0].col == 0);
  CHECK(v[0].found == ParityClass::Odd);
}
