#include "sshg/supermatrix.hpp"

#include "sshg/error.hpp"

namespace sshg {
namespace {

void require_same_shape(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("matrix dimension mismatch");
  if (a.grading() != b.grading()) throw ShapeError("matrix grading mismatch");
}

}  // namespace

SuperMatrix::SuperMatrix(std::vector<Parity> grading)
    : grading_(std::move(grading)), e_(grading_.size() * grading_.size()) {}

SuperMatrix SuperMatrix::identity(std::vector<Parity> grading) {
  SuperMatrix m(std::move(grading));
  for (std::size_t i = 0; i < m.dim(); ++i) m.set(i, i, Expression(1));
  return m;
}

std::vector<Parity> SuperMatrix::sl21() { return {Parity::Even, Parity::Even, Parity::Odd}; }

bool SuperMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
  return a.grading_ == b.grading_ && a.e_ == b.e_;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  require_same_shape(a, b);
  SuperMatrix out(a.grading());
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Term> raw;
      for (std::size_t k = 0; k < n; ++k) {
        Expression p = a(i, k) * b(k, j);
        raw.insert(raw.end(), p.terms().begin(), p.terms().end());
      }
      out.set(i, j, Expression::from_terms(std::move(raw)));
    }
  }
  return out;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
  require_same_shape(a, b);
  SuperMatrix out(a.grading());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.set(i, j, a(i, j) + b(i, j));
  return out;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
  require_same_shape(a, b);
  SuperMatrix out(a.grading());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.set(i, j, a(i, j) - b(i, j));
  return out;
}

SuperMatrix operator*(const Expression& s, const SuperMatrix& a) {
  return map_entries(a, [&](const Expression& x) { return s * x; });
}

SuperMatrix mat_linear(const SuperMatrix& a, const SuperMatrix& b, const Expression& s) { return a + s * b; }

SuperMatrix mat_derive(const SuperMatrix& a, const Derivation& d) {
  return map_entries(a, [&](const Expression& x) { return derive(x, d); });
}

SuperMatrix commutator(const SuperMatrix& a, const SuperMatrix& b) { return a * b - b * a; }

SuperMatrix mat_substitute(const SuperMatrix& a, const RewriteSystem& rs) {
  return map_entries(a, [&](const Expression& x) { return substitute(x, rs); });
}

std::vector<ParityViolation> check_parity_pattern(const SuperMatrix& a) {
  std::vector<ParityViolation> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      ParityClass p = a(i, j).parity();
      if (p == ParityClass::Zero) continue;
      bool odd = (a.grading()[i] == Parity::Odd) != (a.grading()[j] == Parity::Odd);
      if (p != (odd ? ParityClass::Odd : ParityClass::Even)) out.push_back({i, j, p});
    }
  }
  return out;
}

}  // namespace sshg
