#pragma once

#include <string>
#include <vector>

#include "sshg/derivation.hpp"
#include "sshg/rewrite.hpp"

namespace sshg {

// Square matrix over the graded ring with a parity per index.
class SuperMatrix {
 public:
  SuperMatrix() = default;
  explicit SuperMatrix(std::vector<Parity> grading);

  static SuperMatrix identity(std::vector<Parity> grading);
  // the sl(2,1) grading (even, even, odd)
  static std::vector<Parity> sl21();

  std::size_t dim() const { return grading_.size(); }
  const std::vector<Parity>& grading() const { return grading_; }
  const Expression& operator()(std::size_t i, std::size_t j) const { return e_[i * dim() + j]; }
  Expression& at(std::size_t i, std::size_t j) { return e_[i * dim() + j]; }
  void set(std::size_t i, std::size_t j, Expression v) { e_[i * dim() + j] = std::move(v); }

  bool is_zero() const;
  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

 private:
  std::vector<Parity> grading_;
  std::vector<Expression> e_;
};

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
// s * A, s applied on the left of each entry
SuperMatrix operator*(const Expression& s, const SuperMatrix& a);

// A + s*B
SuperMatrix mat_linear(const SuperMatrix& a, const SuperMatrix& b, const Expression& s);
SuperMatrix mat_derive(const SuperMatrix& a, const Derivation& d);
SuperMatrix commutator(const SuperMatrix& a, const SuperMatrix& b);
SuperMatrix mat_substitute(const SuperMatrix& a, const RewriteSystem& rs);

template <typename F>
SuperMatrix map_entries(const SuperMatrix& a, F&& f) {
  SuperMatrix out(a.grading());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) out.set(i, j, f(a(i, j)));
  return out;
}

struct ParityViolation {
  std::size_t row = 0, col = 0;  // 0-based
  ParityClass found = ParityClass::Zero;
};

// Entry (i,j) must be zero or have parity grading[i] + grading[j].
std::vector<ParityViolation> check_parity_pattern(const SuperMatrix& a);

}  // namespace sshg
