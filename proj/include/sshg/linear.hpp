#pragma once

#include <string>
#include <vector>

#include "sshg/rewrite.hpp"

namespace sshg {

// residual = sum_j coefficients[j] * x_j + constant, each unknown to the right of its coefficient
struct LinearForm {
  std::vector<Expression> coefficients;
  Expression constant;
};

// Throws SolveError when a term holds two unknowns or an unknown to a power other than 1.
LinearForm split_linear(const Expression& e, const std::vector<GenId>& unknowns);

struct SolvedUnknown {
  GenId unknown = kNoGen;
  // x itself, or pivot * x when `implicit`; free of every explicitly solved unknown
  Expression value;
  bool implicit = false;     // the pivot is a non-zero-divisor but not a unit
  std::size_t pivot_row = 0;  // index of the equation used as pivot
  Expression pivot;          // coefficient of the unknown in that row when it was eliminated
  // x - value = sum_i combination[i] * equation_i (left multiplication); empty unless tracked
  std::vector<Expression> combination;
};

struct LeftoverRow {
  std::string label;
  Expression residual;
  std::vector<Expression> combination;
};

struct LinearSolution {
  std::vector<SolvedUnknown> solved;  // elimination order
  std::vector<LeftoverRow> leftovers;  // rows not used as pivots, fully reduced
  std::vector<GenId> unsolved;        // unknowns without an invertible pivot
  std::vector<std::string> diagnostics;

  bool consistent() const;  // every leftover row reduced to zero
  const SolvedUnknown* find(GenId x) const;
  // explicit solutions only
  RewriteSystem rules() const;
};

// Gaussian elimination over the ring. Invertible pivots (a unit times a power of
// D plus a nilpotent part) are preferred. Failing those, an even pivot with a
// non-zero body is eliminated fraction-free: other open rows are multiplied by it,
// which keeps leftover rows equivalent since such a pivot is not a zero divisor.
// Unknowns may be odd or even.
class LinearSystem {
 public:
  explicit LinearSystem(std::vector<GenId> unknowns);

  void add(std::string label, Expression residual);
  const std::vector<GenId>& unknowns() const { return unknowns_; }
  std::size_t rows() const { return rows_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const LinearForm& form(std::size_t i) const { return forms_[i]; }

  LinearSolution solve(bool track_combinations = false) const;

 private:
  std::vector<GenId> unknowns_;
  std::vector<std::string> labels_;
  std::vector<Expression> rows_;
  std::vector<LinearForm> forms_;
};

}  // namespace sshg
