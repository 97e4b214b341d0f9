#pragma once

#include <string>
#include <vector>

#include "sshg/verifier.hpp"

namespace sshg::verifier::detail {

// (i,j) label, 1-based
std::string entry_label(std::size_t i, std::size_t j);
std::string entry_label(const std::string& prefix, std::size_t i, std::size_t j);
// non-zero entries of m as labelled residuals
void add_matrix_residuals(ResidualReport& r, const SuperMatrix& m, const std::string& prefix = "");
// Pass when no residual is left, else Fail
void settle(ResidualReport& r);
std::vector<std::string> symbol_names(const std::set<GenId>& ids);

// dK - K a_left + a_right K
SuperMatrix defect_residual(const SuperMatrix& K, Direction dir, const SuperMatrix& a_left,
                            const SuperMatrix& a_right);
SuperMatrix lax_of(const Sources& src, model::Chirality ch, int p);

// d+g and d-g solved from both chirality residuals of a Type-I matrix
struct ChiralitySplit {
  RewriteSystem rules;  // d+g, d-g
  std::vector<Labelled> leftovers;
  std::vector<std::string> diagnostics;
};
ChiralitySplit solve_chirality_split(const Sources& src, const SuperMatrix& K, const model::TypeIDefect& d,
                                     const RewriteSystem& orientation);

}  // namespace sshg::verifier::detail
