#include "sshg/linear.hpp"

#include <algorithm>
#include <optional>

#include "sshg/error.hpp"

namespace sshg {

LinearForm split_linear(const Expression& e, const std::vector<GenId>& unknowns) {
  const Registry& reg = Registry::instance();
  std::vector<std::vector<Term>> coeff(unknowns.size());
  std::vector<Term> constant;
  auto index_of = [&](GenId g) -> int {
    auto it = std::find(unknowns.begin(), unknowns.end(), g);
    return it == unknowns.end() ? -1 : static_cast<int>(it - unknowns.begin());
  };
  for (const Term& t : e.terms()) {
    int which = -1;
    Term rest = t;
    for (const auto& [g, x] : t.key.even.factors()) {
      int j = index_of(g);
      if (j < 0) continue;
      if (which >= 0 || x != Fraction(1))
        throw SolveError("non-linear occurrence of " + reg.name(g));
      which = j;
      rest.key.even.set(g, Fraction(0));
    }
    const auto& ids = t.key.odd.ids();
    for (std::size_t k = 0; k < ids.size(); ++k) {
      int j = index_of(ids[k]);
      if (j < 0) continue;
      if (which >= 0) throw SolveError("non-linear occurrence of " + reg.name(ids[k]));
      which = j;
      std::vector<GenId> others = ids;
      others.erase(others.begin() + static_cast<std::ptrdiff_t>(k));
      rest.key.odd = GrassmannMonomial(std::move(others));
      // move the unknown past the generators to its right
      if ((ids.size() - 1 - k) % 2 == 1) rest.coeff = -rest.coeff;
    }
    if (which < 0)
      constant.push_back(t);
    else
      coeff[which].push_back(std::move(rest));
  }
  LinearForm f;
  for (auto& c : coeff) f.coefficients.push_back(Expression::from_terms(std::move(c)));
  f.constant = Expression::from_terms(std::move(constant));
  return f;
}

bool LinearSolution::consistent() const {
  return std::all_of(leftovers.begin(), leftovers.end(), [](const LeftoverRow& r) { return r.residual.is_zero(); });
}

const SolvedUnknown* LinearSolution::find(GenId x) const {
  for (const auto& s : solved)
    if (s.unknown == x) return &s;
  return nullptr;
}

RewriteSystem LinearSolution::rules() const {
  RewriteSystem rs;
  for (const auto& s : solved)
    if (!s.implicit) rs.add(s.unknown, s.value);
  return rs;
}

LinearSystem::LinearSystem(std::vector<GenId> unknowns) : unknowns_(std::move(unknowns)) {}

void LinearSystem::add(std::string label, Expression residual) {
  forms_.push_back(split_linear(residual, unknowns_));
  labels_.push_back(std::move(label));
  rows_.push_back(std::move(residual));
}

LinearSolution LinearSystem::solve(bool track_combinations) const {
  const std::size_t n = rows_.size();
  std::vector<Expression> r = rows_;
  std::vector<std::vector<Expression>> comb;
  if (track_combinations) {
    comb.assign(n, std::vector<Expression>(n));
    for (std::size_t i = 0; i < n; ++i) comb[i][i] = Expression(1);
  }
  std::vector<int> pivot_of_row(n, -1);  // index into `order`
  std::vector<std::size_t> order;        // unknown indices in elimination order
  std::vector<std::size_t> pivot_rows;
  std::vector<Expression> pivots;
  std::vector<bool> implicit;
  std::vector<bool> done(unknowns_.size(), false);

  auto coefficient = [&](std::size_t row, std::size_t u) {
    return split_linear(r[row], {unknowns_[u]}).coefficients[0];
  };

  struct Pick {
    std::size_t row = 0, u = 0;
    Expression c;
    std::optional<Expression> inv;
  };
  // smallest invertible pivot of the first unknown that has one
  auto pick_invertible = [&]() -> std::optional<Pick> {
    for (std::size_t u = 0; u < unknowns_.size(); ++u) {
      if (done[u]) continue;
      std::optional<Pick> best;
      for (std::size_t i = 0; i < n; ++i) {
        if (pivot_of_row[i] >= 0) continue;
        Expression c = coefficient(i, u);
        if (c.is_zero() || (best && c.size() >= best->c.size())) continue;
        auto inv = try_invert(c);
        if (inv) best = Pick{i, u, std::move(c), std::move(inv)};
      }
      if (best) return best;
    }
    return std::nullopt;
  };
  // smallest even pivot with a non-zero body, over all open unknowns
  auto pick_regular = [&]() -> std::optional<Pick> {
    std::optional<Pick> best;
    for (std::size_t u = 0; u < unknowns_.size(); ++u) {
      if (done[u]) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (pivot_of_row[i] >= 0) continue;
        Expression c = coefficient(i, u);
        if (c.is_zero() || c.parity() != ParityClass::Even || c.body().is_zero()) continue;
        if (!best || c.size() < best->c.size()) best = Pick{i, u, std::move(c), std::nullopt};
      }
    }
    return best;
  };

  while (true) {
    std::optional<Pick> pick = pick_invertible();
    if (!pick) pick = pick_regular();
    if (!pick) break;
    const Expression p = r[pick->row];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pick->row) continue;
      // fraction-free steps leave earlier pivot rows alone
      if (!pick->inv && pivot_of_row[j] >= 0) continue;
      Expression cj = coefficient(j, pick->u);
      if (cj.is_zero()) continue;
      if (pick->inv) {
        Expression f = cj * *pick->inv;
        r[j] -= f * p;
        if (track_combinations)
          for (std::size_t k = 0; k < n; ++k)
            if (!comb[pick->row][k].is_zero()) comb[j][k] -= f * comb[pick->row][k];
      } else {
        r[j] = pick->c * r[j] - cj * p;
        if (track_combinations)
          for (std::size_t k = 0; k < n; ++k) comb[j][k] = pick->c * comb[j][k] - cj * comb[pick->row][k];
      }
    }
    done[pick->u] = true;
    pivot_of_row[pick->row] = static_cast<int>(order.size());
    order.push_back(pick->u);
    pivot_rows.push_back(pick->row);
    pivots.push_back(pick->c);
    implicit.push_back(!pick->inv);
  }

  LinearSolution sol;
  for (std::size_t s = 0; s < order.size(); ++s) {
    std::size_t u = order[s];
    std::size_t row = pivot_rows[s];
    GenId x = unknowns_[u];
    Expression c = coefficient(row, u);
    Expression rest = r[row] - c * Expression::generator(x);
    SolvedUnknown su;
    su.unknown = x;
    su.pivot_row = row;
    su.pivot = pivots[s];
    su.implicit = implicit[s];
    // an implicit pivot row is c x + rest with c the (unchanged) pivot
    Expression c_inv = su.implicit ? Expression(1) : invert(c);
    su.value = -(c_inv * rest);
    if (track_combinations)
      for (std::size_t k = 0; k < n; ++k) su.combination.push_back(c_inv * comb[row][k]);
    sol.solved.push_back(std::move(su));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (pivot_of_row[i] >= 0) continue;
    LeftoverRow lr{labels_[i], r[i], {}};
    if (track_combinations) lr.combination = comb[i];
    sol.leftovers.push_back(std::move(lr));
  }
  for (std::size_t u = 0; u < unknowns_.size(); ++u) {
    if (done[u]) continue;
    sol.unsolved.push_back(unknowns_[u]);
    for (const auto& lr : sol.leftovers) {
      if (!lr.residual.contains(unknowns_[u])) continue;
      sol.diagnostics.push_back("no usable pivot for " + Registry::instance().name(unknowns_[u]) +
                                " in row " + lr.label);
    }
  }
  return sol;
}

}  // namespace sshg
