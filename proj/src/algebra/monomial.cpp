#include "sshg/monomial.hpp"

#include <algorithm>

namespace sshg {

EvenMonomial EvenMonomial::single(GenId g, Fraction e) {
  EvenMonomial m;
  if (!e.is_zero()) m.f_.emplace_back(g, e);
  return m;
}

Fraction EvenMonomial::exponent(GenId g) const {
  auto it = std::lower_bound(f_.begin(), f_.end(), g,
                             [](const Factor& f, GenId id) { return f.first < id; });
  if (it != f_.end() && it->first == g) return it->second;
  return Fraction(0);
}

void EvenMonomial::set(GenId g, Fraction e) {
  auto it = std::lower_bound(f_.begin(), f_.end(), g,
                             [](const Factor& f, GenId id) { return f.first < id; });
  if (it != f_.end() && it->first == g) {
    if (e.is_zero())
      f_.erase(it);
    else
      it->second = e;
  } else if (!e.is_zero()) {
    f_.insert(it, {g, e});
  }
}

EvenMonomial& EvenMonomial::operator*=(const EvenMonomial& o) {
  if (o.f_.empty()) return *this;
  std::vector<Factor> out;
  out.reserve(f_.size() + o.f_.size());
  auto a = f_.begin();
  auto b = o.f_.begin();
  while (a != f_.end() || b != o.f_.end()) {
    if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == f_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Fraction e = a->second + b->second;
      if (!e.is_zero()) out.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  f_ = std::move(out);
  return *this;
}

EvenMonomial EvenMonomial::scaled(Fraction k) const {
  EvenMonomial m;
  if (k.is_zero()) return m;
  m.f_.reserve(f_.size());
  for (const auto& [g, e] : f_) m.f_.emplace_back(g, e * k);
  return m;
}

int GrassmannMonomial::multiply(const GrassmannMonomial& a, const GrassmannMonomial& b,
                                GrassmannMonomial& out) {
  std::vector<GenId> merged;
  merged.reserve(a.ids_.size() + b.ids_.size());
  // each element of b passes over the remaining elements of a
  std::size_t i = 0, j = 0;
  int sign = 1;
  while (i < a.ids_.size() || j < b.ids_.size()) {
    if (j == b.ids_.size() || (i < a.ids_.size() && a.ids_[i] < b.ids_[j])) {
      merged.push_back(a.ids_[i++]);
    } else if (i == a.ids_.size() || b.ids_[j] < a.ids_[i]) {
      if ((a.ids_.size() - i) % 2 == 1) sign = -sign;
      merged.push_back(b.ids_[j++]);
    } else {
      return 0;
    }
  }
  out.ids_ = std::move(merged);
  return sign;
}

std::strong_ordering operator<=>(const GrassmannMonomial& a, const GrassmannMonomial& b) {
  if (auto c = a.ids_.size() <=> b.ids_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.ids_.begin(), a.ids_.end(), b.ids_.begin(),
                                                b.ids_.end());
}

std::strong_ordering operator<=>(const MonomialKey& a, const MonomialKey& b) {
  if (auto c = a.odd <=> b.odd; c != 0) return c;
  if (auto c = a.even <=> b.even; c != 0) return c;
  return a.ext <=> b.ext;
}

}  // namespace sshg
