#include "sshg/derivation.hpp"

#include "sshg/error.hpp"

namespace sshg {
namespace {

using OpPoly = std::map<std::pair<int, int>, mpq_class>;

OpPoly op_mul(const OpPoly& a, const OpPoly& b) {
  OpPoly out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
  for (auto it = out.begin(); it != out.end();) {
    if (sgn(it->second) == 0)
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

// d1^a d2^b of frame `from` as a polynomial in the operators of the other frame
OpPoly convert_operator(Frame from, int a, int b) {
  OpPoly first, second;
  if (from == Frame::TimeSpace) {
    first = {{{1, 0}, 1}, {{0, 1}, -1}};   // dt = d+ - d-
    second = {{{1, 0}, 1}, {{0, 1}, 1}};   // dx = d+ + d-
  } else {
    first = {{{1, 0}, mpq_class(1, 2)}, {{0, 1}, mpq_class(1, 2)}};    // d+ = (dt + dx)/2
    second = {{{1, 0}, mpq_class(-1, 2)}, {{0, 1}, mpq_class(1, 2)}};  // d- = (dx - dt)/2
  }
  OpPoly out = {{{0, 0}, 1}};
  for (int i = 0; i < a; ++i) out = op_mul(out, first);
  for (int i = 0; i < b; ++i) out = op_mul(out, second);
  return out;
}

Expression from_op_poly(GenId field, Frame frame, const OpPoly& p) {
  const Registry& reg = Registry::instance();
  std::vector<Term> raw;
  for (const auto& [k, c] : p) {
    Expression j = Expression::generator(reg.jet(field, frame, k.first, k.second));
    for (const Term& t : j.terms()) raw.push_back(Term{t.key, t.coeff * CycloScalar(c)});
  }
  return Expression::from_terms(std::move(raw));
}

Expression rational(const Fraction& f) { return Expression::rational(f.num(), f.den()); }

}  // namespace

std::string direction_name(Direction d) {
  switch (d) {
    case Direction::Plus: return "d+";
    case Direction::Minus: return "d-";
    case Direction::Time: return "dt";
    case Direction::Space: return "dx";
  }
  return "?";
}

Expression convert_jet(GenId field, Frame from, int a, int b, Frame to) {
  if (from == to || from == Frame::None) return Expression::generator(Registry::instance().jet(field, to, a, b));
  return from_op_poly(field, to, convert_operator(from, a, b));
}

Derivation::Derivation(Direction dir) : dir_(dir) {}

Derivation Derivation::partial(GenId q) {
  Derivation d;
  d.partial_ = true;
  d.target_ = q;
  return d;
}

Derivation& Derivation::set_image(GenId symbol, const Expression& image) {
  const Generator& g = Registry::instance().at(symbol);
  ParityClass p = image.parity();
  bool ok = p == ParityClass::Zero || (g.parity() == Parity::Odd ? p == ParityClass::Odd : p == ParityClass::Even);
  if (!ok) throw DerivationError("image of " + g.name + " has the wrong parity");
  overrides_[symbol] = image;
  return *this;
}

std::string Derivation::name() const {
  if (partial_) return "d/d" + Registry::instance().name(target_);
  return direction_name(dir_);
}

Expression Derivation::image(GenId symbol) const {
  if (auto it = overrides_.find(symbol); it != overrides_.end()) return it->second;
  const Registry& reg = Registry::instance();
  const Generator& g = reg.at(symbol);
  if (partial_) return symbol == target_ ? Expression(1) : Expression();
  if (g.constant) return Expression();
  if (g.field == kNoGen)
    throw DerivationError("no derivative rule for " + g.name + " and it is not a registered constant");
  Frame want = (dir_ == Direction::Plus || dir_ == Direction::Minus) ? Frame::LightCone : Frame::TimeSpace;
  bool first = dir_ == Direction::Plus || dir_ == Direction::Time;
  OpPoly op = g.frame == Frame::None || g.frame == want ? OpPoly{{{g.order_a, g.order_b}, 1}}
                                                        : convert_operator(g.frame, g.order_a, g.order_b);
  op = op_mul(op, first ? OpPoly{{{1, 0}, 1}} : OpPoly{{{0, 1}, 1}});
  return from_op_poly(g.field, want, op);
}

Expression derive(const Expression& e, const Derivation& d) {
  const Registry& reg = Registry::instance();
  std::map<GenId, Expression> images;
  auto image = [&](GenId g) -> const Expression& {
    auto it = images.find(g);
    if (it == images.end()) it = images.emplace(g, d.image(g)).first;
    return it->second;
  };
  // h^2 d(log h^2) / D, needed for r and D
  std::optional<Expression> dlog_h2;
  auto get_dlog = [&]() -> const Expression& {
    if (!dlog_h2) {
      Expression s;
      for (const auto& [g, w] : reg.h_squared().factors())
        s += rational(w) * image(reg.at(g).exponent_symbol);
      dlog_h2 = s.is_zero() ? s : Expression::h(Fraction(2)) * s * Expression::D(-1);
    }
    return *dlog_h2;
  };

  std::vector<Term> raw;
  auto append = [&raw](const Expression& x) {
    raw.insert(raw.end(), x.terms().begin(), x.terms().end());
  };

  for (const Term& t : e.terms()) {
    Expression whole = term_expression(t);
    for (const auto& [g, x] : t.key.even.factors()) {
      const Generator& gen = reg.at(g);
      if (gen.kind == GenKind::ExpBase) {
        if (gen.exponent_symbol == kNoGen) {
          if (!gen.constant) throw DerivationError("no derivative rule for " + gen.name);
          continue;
        }
        const Expression& dx = image(gen.exponent_symbol);
        if (!dx.is_zero()) append(whole * dx * rational(x));
      } else {
        const Expression& dg = image(g);
        if (dg.is_zero()) continue;
        Term lowered = t;
        lowered.key.even.set(g, x - Fraction(1));
        append(term_expression(lowered) * dg * rational(x));
      }
    }
    if (!t.key.ext.trivial()) {
      const Expression& dl = get_dlog();
      if (!dl.is_zero()) {
        Fraction k = Fraction(t.key.ext.r_power, 2) + Fraction(t.key.ext.d_power);
        append(whole * rational(k) * dl);
      }
    }
    const auto& odd = t.key.odd.ids();
    for (std::size_t k = 0; k < odd.size(); ++k) {
      const Expression& dtheta = image(odd[k]);
      if (dtheta.is_zero()) continue;
      Term prefix = t;
      prefix.key.odd = GrassmannMonomial(std::vector<GenId>(odd.begin(), odd.begin() + k));
      Term suffix{MonomialKey{}, CycloScalar(1)};
      suffix.key.odd = GrassmannMonomial(std::vector<GenId>(odd.begin() + k + 1, odd.end()));
      append(term_expression(prefix) * dtheta * term_expression(suffix));
    }
  }
  return Expression::from_terms(std::move(raw));
}

Expression left_partial(const Expression& e, GenId theta) {
  if (Registry::instance().at(theta).parity() != Parity::Odd)
    throw DerivationError("left_partial needs an odd generator");
  std::vector<Term> raw;
  for (const Term& t : e.terms()) {
    const auto& ids = t.key.odd.ids();
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (ids[k] != theta) continue;
      Term out = t;
      std::vector<GenId> rest = ids;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      out.key.odd = GrassmannMonomial(std::move(rest));
      if (k % 2 == 1) out.coeff = -out.coeff;
      raw.push_back(std::move(out));
    }
  }
  return Expression::from_terms(std::move(raw));
}

}  // namespace sshg
