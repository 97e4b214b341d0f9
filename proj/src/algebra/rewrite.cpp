#include "sshg/rewrite.hpp"

#include "sshg/derivation.hpp"
#include "sshg/error.hpp"

namespace sshg {
namespace {

Expression d_power_expression(Fraction q) {
  Fraction twice = q * Fraction(2);
  if (!twice.is_integer()) throw SubstitutionError("D^(" + q.str() + ") is not representable");
  std::int64_t fl = q.floor();
  MonomialKey k;
  k.ext.d_power = static_cast<int>(fl);
  k.ext.r_power = static_cast<int>(twice.num() - 2 * fl);
  return Expression::from_terms({Term{std::move(k), CycloScalar(1)}});
}

Expression monomial_expression(const EvenMonomial& m) {
  MonomialKey k;
  k.even = m;
  return Expression::from_terms({Term{std::move(k), CycloScalar(1)}});
}

void check_parity(GenId source, const Expression& image) {
  const Generator& g = Registry::instance().at(source);
  ParityClass p = image.parity();
  if (p == ParityClass::Zero) return;
  bool ok = g.parity() == Parity::Odd ? p == ParityClass::Odd : p == ParityClass::Even;
  if (!ok) throw SubstitutionError("rule for " + g.name + " has an image of the wrong parity");
}

}  // namespace

mpq_class binomial_rational(Fraction c, int j) {
  mpq_class out = 1;
  mpq_class cq{mpz_class(static_cast<long>(c.num())), mpz_class(static_cast<long>(c.den()))};
  cq.canonicalize();
  for (int i = 0; i < j; ++i) {
    out *= (cq - i);
    out /= (i + 1);
  }
  return out;
}

ExpImage ExpImage::from_expression(const Expression& image) {
  const Registry& reg = Registry::instance();
  if (image.parity() != ParityClass::Even)
    throw SubstitutionError("image of an exponential generator must be a non-zero even element");
  Expression b = image.body();
  for (int k = 0; k <= 4; ++k) {
    Expression t = k == 0 ? b : b * Expression::D(-k);
    if (t.size() != 1) continue;
    const Term& u = t.terms()[0];
    auto mono = u.coeff.as_monomial();
    if (!mono || mono->k != 0 || sgn(mono->q) <= 0)
      throw SubstitutionError("image of an exponential generator needs a positive rational scale");
    for (const auto& [g, x] : u.key.even.factors())
      if (reg.at(g).kind != GenKind::ExpBase)
        throw SubstitutionError("image of an exponential generator contains " + reg.name(g) +
                                " outside an exponential");
    ExpImage out;
    out.scale = mono->q;
    out.monomial = u.key.even;
    out.d_power = Fraction(u.key.ext.r_power, 2) + Fraction(u.key.ext.d_power) + Fraction(k);
    out.soul = invert(b) * image.soul();
    return out;
  }
  throw SubstitutionError("image of an exponential generator is not a unit of the ring");
}

ExpImage ExpImage::exp_of(const Expression& exponent) {
  const Registry& reg = Registry::instance();
  ParityClass p = exponent.parity();
  if (p != ParityClass::Even && p != ParityClass::Zero)
    throw SubstitutionError("exponent must be even");
  ExpImage out;
  const Expression body = exponent.body();
  for (const Term& t : body.terms()) {
    auto mono = t.coeff.as_monomial();
    const auto& f = t.key.even.factors();
    bool linear = mono && mono->k == 0 && t.key.ext.trivial() && f.size() == 1 &&
                  f[0].second == Fraction(1) && reg.at(f[0].first).exp_partner != kNoGen;
    if (!linear) {
      if (f.empty() && t.key.ext.trivial())
        throw SubstitutionError("exp of a non-zero constant is not representable");
      throw SubstitutionError("non-linear-in-fields exponent is not representable");
    }
    mpz_class num = mono->q.get_num(), den = mono->q.get_den();
    if (!num.fits_slong_p() || !den.fits_slong_p()) throw SubstitutionError("exponent coefficient too large");
    out.monomial *= EvenMonomial::single(reg.at(f[0].first).exp_partner, Fraction(num.get_si(), den.get_si()));
  }
  // exp(N) - 1 = N + N^2/2 + ...
  Expression n = exponent.soul();
  Expression power(1), series;
  mpq_class fact = 1;
  for (int j = 1; j < 64; ++j) {
    power *= n;
    if (power.is_zero()) break;
    fact *= j;
    mpq_class inv(mpz_class(1), fact.get_num());
    series += power.scaled(CycloScalar(inv));
  }
  out.soul = series;
  return out;
}

Expression ExpImage::power(Fraction c) const {
  if (c.is_zero()) return Expression(1);
  Expression out = scalar_power(CycloScalar(scale), c);
  out *= monomial_expression(monomial.scaled(c));
  Fraction dc = d_power * c;
  if (!dc.is_zero()) out *= d_power_expression(dc);
  if (!soul.is_zero()) {
    Expression series(1), sp(1);
    for (int j = 1; j < 64; ++j) {
      sp *= soul;
      if (sp.is_zero()) break;
      mpq_class b = binomial_rational(c, j);
      if (sgn(b) != 0) series += sp.scaled(CycloScalar(b));
    }
    out *= series;
  }
  return out;
}

RewriteSystem& RewriteSystem::add(GenId source, const Expression& image) {
  const Generator& g = Registry::instance().at(source);
  if (index_.count(source)) throw SubstitutionError("duplicate rule for " + g.name);
  Rule rule;
  rule.source = source;
  if (g.kind == GenKind::ExpBase) {
    rule.exp_image = ExpImage::from_expression(image);
    rule.image = image;
  } else if (g.kind == GenKind::EvenPoly || g.kind == GenKind::Odd) {
    check_parity(source, image);
    rule.image = image;
  } else {
    throw SubstitutionError("cannot rewrite " + g.name);
  }
  index_[source] = rules_.size();
  rules_.push_back(std::move(rule));
  return *this;
}

RewriteSystem& RewriteSystem::add_exp(GenId exp_base, const ExpImage& image) {
  const Generator& g = Registry::instance().at(exp_base);
  if (g.kind != GenKind::ExpBase) throw SubstitutionError(g.name + " is not an exponential generator");
  if (index_.count(exp_base)) throw SubstitutionError("duplicate rule for " + g.name);
  Rule rule;
  rule.source = exp_base;
  rule.exp_image = image;
  rule.image = image.expression();
  index_[exp_base] = rules_.size();
  rules_.push_back(std::move(rule));
  return *this;
}

RewriteSystem& RewriteSystem::declare_free(GenId symbol) {
  free_.insert(symbol);
  return *this;
}

RewriteSystem& RewriteSystem::merge(const RewriteSystem& other) {
  for (const Rule& r : other.rules_) {
    if (index_.count(r.source))
      throw SubstitutionError("duplicate rule for " + Registry::instance().name(r.source));
    index_[r.source] = rules_.size();
    rules_.push_back(r);
  }
  free_.insert(other.free_.begin(), other.free_.end());
  return *this;
}

const RewriteSystem::Rule* RewriteSystem::find(GenId source) const {
  auto it = index_.find(source);
  return it == index_.end() ? nullptr : &rules_[it->second];
}

std::set<GenId> RewriteSystem::rewritten() const {
  const Registry& reg = Registry::instance();
  std::set<GenId> s;
  for (const Rule& r : rules_) {
    s.insert(r.source);
    GenId partner = reg.at(r.source).exp_partner;
    if (partner != kNoGen) s.insert(partner);
  }
  return s;
}

void RewriteSystem::check_terminating() const {
  const Registry& reg = Registry::instance();
  std::set<GenId> s = rewritten();
  for (GenId f : free_)
    if (s.count(f)) throw SubstitutionError("free symbol " + reg.name(f) + " is rewritten");
  for (const Rule& r : rules_) {
    for (GenId g : r.image.symbols()) {
      if (s.count(g))
        throw SubstitutionError("rewritten symbol " + reg.name(g) + " reappears in the image of " +
                                reg.name(r.source));
    }
  }
}

bool RewriteSystem::is_terminating() const {
  try {
    check_terminating();
    return true;
  } catch (const SubstitutionError&) {
    return false;
  }
}

namespace {

class Substituter {
 public:
  explicit Substituter(const RewriteSystem& rs) : rs_(rs), reg_(Registry::instance()) {
    for (const auto& [g, w] : reg_.h_squared().factors()) {
      if (affects(g)) h_affected_ = true;
    }
  }

  Expression apply(const Expression& e) {
    std::vector<Term> raw;
    for (const Term& t : e.terms()) {
      if (!touches(t)) {
        raw.push_back(t);
        continue;
      }
      Expression prod = image_of_term(t);
      raw.insert(raw.end(), prod.terms().begin(), prod.terms().end());
    }
    return Expression::from_terms(std::move(raw));
  }

 private:
  bool affects(GenId g) {
    if (rs_.find(g)) return true;
    const Generator& gen = reg_.at(g);
    return gen.kind == GenKind::ExpBase && gen.exponent_symbol != kNoGen && rs_.find(gen.exponent_symbol);
  }

  bool touches(const Term& t) {
    if (h_affected_ && !t.key.ext.trivial()) return true;
    for (const auto& f : t.key.even.factors())
      if (affects(f.first)) return true;
    for (GenId g : t.key.odd.ids())
      if (rs_.find(g)) return true;
    return false;
  }

  const ExpImage* exp_image(GenId g) {
    if (const auto* rule = rs_.find(g)) return &*rule->exp_image;
    auto it = derived_.find(g);
    if (it == derived_.end()) {
      const auto* rule = rs_.find(reg_.at(g).exponent_symbol);
      it = derived_.emplace(g, ExpImage::exp_of(rule->image)).first;
    }
    return &it->second;
  }

  const Expression& even_power(GenId g, Fraction x) {
    auto key = std::make_pair(g, x);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Expression v;
    const Generator& gen = reg_.at(g);
    if (!affects(g))
      v = Expression::generator(g, x);
    else if (gen.kind == GenKind::ExpBase)
      v = exp_image(g)->power(x);
    else
      v = pow(rs_.find(g)->image, x);
    return memo_.emplace(key, std::move(v)).first->second;
  }

  Expression extension_image(const ExtensionFactor& ext) {
    MonomialKey k;
    k.ext = ext;
    Expression plain = Expression::from_terms({Term{k, CycloScalar(1)}});
    if (!h_affected_) return plain;
    Expression h2(1);
    for (const auto& [g, w] : reg_.h_squared().factors()) h2 *= even_power(g, w);
    if (h2 == Expression::h(Fraction(2))) return plain;
    if (h2 == Expression(1)) {
      // symmetric point h = 1: D -> 2, r -> 2^(1/2)
      Fraction two_exp = Fraction(ext.r_power, 2) + Fraction(ext.d_power);
      return Expression::generator(reg_.two(), two_exp);
    }
    throw SubstitutionError("substitution changes h^2; r and D cannot be transported");
  }

  Expression image_of_term(const Term& t) {
    Expression prod(t.coeff);
    for (const auto& [g, x] : t.key.even.factors()) prod *= even_power(g, x);
    if (!t.key.ext.trivial()) prod *= extension_image(t.key.ext);
    for (GenId g : t.key.odd.ids()) {
      if (const auto* rule = rs_.find(g))
        prod *= rule->image;
      else
        prod *= Expression::generator(g);
    }
    return prod;
  }

  const RewriteSystem& rs_;
  const Registry& reg_;
  bool h_affected_ = false;
  std::map<std::pair<GenId, Fraction>, Expression> memo_;
  std::map<GenId, ExpImage> derived_;
};

RewriteSystem frame_rules(Frame from) {
  const Registry& reg = Registry::instance();
  Frame to = from == Frame::TimeSpace ? Frame::LightCone : Frame::TimeSpace;
  RewriteSystem rs;
  for (const Generator& g : reg.all()) {
    if (g.frame != from) continue;
    rs.add(g.id, convert_jet(g.field, from, g.order_a, g.order_b, to));
  }
  return rs;
}

}  // namespace

Expression substitute(const Expression& e, const RewriteSystem& rs) {
  if (rs.empty() || e.is_zero()) return e;
  Substituter s(rs);
  return s.apply(e);
}

RewriteSystem rename_fields(const std::vector<std::pair<GenId, GenId>>& pairs) {
  const Registry& reg = Registry::instance();
  RewriteSystem rs;
  for (const auto& [from, to] : pairs) {
    const Generator& a = reg.at(from);
    const Generator& b = reg.at(to);
    if (!a.is_field() || !b.is_field() || a.kind != b.kind)
      throw SubstitutionError("rename needs two fields of the same kind: " + a.name + ", " + b.name);
    rs.add(from, Expression::generator(to));
    if (a.exp_partner != kNoGen && b.exp_partner != kNoGen) {
      ExpImage img;
      img.monomial = EvenMonomial::single(b.exp_partner, Fraction(1));
      rs.add_exp(a.exp_partner, img);
    }
    for (Frame frame : {Frame::LightCone, Frame::TimeSpace}) {
      for (int total = 1; total <= Registry::kMaxJetOrder; ++total) {
        for (int i = 0; i <= total; ++i) {
          rs.add(reg.jet(from, frame, i, total - i), Expression::generator(reg.jet(to, frame, i, total - i)));
        }
      }
    }
  }
  return rs;
}

Expression to_light_cone(const Expression& e) {
  static const RewriteSystem rules = frame_rules(Frame::TimeSpace);
  return substitute(e, rules);
}

Expression to_time_space(const Expression& e) {
  static const RewriteSystem rules = frame_rules(Frame::LightCone);
  return substitute(e, rules);
}

}  // namespace sshg
