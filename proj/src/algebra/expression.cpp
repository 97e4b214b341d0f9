#include "sshg/expression.hpp"

#include <map>

#include "sshg/error.hpp"

namespace sshg {
namespace {

mpq_class power_of_two(std::int64_t k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return mpq_class(p);
  mpq_class q(mpz_class(1), p);
  q.canonicalize();
  return q;
}

mpz_class binomial(long n, long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

void check_domain(const Registry& reg, const EvenMonomial& m) {
  for (const auto& [g, e] : m.factors()) {
    const Generator& gen = reg.at(g);
    switch (gen.kind) {
      case GenKind::ExpBase:
        break;
      case GenKind::EvenPoly:
        if (!e.is_integer() || e.num() < 0)
          throw DomainError("exponent " + e.str() + " of " + gen.name +
                            " outside its domain (non-negative integers)");
        break;
      default:
        throw DomainError("generator " + gen.name + " cannot appear in an even monomial");
    }
  }
}

// Collects raw terms and produces the canonical form.
class Accumulator {
 public:
  Accumulator() : reg_(Registry::instance()) {}

  void add(MonomialKey key, CycloScalar c) {
    if (c.is_zero()) return;
    GenId two = reg_.two();
    Fraction e2 = key.even.exponent(two);
    if (!e2.is_zero() && (e2.num() < 0 || e2 >= Fraction(1))) {
      std::int64_t k = e2.floor();
      key.even.set(two, e2 - Fraction(k));
      c *= CycloScalar(power_of_two(k));
    }
    check_domain(reg_, key.even);
    if (key.ext.r_power < 0) throw DomainError("negative power of r");
    int n = key.ext.r_power / 2;
    key.ext.r_power %= 2;
    if (key.ext.d_power > 0) {
      n += key.ext.d_power;
      key.ext.d_power = 0;
    }
    if (n == 0) {
      insert(acc_, std::move(key), std::move(c));
      return;
    }
    expand_d(acc_, key, c, n);
  }

  void add_term(const Term& t) { insert(acc_, t.key, t.coeff); }

  Expression finish();

 private:
  using Map = std::map<MonomialKey, CycloScalar>;

  static void insert(Map& m, MonomialKey&& k, CycloScalar&& c) {
    auto it = m.lower_bound(k);
    if (it == m.end() || !(it->first == k))
      m.emplace_hint(it, std::move(k), std::move(c));
    else
      it->second += c;
  }
  static void insert(Map& m, const MonomialKey& k, const CycloScalar& c) {
    auto [it, fresh] = m.try_emplace(k, c);
    if (!fresh) it->second += c;
  }

  // key * c * (1 + h^2)^n
  void expand_d(Map& m, const MonomialKey& key, const CycloScalar& c, int n) const {
    const EvenMonomial& h2 = reg_.h_squared();
    EvenMonomial hp;
    for (int j = 0; j <= n; ++j) {
      MonomialKey k = key;
      k.even *= hp;
      insert(m, k, c * CycloScalar(mpq_class(binomial(n, j))));
      hp *= h2;
    }
  }

  bool divide_by_d(Map& num) const;

  const Registry& reg_;
  Map acc_;
};

bool Accumulator::divide_by_d(Map& num) const {
  const EvenMonomial& h2 = reg_.h_squared();
  GenId piv = reg_.h_pivot();
  Fraction w = h2.exponent(piv);
  // terms differing by integer powers of h^2 form one chain, a Laurent polynomial in h^2
  std::map<MonomialKey, std::map<std::int64_t, CycloScalar>> chains;
  for (const auto& [key, c] : num) {
    std::int64_t k = (key.even.exponent(piv) / w).floor();
    MonomialKey base = key;
    base.even *= h2.scaled(Fraction(-k));
    chains[base].emplace(k, c);
  }
  Map out;
  for (const auto& [base, poly] : chains) {
    std::int64_t lo = poly.begin()->first;
    std::int64_t hi = poly.rbegin()->first;
    if (lo == hi) return false;
    CycloScalar prev;
    for (std::int64_t k = lo; k < hi; ++k) {
      auto it = poly.find(k);
      CycloScalar q = it == poly.end() ? -prev : it->second - prev;
      if (!q.is_zero()) {
        MonomialKey key = base;
        key.even *= h2.scaled(Fraction(k));
        out.emplace(key, q);
      }
      prev = std::move(q);
    }
    if (!(poly.rbegin()->second - prev).is_zero()) return false;
  }
  num = std::move(out);
  return true;
}

Expression Accumulator::finish() {
  int n_max = 0;
  for (auto it = acc_.begin(); it != acc_.end();) {
    if (it->second.is_zero()) {
      it = acc_.erase(it);
    } else {
      n_max = std::max(n_max, -it->first.ext.d_power);
      ++it;
    }
  }
  std::vector<Term> out;
  if (n_max == 0) {
    out.reserve(acc_.size());
    for (auto& [k, c] : acc_) out.push_back(Term{k, std::move(c)});
  } else {
    Map num;
    for (auto& [key, c] : acc_) {
      MonomialKey k = key;
      int missing = n_max + key.ext.d_power;
      k.ext.d_power = 0;
      if (missing == 0)
        insert(num, std::move(k), std::move(c));
      else
        expand_d(num, k, c, missing);
    }
    for (auto it = num.begin(); it != num.end();) {
      if (it->second.is_zero())
        it = num.erase(it);
      else
        ++it;
    }
    int n = num.empty() ? 0 : n_max;
    while (n > 0 && divide_by_d(num)) --n;
    out.reserve(num.size());
    for (auto& [key, c] : num) {
      MonomialKey k = key;
      k.ext.d_power = -n;
      out.push_back(Term{std::move(k), std::move(c)});
    }
    // d_power is the last key component, so the order is unchanged
  }
  return Expression::from_canonical(std::move(out));
}

// Exact k-th root of a non-negative integer, if it exists.
std::optional<mpz_class> exact_root(const mpz_class& v, unsigned long k) {
  mpz_class r;
  if (mpz_root(r.get_mpz_t(), v.get_mpz_t(), k) == 0) return std::nullopt;
  return r;
}

}  // namespace

// from_terms must be cheap for already-canonical input coming out of finish();
// a canonical vector is recognised and stored directly.
Expression Expression::from_terms(std::vector<Term> raw) {
  bool canonical = true;
  for (std::size_t i = 0; i < raw.size() && canonical; ++i) {
    const Term& t = raw[i];
    if (t.coeff.is_zero() || t.key.ext.r_power > 1 || t.key.ext.d_power > 0) canonical = false;
    if (i > 0 && !(raw[i - 1].key < t.key)) canonical = false;
  }
  if (canonical) {
    bool has_d = false;
    GenId two = Registry::instance().two();
    for (const Term& t : raw) {
      if (t.key.ext.d_power < 0) has_d = true;
      Fraction e2 = t.key.even.exponent(two);
      if (e2.num() < 0 || e2 >= Fraction(1)) canonical = false;
    }
    if (canonical && !has_d) {
      const Registry& reg = Registry::instance();
      for (const Term& t : raw) check_domain(reg, t.key.even);
      return from_canonical(std::move(raw));
    }
  }
  Accumulator acc;
  for (Term& t : raw) acc.add(std::move(t.key), std::move(t.coeff));
  return acc.finish();
}

Expression Expression::from_canonical(std::vector<Term> terms) {
  Expression e;
  e.terms_ = std::move(terms);
  return e;
}

Expression::Expression(const CycloScalar& c) {
  if (!c.is_zero()) terms_.push_back(Term{MonomialKey{}, c});
}

Expression Expression::rational(long num, long den) {
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return Expression(CycloScalar(q));
}

Expression Expression::generator(GenId g, Fraction e) {
  const Generator& gen = Registry::instance().at(g);
  MonomialKey k;
  if (gen.kind == GenKind::Odd) {
    if (e != Fraction(1)) {
      if (e.is_zero()) return Expression(1);
      if (e.is_integer() && e.num() > 1) return Expression();
      throw DomainError("odd generator " + gen.name + " raised to " + e.str());
    }
    k.odd = GrassmannMonomial({g});
  } else if (gen.kind == GenKind::RootExt || gen.kind == GenKind::Denominator) {
    Fraction total = gen.kind == GenKind::RootExt ? e * Fraction(1, 2) : e;
    Fraction twice = total * Fraction(2);
    if (!twice.is_integer()) throw DomainError(gen.name + "^(" + e.str() + ") is not representable");
    std::int64_t fl = total.floor();
    k.ext.d_power = static_cast<int>(fl);
    k.ext.r_power = static_cast<int>(twice.num() - 2 * fl);
  } else {
    k.even = EvenMonomial::single(g, e);
  }
  return from_terms({Term{std::move(k), CycloScalar(1)}});
}

Expression Expression::symbol(std::string_view name) {
  return generator(Registry::instance().id(name));
}

Expression Expression::r() {
  MonomialKey k;
  k.ext.r_power = 1;
  return from_terms({Term{std::move(k), CycloScalar(1)}});
}

Expression Expression::D(int power) {
  MonomialKey k;
  k.ext.d_power = power;
  return from_terms({Term{std::move(k), CycloScalar(1)}});
}

Expression Expression::h(Fraction k) {
  MonomialKey key;
  key.even = Registry::instance().h_squared().scaled(k * Fraction(1, 2));
  return from_terms({Term{std::move(key), CycloScalar(1)}});
}

bool Expression::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].key == MonomialKey{});
}

std::optional<CycloScalar> Expression::as_scalar() const {
  if (terms_.empty()) return CycloScalar();
  if (is_constant()) return terms_[0].coeff;
  return std::nullopt;
}

ParityClass Expression::parity() const {
  if (terms_.empty()) return ParityClass::Zero;
  bool odd = terms_[0].key.odd.degree() % 2 == 1;
  for (const Term& t : terms_)
    if ((t.key.odd.degree() % 2 == 1) != odd) return ParityClass::Mixed;
  return odd ? ParityClass::Odd : ParityClass::Even;
}

// a subset of a canonical sum may still share a factor (1+h^2) with D
Expression Expression::body() const {
  std::vector<Term> out;
  for (const Term& t : terms_)
    if (t.key.odd.empty()) out.push_back(t);
  return from_terms(std::move(out));
}

Expression Expression::soul() const {
  std::vector<Term> out;
  for (const Term& t : terms_)
    if (!t.key.odd.empty()) out.push_back(t);
  return from_terms(std::move(out));
}

std::set<GenId> Expression::symbols() const {
  std::set<GenId> s;
  for (const Term& t : terms_) {
    for (const auto& f : t.key.even.factors()) s.insert(f.first);
    for (GenId g : t.key.odd.ids()) s.insert(g);
  }
  return s;
}

bool Expression::contains(GenId g) const {
  for (const Term& t : terms_) {
    if (!t.key.even.exponent(g).is_zero()) return true;
    for (GenId o : t.key.odd.ids())
      if (o == g) return true;
  }
  return false;
}

Expression Expression::operator-() const {
  Expression out = *this;
  for (Term& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Expression Expression::scaled(const CycloScalar& c) const {
  if (c.is_zero()) return Expression();
  Expression out = *this;
  for (Term& t : out.terms_) t.coeff *= c;
  return out;
}

Expression& Expression::operator+=(const Expression& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  Accumulator acc;
  for (const Term& t : terms_) acc.add_term(t);
  for (const Term& t : o.terms_) acc.add_term(t);
  return *this = acc.finish();
}

Expression& Expression::operator-=(const Expression& o) { return *this += -o; }

Expression& Expression::operator*=(const Expression& o) { return *this = *this * o; }

Expression operator*(const Expression& a, const Expression& b) {
  if (a.terms_.empty() || b.terms_.empty()) return Expression();
  Accumulator acc;
  GrassmannMonomial odd;
  for (const Term& ta : a.terms_) {
    for (const Term& tb : b.terms_) {
      int sign = GrassmannMonomial::multiply(ta.key.odd, tb.key.odd, odd);
      if (sign == 0) continue;
      MonomialKey k;
      k.odd = odd;
      k.even = ta.key.even * tb.key.even;
      k.ext.r_power = ta.key.ext.r_power + tb.key.ext.r_power;
      k.ext.d_power = ta.key.ext.d_power + tb.key.ext.d_power;
      CycloScalar c = ta.coeff * tb.coeff;
      if (sign < 0) c = -c;
      acc.add(std::move(k), std::move(c));
    }
  }
  return acc.finish();
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].key == b.terms_[i].key) || !(a.terms_[i].coeff == b.terms_[i].coeff))
      return false;
  }
  return true;
}

Expression normalize(const Expression& e) {
  std::vector<Term> raw = e.terms();
  Accumulator acc;
  for (Term& t : raw) acc.add(std::move(t.key), std::move(t.coeff));
  return acc.finish();
}

Expression term_expression(const Term& t) { return Expression::from_terms({t}); }

Expression scalar_power(const CycloScalar& c, Fraction k) {
  if (c.is_zero()) {
    if (k > Fraction(0)) return Expression();
    throw DomainError("zero raised to non-positive power " + k.str());
  }
  if (k.is_integer()) {
    std::int64_t n = k.num();
    CycloScalar base = n < 0 ? c.inverse() : c;
    CycloScalar acc(1);
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) acc *= base;
    return Expression(acc);
  }
  auto mono = c.as_monomial();
  if (!mono) throw DomainError("non-integer power of a multi-component scalar " + c.debug());
  mpq_class q = mono->q;
  long phase = mono->k;
  if (sgn(q) < 0) {
    q = -q;
    phase += 4;
  }
  phase %= 8;
  if (phase > 4) phase -= 8;  // principal branch: argument in (-pi, pi]
  Fraction ph = Fraction(phase) * k;
  if (!ph.is_integer()) throw DomainError("phase power w^(" + ph.str() + ") is not representable");

  // q = 2^v * u with u odd over odd
  mpz_class num = q.get_num(), den = q.get_den();
  std::int64_t v = 0;
  while (mpz_even_p(num.get_mpz_t())) {
    num /= 2;
    ++v;
  }
  while (mpz_even_p(den.get_mpz_t())) {
    den /= 2;
    --v;
  }
  unsigned long n = static_cast<unsigned long>(k.den());
  auto rn = exact_root(num, n);
  auto rd = exact_root(den, n);
  if (!rn || !rd) throw DomainError("power " + k.str() + " of " + q.get_str() + " is not representable");
  mpq_class root(*rn, *rd);
  root.canonicalize();
  CycloScalar u(root);
  Expression out = scalar_power(u, Fraction(k.num()));
  out *= Expression(CycloScalar::omega_power(ph.num()));
  if (v != 0) out *= Expression::generator(Registry::instance().two(), Fraction(v) * k);
  return out;
}

std::optional<Expression> try_invert(const Expression& e) {
  Expression b = e.body();
  if (b.is_zero()) return std::nullopt;
  const Registry& reg = Registry::instance();
  std::optional<Expression> b_inv;
  for (int k = 0; k <= 4 && !b_inv; ++k) {
    Expression t = k == 0 ? b : b * Expression::D(-k);
    if (t.size() != 1) continue;
    const Term& u = t.terms()[0];
    bool unit = true;
    for (const auto& [g, x] : u.key.even.factors())
      if (reg.at(g).kind != GenKind::ExpBase) unit = false;
    if (!unit) break;
    MonomialKey inv;
    inv.even = u.key.even.inverse();
    inv.ext.r_power = u.key.ext.r_power;
    inv.ext.d_power = -u.key.ext.d_power - u.key.ext.r_power;
    Expression ui = Expression::from_terms({Term{std::move(inv), u.coeff.inverse()}});
    b_inv = k == 0 ? ui : ui * Expression::D(-k);
  }
  if (!b_inv) return std::nullopt;
  Expression n = e.soul();
  if (n.is_zero()) return b_inv;
  // e^-1 = b^-1 * sum_j (-n b^-1)^j, finite because n is nilpotent
  Expression step = -(n * *b_inv);
  Expression power(1);
  Expression sum(1);
  for (int j = 0; j < 64; ++j) {
    power *= step;
    if (power.is_zero()) return *b_inv * sum;
    sum += power;
  }
  throw DomainError("nilpotent series did not terminate");
}

Expression invert(const Expression& e) {
  auto inv = try_invert(e);
  if (!inv) throw DomainError("expression is not invertible in the ring");
  return *inv;
}

Expression pow(const Expression& e, Fraction k) {
  if (e.is_zero()) {
    if (k > Fraction(0)) return Expression();
    throw DomainError("zero raised to non-positive power " + k.str());
  }
  if (k.is_integer()) {
    std::int64_t n = k.num();
    Expression base = n < 0 ? invert(e) : e;
    if (n < 0) n = -n;
    Expression acc(1);
    while (n > 0) {
      if (n & 1) acc *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return acc;
  }
  if (e.size() != 1 || !e.terms()[0].key.odd.empty())
    throw DomainError("power " + k.str() + " of a sum or odd element is not representable");
  const Term& t = e.terms()[0];
  MonomialKey key;
  key.even = t.key.even.scaled(k);
  Fraction total = (Fraction(t.key.ext.r_power, 2) + Fraction(t.key.ext.d_power)) * k;
  Fraction twice = total * Fraction(2);
  if (!twice.is_integer())
    throw DomainError("power " + k.str() + " of r or D is not representable");
  std::int64_t fl = total.floor();
  key.ext.d_power = static_cast<int>(fl);
  key.ext.r_power = static_cast<int>(twice.num() - 2 * fl);
  return Expression::from_terms({Term{std::move(key), CycloScalar(1)}}) * scalar_power(t.coeff, k);
}

}  // namespace sshg
