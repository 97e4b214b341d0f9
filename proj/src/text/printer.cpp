#include "sshg/text.hpp"

namespace sshg {
namespace {

std::string power_suffix(const Fraction& e) {
  if (e == Fraction(1)) return "";
  if (e.is_integer() && e.num() > 0) return "^" + e.str();
  return "^(" + e.str() + ")";
}

const char* omega_name(int k) {
  switch (k) {
    case 1: return "omega";
    case 2: return "i";
    case 3: return "omega^3";
    default: return "";
  }
}

// "q*omega", "-i", "3/2"; empty factor list handled by the caller
std::string scalar_monomial(const mpq_class& q, int k, bool has_factors) {
  std::string sign = sgn(q) < 0 ? "-" : "";
  mpq_class a = abs(q);
  bool unit = a == 1;
  if (k == 0) {
    if (unit && has_factors) return sign;
    return sign + a.get_str();
  }
  if (unit) return sign + omega_name(k);
  return sign + a.get_str() + "*" + omega_name(k);
}

std::string linear_combination(const std::vector<std::pair<Fraction, std::string>>& items) {
  std::string out;
  for (const auto& [c, name] : items) {
    bool neg = c < Fraction(0);
    Fraction a = neg ? -c : c;
    std::string body = a == Fraction(1) ? name : a.str() + "*" + name;
    if (out.empty())
      out = (neg ? "-" : "") + body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out;
}

std::string render_term(const Term& t) {
  const Registry& reg = Registry::instance();
  std::vector<std::string> factors;
  std::vector<std::pair<Fraction, std::string>> exps;
  std::vector<std::string> rest;
  for (const auto& [g, e] : t.key.even.factors()) {
    const Generator& gen = reg.at(g);
    if (gen.kind == GenKind::ExpBase && gen.exponent_symbol != kNoGen)
      exps.emplace_back(e, reg.name(gen.exponent_symbol));
    else
      rest.push_back(gen.name + power_suffix(e));
  }
  if (!exps.empty()) factors.push_back("exp(" + linear_combination(exps) + ")");
  factors.insert(factors.end(), rest.begin(), rest.end());
  if (t.key.ext.r_power == 1) factors.push_back("r");
  if (t.key.ext.d_power != 0) factors.push_back("D" + power_suffix(Fraction(t.key.ext.d_power)));
  for (GenId g : t.key.odd.ids()) factors.push_back(reg.name(g));

  std::string coef;
  if (auto m = t.coeff.as_monomial())
    coef = scalar_monomial(m->q, m->k, !factors.empty());
  else
    coef = render_scalar(t.coeff);
  std::string out = coef;
  for (const auto& f : factors) {
    if (!out.empty() && out != "-") out += "*";
    out += f;
  }
  return out;
}

}  // namespace

std::string render_scalar(const CycloScalar& c) {
  if (c.is_zero()) return "0";
  if (auto m = c.as_monomial()) return scalar_monomial(m->q, m->k, false);
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (sgn(c[k]) == 0) continue;
    std::string part = scalar_monomial(c[k], k, false);
    if (out.empty())
      out = part;
    else if (part[0] == '-')
      out += " - " + part.substr(1);
    else
      out += " + " + part;
  }
  return "(" + out + ")";
}

std::string render_expression(const Expression& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const Term& t : e.terms()) {
    std::string s = render_term(t);
    if (out.empty())
      out = s;
    else if (s[0] == '-')
      out += " - " + s.substr(1);
    else
      out += " + " + s;
  }
  return out;
}

}  // namespace sshg
