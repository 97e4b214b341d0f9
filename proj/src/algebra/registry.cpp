#include "sshg/registry.hpp"

#include "sshg/error.hpp"

namespace sshg {
namespace {

std::uint64_t jet_key(GenId field, Frame frame, int a, int b) {
  return (static_cast<std::uint64_t>(field) << 32) | (static_cast<std::uint64_t>(frame) << 16) |
         (static_cast<std::uint64_t>(a) << 8) | static_cast<std::uint64_t>(b);
}

// Base fields in Grassmann order (odd) and declaration order (even).
const char* const kEvenFields[] = {"phi0", "phi1", "phi2", "Lambda"};
const char* const kOddFields[] = {"g1",   "g2",   "f1",    "ft1",   "psi0",
                                  "psi1", "psi2", "psib0", "psib1", "psib2"};
const char* const kConstants[] = {"lambda", "sigma", "sigma1", "sigma2", "m", "c", "c1", "c2"};

}  // namespace

std::string jet_name(const std::string& field, Frame frame, int a, int b) {
  if (frame == Frame::None) return field;
  std::string s = "d";
  s.append(a, frame == Frame::LightCone ? 'p' : 't');
  s.append(b, frame == Frame::LightCone ? 'm' : 'x');
  return s + field;
}

const Registry& Registry::instance() {
  static const Registry reg;
  return reg;
}

GenId Registry::add(Generator g) {
  if (by_name_.count(g.name)) throw DomainError("duplicate generator " + g.name);
  g.id = static_cast<GenId>(gens_.size());
  by_name_.emplace(g.name, g.id);
  gens_.push_back(g);
  return g.id;
}

void Registry::add_field(const std::string& name, bool odd, bool with_exp) {
  Generator f;
  f.name = name;
  f.kind = odd ? GenKind::Odd : GenKind::EvenPoly;
  GenId id = add(f);
  gens_[id].field = id;
  if (with_exp) {
    Generator e;
    e.name = "exp(" + name + ")";
    e.kind = GenKind::ExpBase;
    e.exponent_symbol = id;
    GenId eid = add(e);
    gens_[id].exp_partner = eid;
  }
}

Registry::Registry() {
  Generator two;
  two.name = "2";
  two.kind = GenKind::ExpBase;
  two.constant = true;
  two_ = add(two);

  for (const char* c : kConstants) {
    Generator g;
    g.name = c;
    g.kind = GenKind::ExpBase;
    g.constant = true;
    add(g);
  }

  // tau: constant even symbol with exp partner; kappa: scale unknown
  Generator tau;
  tau.name = "tau";
  tau.kind = GenKind::EvenPoly;
  tau.constant = true;
  GenId tau_id = add(tau);
  Generator etau;
  etau.name = "exp(tau)";
  etau.kind = GenKind::ExpBase;
  etau.constant = true;
  etau.exponent_symbol = tau_id;
  gens_[tau_id].exp_partner = add(etau);

  Generator kappa;
  kappa.name = "kappa";
  kappa.kind = GenKind::EvenPoly;
  kappa.constant = true;
  add(kappa);

  for (const char* f : kEvenFields) add_field(f, false, true);
  for (const char* f : kOddFields) add_field(f, true, false);

  std::vector<GenId> fields;
  for (const char* f : kEvenFields) fields.push_back(by_name_.at(f));
  for (const char* f : kOddFields) fields.push_back(by_name_.at(f));
  for (Frame frame : {Frame::LightCone, Frame::TimeSpace}) {
    for (GenId fid : fields) {
      for (int total = 1; total <= kMaxJetOrder; ++total) {
        for (int a = total; a >= 0; --a) {
          int b = total - a;
          Generator j;
          j.name = jet_name(gens_[fid].name, frame, a, b);
          j.kind = gens_[fid].kind;
          j.field = fid;
          j.frame = frame;
          j.order_a = a;
          j.order_b = b;
          GenId jid = add(j);
          jets_.emplace(jet_key(fid, frame, a, b), jid);
        }
      }
    }
  }

  Generator r;
  r.name = "r";
  r.kind = GenKind::RootExt;
  r_ = add(r);
  Generator d;
  d.name = "D";
  d.kind = GenKind::Denominator;
  d_ = add(d);

  h2_.set(exp_of(id("phi1")), Fraction(1));
  h2_.set(exp_of(id("phi2")), Fraction(-1));
  h2_.set(exp_of(tau_id), Fraction(-2));
  h_pivot_ = h2_.factors().front().first;
}

std::optional<GenId> Registry::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

GenId Registry::id(std::string_view name) const {
  auto g = find(name);
  if (!g) throw DomainError("unknown symbol '" + std::string(name) + "'");
  return *g;
}

std::optional<GenId> Registry::find_jet(GenId field, Frame frame, int a, int b) const {
  if (a == 0 && b == 0) return field;
  auto it = jets_.find(jet_key(field, frame, a, b));
  if (it == jets_.end()) return std::nullopt;
  return it->second;
}

GenId Registry::jet(GenId field, Frame frame, int a, int b) const {
  auto j = find_jet(field, frame, a, b);
  if (!j)
    throw DerivationError("jet of order " + std::to_string(a + b) + " of " + name(field) +
                          " is not registered (maximum order " + std::to_string(kMaxJetOrder) +
                          ")");
  return *j;
}

GenId Registry::exp_of(GenId symbol) const {
  GenId e = gens_.at(symbol).exp_partner;
  if (e == kNoGen) throw DomainError("symbol " + name(symbol) + " has no exponential");
  return e;
}

}  // namespace sshg
