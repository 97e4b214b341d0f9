#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sshg/monomial.hpp"

namespace sshg {

enum class GenKind { ExpBase, EvenPoly, Odd, RootExt, Denominator };
enum class Parity { Even, Odd };

// Frame of a jet symbol: light-cone (d+, d-) or laboratory (dt, dx).
enum class Frame { None, LightCone, TimeSpace };

struct Generator {
  GenId id = kNoGen;
  std::string name;
  GenKind kind = GenKind::EvenPoly;
  // annihilated by every coordinate derivation
  bool constant = false;
  // ExpBase: the generator X with this == exp(X); kNoGen for plain positive constants
  GenId exponent_symbol = kNoGen;
  // EvenPoly: the generator exp(this), if registered
  GenId exp_partner = kNoGen;
  // field and jet symbols: the underlying field (a field is its own base)
  GenId field = kNoGen;
  Frame frame = Frame::None;
  int order_a = 0;  // number of d+ (or dt)
  int order_b = 0;  // number of d- (or dx)

  Parity parity() const { return kind == GenKind::Odd ? Parity::Odd : Parity::Even; }
  bool is_field() const { return field == id; }
  bool is_jet() const { return frame != Frame::None; }
  int order() const { return order_a + order_b; }
};

// Process-wide, immutable generator table. Built on first use.
class Registry {
 public:
  static constexpr int kMaxJetOrder = 2;

  static const Registry& instance();

  const Generator& at(GenId id) const { return gens_.at(id); }
  const std::vector<Generator>& all() const { return gens_; }
  std::optional<GenId> find(std::string_view name) const;
  // throws DomainError for unknown names
  GenId id(std::string_view name) const;
  const std::string& name(GenId id) const { return gens_.at(id).name; }

  GenId two() const { return two_; }
  GenId r() const { return r_; }
  GenId D() const { return d_; }

  // h^2 = exp(phi1) exp(-phi2) exp(-2 tau), the radicand r^2 = 1 + h^2
  const EvenMonomial& h_squared() const { return h2_; }
  // first generator of h^2 and its exponent; used to pick chain representatives
  GenId h_pivot() const { return h_pivot_; }

  // jet of `field` of order (a, b) in `frame`; order (0,0) gives the field itself
  GenId jet(GenId field, Frame frame, int a, int b) const;
  std::optional<GenId> find_jet(GenId field, Frame frame, int a, int b) const;

  // the exp(X) partner of an even symbol; throws if absent
  GenId exp_of(GenId symbol) const;

 private:
  Registry();
  GenId add(Generator g);
  void add_field(const std::string& name, bool odd, bool with_exp);

  std::vector<Generator> gens_;
  std::unordered_map<std::string, GenId> by_name_;
  std::unordered_map<std::uint64_t, GenId> jets_;
  GenId two_ = kNoGen, r_ = kNoGen, d_ = kNoGen, h_pivot_ = kNoGen;
  EvenMonomial h2_;
};

// Name of the jet symbol, e.g. ("phi0", LightCone, 1, 1) -> "dpmphi0".
std::string jet_name(const std::string& field, Frame frame, int a, int b);

}  // namespace sshg
