#pragma once

#include <map>
#include <string>

#include "sshg/expression.hpp"

namespace sshg {

enum class Direction { Plus, Minus, Time, Space };

std::string direction_name(Direction d);

// Even derivation on the ring, fixed by its images of field and jet symbols.
// Jets map to the next jet in their frame; a jet of the other frame is first
// rewritten with d_t = d_+ - d_-, d_x = d_+ + d_-. Constants map to zero.
class Derivation {
 public:
  explicit Derivation(Direction dir);
  // d/dq: q -> 1, every other symbol -> 0 (exponentials and r, D still follow the chain rule)
  static Derivation partial(GenId q);

  // explicit image for one symbol; parity must match
  Derivation& set_image(GenId symbol, const Expression& image);

  Expression image(GenId symbol) const;
  std::string name() const;

 private:
  Derivation() = default;
  bool partial_ = false;
  Direction dir_ = Direction::Plus;
  GenId target_ = kNoGen;
  std::map<GenId, Expression> overrides_;
};

Expression derive(const Expression& e, const Derivation& d);

// Left derivative d/d(theta) for odd theta: removes theta at position k with sign (-1)^k.
Expression left_partial(const Expression& e, GenId theta);

// Jet of `field` in `frame` written over the other frame's jets (a sum with rational weights).
Expression convert_jet(GenId field, Frame from, int a, int b, Frame to);

}  // namespace sshg
