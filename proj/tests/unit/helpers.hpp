#pragma once

#include <doctest.h>

#include <string>

#include "sshg/text.hpp"

namespace sshg::testing {

inline Expression P(const std::string& s) { return parse_expression(s); }
inline Expression S(const std::string& name) { return Expression::symbol(name); }
inline GenId G(const std::string& name) { return Registry::instance().id(name); }

}  // namespace sshg::testing

namespace doctest {
template <>
struct StringMaker<sshg::Expression> {
  static String convert(const sshg::Expression& e) { return sshg::render_expression(e).c_str(); }
};
}  // namespace doctest
