#pragma once

#include <string>

#include "sshg/expression.hpp"

namespace sshg::model::detail {

// Parses model text after expanding the shorthands
//   PHIP = (phi1+phi2), PHIM = (phi1-phi2), PSIP/PSIM, PSIBP/PSIBM likewise,
//   and '@' -> the region digit when given.
Expression parse_model(std::string text, int region = -1);

}  // namespace sshg::model::detail
