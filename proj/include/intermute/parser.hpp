#pragma once

#include <string_view>

#include "intermute/arrow.hpp"
#include "intermute/formula.hpp"

namespace intermute {

// Both throw ParseError carrying the offending position.
Formula parse_formula(std::string_view text);
ArrowTerm parse_arrow(std::string_view text);

}  // namespace intermute
