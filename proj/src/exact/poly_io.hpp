#pragma once

#include <string>
#include <string_view>

#include "exact/polynomial.hpp"

namespace galoisdr {

/// Parses `x^3 - 2`, `2*x^4 + x - 3/2`, or the JSON form
/// `{"coeffs": ["-2","0","0","1"]}` (lowest degree first).
QPoly parse_polynomial(std::string_view text);

/// Human-readable form in the same syntax parse_polynomial accepts.
std::string format_polynomial(const QPoly& f);

}  // namespace galoisdr
