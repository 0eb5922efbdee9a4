#pragma once

#include "exact/polynomial.hpp"

namespace galoisdr {

/// Number of distinct real roots, by Sturm's theorem (sign changes of the
/// Sturm sequence at -infinity minus those at +infinity).
int count_real_roots(const QPoly& f);

}  // namespace galoisdr
