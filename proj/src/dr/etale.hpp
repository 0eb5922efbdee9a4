#pragma once

#include "dr/coordinate_ring.hpp"

namespace galoisdr {

/// One field factor of A(L/K): A e is a field of degree `degree` over K.
struct EtaleComponent {
  GroupFunction idempotent;
  /// Cosets where the idempotent is 1.
  std::vector<int> support;
  /// Rational minimal polynomial of the generic element on this factor.
  QPoly factor;
  int degree = 0;
};

/// Splits A into fields with the primitive idempotents cut out by the
/// factors of a generic element's minimal polynomial. Ordered by degree,
/// then support.
std::vector<EtaleComponent> etale_decomposition(const CoordinateRing& a);

}  // namespace galoisdr
