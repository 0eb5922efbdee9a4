#pragma once

#include <utility>
#include <vector>

#include "exact/polynomial.hpp"

namespace galoisdr {

struct QFactorization {
  Rational unit;                               // leading coefficient of the input
  std::vector<std::pair<QPoly, int>> factors;  // monic irreducibles, canonical order
};

/// Factorization over Q: squarefree decomposition, then Zassenhaus (modular
/// factorization, Hensel lifting past a Mignotte-type bound, subset
/// recombination) on each squarefree part.
QFactorization factor_over_q(const QPoly& f);

/// Monic irreducible factors of a squarefree f, canonical order.
std::vector<QPoly> factor_squarefree_over_q(const QPoly& f);

bool is_irreducible_over_q(const QPoly& f);

/// Primitive integer multiple of f with positive leading coefficient.
ZPoly primitive_integer_part(const QPoly& f);

QPoly to_qpoly(const ZPoly& f);

/// Product of the factors raised to their multiplicities, times the unit.
QPoly expand(const QFactorization& fac);

}  // namespace galoisdr
