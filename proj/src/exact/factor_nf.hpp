#pragma once

#include <utility>
#include <vector>

#include "exact/number_field.hpp"

namespace galoisdr {

struct NFFactorization {
  NFElement unit;
  std::vector<std::pair<NFPoly, int>> factors;  // monic irreducibles over the field
};

/// Factorization over a number field by norm reduction: after the shift
/// x -> x - s*t (least s >= 0 making the norm squarefree) the norm is
/// factored over Q and each factor is recovered as a gcd over the field.
NFFactorization factor_over_nf(const NumberField& field, const NFPoly& f);

/// Monic irreducible factors of a squarefree f over the field.
std::vector<NFPoly> factor_squarefree_over_nf(const NumberField& field, const NFPoly& f);

/// Roots in the field of a rational polynomial, sorted lexicographically by
/// coordinates, without multiplicity.
std::vector<NFElement> roots_in_field(const NumberField& field, const QPoly& f);

/// Canonical order on factors: degree, then coefficient coordinates.
bool nf_poly_less(const NFPoly& a, const NFPoly& b);

}  // namespace galoisdr
