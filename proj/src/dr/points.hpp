#pragma once

#include "dr/coordinate_ring.hpp"

namespace galoisdr {

/// A K-algebra homomorphism A(L/K) -> M, given by the images of the basis.
struct AlgebraPoint {
  CoordinateRingPtr ring;
  FixedFieldPtr target;
  std::vector<NFElement> images;

  friend bool operator==(const AlgebraPoint& a, const AlgebraPoint& b) { return a.images == b.images; }
};

/// All K-algebra homomorphisms A -> M for a subfield M of the ambient
/// containing K, in canonical order (by coset index of the evaluation).
std::vector<AlgebraPoint> points(const CoordinateRingPtr& a, const FixedFieldPtr& m);

/// f -> f(sigma), a point over L.
AlgebraPoint galois_to_point(const CoordinateRingPtr& a, int sigma);
AlgebraPoint counit_point(const CoordinateRingPtr& a);

/// Convolution through the comultiplication. The product lands in the
/// field generated by both targets.
AlgebraPoint point_mul(const AlgebraPoint& x, const AlgebraPoint& y);
/// Precomposition with the antipode.
AlgebraPoint point_inv(const AlgebraPoint& x);

/// Unital, multiplicative on the structure constants, and valued in the
/// target field.
bool is_algebra_hom(const AlgebraPoint& x);

/// Applies an ambient automorphism to every image.
AlgebraPoint transform_point(const AlgebraPoint& x, int ambient_sigma);

/// phi o galois_to_point(sigma) = galois_to_point(phi sigma phi^-1), for
/// phi, sigma in the relative group.
bool conjugation_diagram_check(const CoordinateRingPtr& a, int phi, int sigma);

}  // namespace galoisdr
