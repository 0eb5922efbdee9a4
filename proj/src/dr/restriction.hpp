#pragma once

#include "dr/coordinate_ring.hpp"

namespace galoisdr {

/// phi_*: A(L1/K) -> A(L2/K), with phi_* f(tau) = phi(f(tau restricted
/// along phi)). Column i holds the coordinates of phi_* f_i.
struct RestrictionMap {
  CoordinateRingPtr source;
  CoordinateRingPtr dest;
  NFMatrix matrix;
};

/// Throws NotAnEmbedding if phi does not map L1 into L2 over K.
RestrictionMap restriction(const Embedding& phi, const CoordinateRingPtr& a1, const CoordinateRingPtr& a2);

/// second o first.
RestrictionMap compose(const RestrictionMap& second, const RestrictionMap& first);

/// Multiplicative, unital, and compatible with counit, antipode and
/// comultiplication.
bool is_hopf_homomorphism(const RestrictionMap& r);
bool is_injective(const RestrictionMap& r);

struct TowerReport {
  bool embedding_independent = true;
  bool composites_agree = true;
  bool injective = true;
};

/// A finite truncation of the absolute group: coordinate rings of an
/// increasing chain of Galois fields Q = L_0 ⊆ L_1 ⊆ ... inside one ambient,
/// and the restriction maps between them.
struct TruncatedAbsoluteGroup {
  AmbientPtr ambient;
  std::vector<GaloisSubextension> levels;
  std::vector<CoordinateRingPtr> rings;
  /// maps[i][j] for i < j, built from the inclusion L_i ⊆ L_j.
  std::vector<std::vector<std::optional<RestrictionMap>>> maps;
  TowerReport report;
};

/// Levels: the splitting fields of the successive prefixes of polys, each
/// step refined by the derived series of its relative group.
TruncatedAbsoluteGroup truncated_absolute_group(const std::vector<QPoly>& polys, int max_degree = kDefaultMaxDegree);

}  // namespace galoisdr
