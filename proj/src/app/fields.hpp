#pragma once

#include <optional>

#include "galois/subfield.hpp"
#include "motives/motive.hpp"

namespace galoisdr {

/// The elements of G fixing every root of f in N: the stabilizer of f's
/// splitting field. Throws InvalidArgument if f does not split in N.
Subgroup splitting_subgroup(const AmbientGaloisField& n, const QPoly& f);

/// Stabilizer of the least root of f in N (roots ordered by coordinates),
/// i.e. the subgroup fixing Q(r). Throws InvalidArgument if f has no root.
Subgroup root_stabilizer(const AmbientGaloisField& n, const QPoly& f);

/// L/K from optional polynomial descriptions: L is the splitting field of
/// `field` (default N) and K = Q(r) for the least root r of `over`
/// (default Q). Throws InvalidArgument unless K lies in L.
GaloisSubextension select_extension(const AmbientPtr& n, const std::optional<QPoly>& field,
                                    const std::optional<QPoly>& over);

/// Spec Q[x]/(f) for squarefree f: one component per irreducible factor.
EtaleScheme scheme_of_polynomial(const AmbientPtr& n, const QPoly& f);

}  // namespace galoisdr
