#pragma once

#include <json.hpp>
#include <optional>

#include "dr/coordinate_ring.hpp"
#include "frobenius/frobenius.hpp"

namespace galoisdr {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1.0";

json rational_json(const Rational& q);
json element_json(const NFElement& x);

json split_report(const AmbientGaloisField& n);
json group_report(const AmbientGaloisField& n);
json coordinate_ring_report(const CoordinateRingPtr& a);
json points_report(const CoordinateRingPtr& a);
/// Hopf axioms, etale decomposition and point counts; with `tower`, also
/// the truncated absolute group of the ambient's polynomials.
json dr_report(const CoordinateRingPtr& a, bool tower, int max_degree);
/// Every embedding of the source's top field into the target ambient, with
/// the restriction map each induces into A(target/Q).
json restrict_report(const GaloisSubextension& source, const AmbientPtr& target);

json frobenius_record(const FrobeniusData& d, const std::vector<int>& residue_degrees);
json frobenius_report(const CoordinateRingPtr& a, std::uint64_t p);
json frobenius_sweep_report(const CoordinateRingPtr& a, std::uint64_t lo, std::uint64_t hi);
json frobenius_infinity_report(const CoordinateRingPtr& a);

/// Motive of Spec Q[x]/(scheme) over the ambient: dimension, orbits,
/// sections per subfield, de Rham dimension, Gamma and comodule checks.
json motive_report(const AmbientPtr& n, const QPoly& scheme);

}  // namespace galoisdr
