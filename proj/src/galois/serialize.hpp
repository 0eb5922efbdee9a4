#pragma once

#include <json.hpp>

#include "galois/ambient.hpp"

namespace galoisdr {

nlohmann::json rational_vector_to_json(const std::vector<Rational>& v);
std::vector<Rational> rational_vector_from_json(const nlohmann::json& j);

/// {degree, modulus, polys, roots, generator, autos, table}; rationals as
/// strings, coefficient lists in ascending degree.
nlohmann::json ambient_to_json(const AmbientGaloisField& n);
/// Rebuilds and fully revalidates an ambient. Any defect raises CorruptCache.
AmbientPtr ambient_from_json(const nlohmann::json& j);

}  // namespace galoisdr
