#include "galois/serialize.hpp"

namespace galoisdr {

using nlohmann::json;

json rational_vector_to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

std::vector<Rational> rational_vector_from_json(const json& j) {
  std::vector<Rational> v;
  for (const auto& s : j) v.push_back(parse_rational(s.get<std::string>()));
  return v;
}

json ambient_to_json(const AmbientGaloisField& n) {
  json out;
  out["degree"] = n.degree();
  out["modulus"] = rational_vector_to_json(n.field().modulus().coeffs());
  json polys = json::array(), roots = json::array();
  for (std::size_t i = 0; i < n.polys().size(); ++i) {
    polys.push_back(rational_vector_to_json(n.polys()[i].coeffs()));
    json list = json::array();
    for (const auto& r : n.roots()[i]) list.push_back(rational_vector_to_json(r.coords));
    roots.push_back(std::move(list));
  }
  out["polys"] = std::move(polys);
  out["roots"] = std::move(roots);
  json gen = json::array();
  for (const auto& t : n.generator_terms()) {
    gen.push_back({{"poly", t.poly}, {"root", t.root}, {"coeff", to_string(t.coeff)}});
  }
  out["generator"] = std::move(gen);
  json autos = json::array();
  for (const auto& a : n.autos()) autos.push_back(rational_vector_to_json(a.coords));
  out["autos"] = std::move(autos);
  out["table"] = n.group().table();
  return out;
}

AmbientPtr ambient_from_json(const json& j) {
  try {
    QPoly modulus(rational_vector_from_json(j.at("modulus")));
    std::vector<QPoly> polys;
    for (const auto& p : j.at("polys")) polys.emplace_back(rational_vector_from_json(p));
    std::vector<std::vector<NFElement>> roots;
    for (const auto& list : j.at("roots")) {
      std::vector<NFElement> rs;
      for (const auto& r : list) rs.push_back(NFElement{rational_vector_from_json(r)});
      roots.push_back(std::move(rs));
    }
    std::vector<GeneratorTerm> terms;
    for (const auto& t : j.at("generator")) {
      terms.push_back(GeneratorTerm{t.at("poly").get<int>(), t.at("root").get<int>(),
                                    parse_rational(t.at("coeff").get<std::string>())});
    }
    std::vector<NFElement> autos;
    for (const auto& a : j.at("autos")) autos.push_back(NFElement{rational_vector_from_json(a)});
    if (autos.empty()) fail(ErrorCode::CorruptCache, "ambient field: no automorphisms stored");
    AmbientPtr n = AmbientGaloisField::assemble(std::move(modulus), std::move(polys), std::move(roots),
                                                std::move(terms), std::move(autos), true);
    if (j.at("degree").get<int>() != n->degree() ||
        j.at("table").get<std::vector<std::vector<int>>>() != n->group().table()) {
      fail(ErrorCode::CorruptCache, "ambient field: stored table or degree disagrees with the data");
    }
    return n;
  } catch (const GaloisError& e) {
    if (e.code() == ErrorCode::CorruptCache) throw;
    fail(ErrorCode::CorruptCache, std::string("ambient field: ") + e.what());
  } catch (const json::exception& e) {
    fail(ErrorCode::CorruptCache, std::string("ambient field: malformed JSON: ") + e.what());
  }
}

}  // namespace galoisdr
