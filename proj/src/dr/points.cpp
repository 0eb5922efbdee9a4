#include "dr/points.hpp"

#include <algorithm>

namespace galoisdr {

namespace {

// Target of a product: the field generated by both targets.
FixedFieldPtr joint_target(const AlgebraPoint& x, const AlgebraPoint& y) {
  if (x.ring != y.ring) fail(ErrorCode::InvalidArgument, "points belong to different rings");
  if (is_subset(x.target->subgroup(), y.target->subgroup())) return x.target;
  if (is_subset(y.target->subgroup(), x.target->subgroup())) return y.target;
  return fixed_field(x.target->ambient(), intersect(x.target->subgroup(), y.target->subgroup()));
}

}  // namespace

std::vector<AlgebraPoint> points(const CoordinateRingPtr& a, const FixedFieldPtr& m) {
  const GaloisSubextension& e = a->extension();
  if (!m->ambient()->same_field(*e.ambient)) fail(ErrorCode::AmbientMismatch, "target field lives in another ambient");
  if (!is_subset(m->subgroup(), e.outer)) fail(ErrorCode::InvalidArgument, "target field does not contain the base field");
  // Candidates psi o ev_tau for every K-embedding psi of L, deduplicated.
  std::vector<std::vector<NFElement>> seen;
  std::size_t over_ambient = 0;
  std::vector<AlgebraPoint> out;
  for (int tau = 0; tau < a->dim(); ++tau) {
    for (int s = 0; s < e.quotient.order(); ++s) {
      std::vector<NFElement> images;
      for (const auto& f : a->basis()) images.push_back(a->act(s, f[static_cast<std::size_t>(tau)]));
      if (std::find(seen.begin(), seen.end(), images) != seen.end()) continue;
      seen.push_back(images);
      ++over_ambient;
      bool inside = std::all_of(images.begin(), images.end(), [&](const NFElement& v) { return m->contains(v); });
      if (inside) out.push_back(AlgebraPoint{a, m, std::move(images)});
    }
  }
  if (over_ambient != static_cast<std::size_t>(a->dim())) {
    fail(ErrorCode::Internal, "point count over the ambient differs from the group order");
  }
  return out;
}

AlgebraPoint galois_to_point(const CoordinateRingPtr& a, int sigma) {
  std::vector<NFElement> images;
  for (const auto& f : a->basis()) images.push_back(f[static_cast<std::size_t>(sigma)]);
  return AlgebraPoint{a, a->extension().top, std::move(images)};
}

AlgebraPoint counit_point(const CoordinateRingPtr& a) {
  return AlgebraPoint{a, a->extension().base, a->hopf().counit};
}

AlgebraPoint point_mul(const AlgebraPoint& x, const AlgebraPoint& y) {
  FixedFieldPtr target = joint_target(x, y);
  const NumberField& nf = x.ring->field();
  const HopfStructure& h = x.ring->hopf();
  std::size_t n = x.images.size();
  std::vector<NFElement> out;
  for (std::size_t k = 0; k < n; ++k) {
    NFElement acc = nf.zero();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (nf.is_zero(h.delta[k](i, j))) continue;
        acc = nf.add(acc, nf.mul(h.delta[k](i, j), nf.mul(x.images[i], y.images[j])));
      }
    }
    out.push_back(std::move(acc));
  }
  return AlgebraPoint{x.ring, target, std::move(out)};
}

AlgebraPoint point_inv(const AlgebraPoint& x) {
  const NumberField& nf = x.ring->field();
  const HopfStructure& h = x.ring->hopf();
  std::vector<NFElement> out;
  for (const auto& s : h.antipode) {
    NFElement acc = nf.zero();
    for (std::size_t i = 0; i < s.size(); ++i) acc = nf.add(acc, nf.mul(s[i], x.images[i]));
    out.push_back(std::move(acc));
  }
  return AlgebraPoint{x.ring, x.target, std::move(out)};
}

bool is_algebra_hom(const AlgebraPoint& x) {
  const NumberField& nf = x.ring->field();
  const HopfStructure& h = x.ring->hopf();
  std::size_t n = x.images.size();
  for (const auto& v : x.images) {
    if (!x.target->contains(v)) return false;
  }
  NFElement unit = nf.zero();
  for (std::size_t i = 0; i < n; ++i) unit = nf.add(unit, nf.mul(h.unit[i], x.images[i]));
  if (unit != nf.one()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      NFElement v = nf.zero();
      for (std::size_t k = 0; k < n; ++k) v = nf.add(v, nf.mul(h.mult[i][j][k], x.images[k]));
      if (v != nf.mul(x.images[i], x.images[j])) return false;
    }
  }
  return true;
}

AlgebraPoint transform_point(const AlgebraPoint& x, int ambient_sigma) {
  AlgebraPoint y = x;
  for (auto& v : y.images) v = x.ring->ambient().apply(ambient_sigma, v);
  return y;
}

bool conjugation_diagram_check(const CoordinateRingPtr& a, int phi, int sigma) {
  const FiniteGroup& g = a->group();
  AlgebraPoint left = transform_point(galois_to_point(a, sigma), a->extension().quotient.rep(phi));
  return left == galois_to_point(a, g.conj(phi, sigma));
}

}  // namespace galoisdr
