#include "dr/restriction.hpp"

#include <algorithm>

namespace galoisdr {

namespace {

// Moves a base-field coefficient of the source ambient into the target
// ambient. Across ambients the base field is Q.
NFElement carry(const CoordinateRing& from, const CoordinateRing& to, const NFElement& x) {
  if (from.ambient().same_field(to.ambient())) return x;
  if (!from.field().is_rational(x)) fail(ErrorCode::AmbientMismatch, "base field coefficient is not rational");
  return to.field().from_rational(x.coords[0]);
}

std::vector<GroupFunction> images(const RestrictionMap& r) {
  std::vector<GroupFunction> out;
  for (std::size_t i = 0; i < r.matrix.cols(); ++i) out.push_back(r.dest->combine(r.matrix.col(i)));
  return out;
}

}  // namespace

RestrictionMap restriction(const Embedding& phi, const CoordinateRingPtr& a1, const CoordinateRingPtr& a2) {
  const GaloisSubextension& e1 = a1->extension();
  const GaloisSubextension& e2 = a2->extension();
  if (!phi.target->same_field(*e2.ambient)) fail(ErrorCode::AmbientMismatch, "embedding targets another ambient");
  if (e1.ambient->same_field(*e2.ambient)) {
    if (e1.outer != e2.outer) fail(ErrorCode::InvalidArgument, "restriction needs a common base field");
  } else if (e1.base->degree() != 1 || e2.base->degree() != 1) {
    fail(ErrorCode::InvalidArgument, "restriction across ambients needs base field Q");
  }
  if (!e2.top->contains(phi.image)) fail(ErrorCode::NotAnEmbedding, "embedding does not land in the target field");

  const NumberField& nf2 = a2->field();
  std::size_t n1 = static_cast<std::size_t>(a1->dim());
  std::size_t n2 = static_cast<std::size_t>(a2->dim());
  std::vector<std::size_t> restricted(n2);
  for (std::size_t tau = 0; tau < n2; ++tau) {
    restricted[tau] = static_cast<std::size_t>(restrict_automorphism(e2.quotient.rep(static_cast<int>(tau)), phi, e1));
  }
  RestrictionMap r{a1, a2, NFMatrix(n2, n1, nf2.zero())};
  for (std::size_t i = 0; i < n1; ++i) {
    GroupFunction f;
    for (std::size_t tau = 0; tau < n2; ++tau) f.push_back(apply_embedding(phi, a1->basis()[i][restricted[tau]]));
    auto c = a2->decompose_in_base(f);
    for (std::size_t k = 0; k < n2; ++k) r.matrix(k, i) = std::move(c[k]);
  }
  return r;
}

RestrictionMap compose(const RestrictionMap& second, const RestrictionMap& first) {
  if (first.dest != second.source) fail(ErrorCode::InvalidArgument, "restriction maps do not compose");
  NFMatrix lifted(first.matrix.rows(), first.matrix.cols(), second.dest->field().zero());
  for (std::size_t r = 0; r < lifted.rows(); ++r) {
    for (std::size_t c = 0; c < lifted.cols(); ++c) lifted(r, c) = carry(*first.dest, *second.dest, first.matrix(r, c));
  }
  return RestrictionMap{first.source, second.dest, mat_mul(second.dest->field(), second.matrix, lifted)};
}

bool is_hopf_homomorphism(const RestrictionMap& r) {
  const CoordinateRing& a1 = *r.source;
  const CoordinateRing& a2 = *r.dest;
  const NumberField& nf = a2.field();
  const HopfStructure& h1 = a1.hopf();
  const FiniteGroup& g2 = a2.group();
  std::size_t n1 = static_cast<std::size_t>(a1.dim());
  std::size_t n2 = static_cast<std::size_t>(a2.dim());
  auto img = images(r);
  auto image_of = [&](const std::vector<NFElement>& coeffs) {
    GroupFunction f = a2.constant(nf.zero());
    for (std::size_t k = 0; k < n1; ++k) {
      NFElement c = carry(a1, a2, coeffs[k]);
      if (nf.is_zero(c)) continue;
      for (std::size_t t = 0; t < n2; ++t) f[t] = nf.add(f[t], nf.mul(c, img[k][t]));
    }
    return f;
  };
  if (image_of(h1.unit) != a2.constant(nf.one())) return false;
  for (std::size_t i = 0; i < n1; ++i) {
    if (img[i][static_cast<std::size_t>(g2.identity())] != carry(a1, a2, h1.counit[i])) return false;
    GroupFunction s = image_of(h1.antipode[i]);
    for (std::size_t t = 0; t < n2; ++t) {
      if (s[t] != img[i][static_cast<std::size_t>(g2.inv(static_cast<int>(t)))]) return false;
    }
    for (std::size_t j = i; j < n1; ++j) {
      if (image_of(h1.mult[i][j]) != a2.product(img[i], img[j])) return false;
    }
    // (R (x) R) Delta(f_i) evaluated at (sigma, tau) is R(f_i)(sigma tau)
    for (std::size_t s1 = 0; s1 < n2; ++s1) {
      for (std::size_t t = 0; t < n2; ++t) {
        NFElement v = nf.zero();
        for (std::size_t a = 0; a < n1; ++a) {
          for (std::size_t b = 0; b < n1; ++b) {
            NFElement c = carry(a1, a2, h1.delta[i](a, b));
            if (nf.is_zero(c)) continue;
            v = nf.add(v, nf.mul(c, nf.mul(img[a][s1], img[b][t])));
          }
        }
        if (v != img[i][static_cast<std::size_t>(g2.mul(static_cast<int>(s1), static_cast<int>(t)))]) return false;
      }
    }
  }
  return true;
}

bool is_injective(const RestrictionMap& r) {
  return rank(r.dest->field(), r.matrix) == r.matrix.cols();
}

namespace {

Subgroup commutator_with(const FiniteGroup& g, const Subgroup& d, const Subgroup& floor) {
  std::vector<int> gens = floor.members;
  for (int a : d.members) {
    for (int b : d.members) gens.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return generate(g, gens);
}

}  // namespace

TruncatedAbsoluteGroup truncated_absolute_group(const std::vector<QPoly>& polys, int max_degree) {
  TruncatedAbsoluteGroup t;
  t.ambient = polys.empty() ? rational_ambient() : splitting_field(polys, max_degree);
  const AmbientGaloisField& n = *t.ambient;
  const FiniteGroup& g = n.group();

  std::vector<Subgroup> chain{whole_group(g)};
  Subgroup prev = whole_group(g);
  for (const auto& f : polys) {
    QPoly h = normalize_input_polynomial(f);
    auto it = std::find(n.polys().begin(), n.polys().end(), h);
    int idx = static_cast<int>(it - n.polys().begin());
    Subgroup next;
    for (int s : prev.members) {
      const auto& perm = n.root_permutation(s, idx);
      bool fixes = true;
      for (std::size_t i = 0; i < perm.size(); ++i) fixes = fixes && perm[i] == static_cast<int>(i);
      if (fixes) next.members.push_back(s);
    }
    // Derived series of prev/next, lifted; a perfect quotient jumps to next.
    Subgroup d = prev;
    while (d != next) {
      Subgroup c = commutator_with(g, d, next);
      if (c == d) c = next;
      chain.push_back(c);
      d = c;
    }
    prev = next;
  }
  for (const auto& h : chain) {
    t.levels.push_back(make_subextension(t.ambient, h, whole_group(g)));
    t.rings.push_back(build_coordinate_ring(t.levels.back()));
  }
  std::size_t m = t.levels.size();
  t.maps.assign(m, std::vector<std::optional<RestrictionMap>>(m));
  for (std::size_t i = 0; i < m; ++i) {
    auto embs = embeddings(t.levels[i], t.ambient);
    for (std::size_t j = i + 1; j < m; ++j) {
      for (const auto& phi : embs) {
        RestrictionMap r = restriction(phi, t.rings[i], t.rings[j]);
        if (!t.maps[i][j]) {
          t.maps[i][j] = std::move(r);
        } else if (!(r.matrix == t.maps[i][j]->matrix)) {
          t.report.embedding_independent = false;
        }
      }
      if (!is_injective(*t.maps[i][j])) t.report.injective = false;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        if (!(compose(*t.maps[j][k], *t.maps[i][j]).matrix == t.maps[i][k]->matrix)) t.report.composites_agree = false;
      }
    }
  }
  return t;
}

}  // namespace galoisdr
