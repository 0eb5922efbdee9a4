#include "galois/subfield.hpp"

#include "exact/factor_nf.hpp"

namespace galoisdr {

namespace {

const RationalField kQ;

std::vector<QVector> fixed_subspace(const AmbientGaloisField& n, const Subgroup& h) {
  std::size_t d = static_cast<std::size_t>(n.degree());
  std::vector<int> gens = generators(n.group(), h);
  if (gens.empty()) {
    std::vector<QVector> all;
    for (std::size_t i = 0; i < d; ++i) {
      QVector v(d, Rational(0));
      v[i] = 1;
      all.push_back(std::move(v));
    }
    return all;
  }
  QMatrix stacked(d * gens.size(), d, Rational(0));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const QMatrix& m = n.auto_matrix(gens[g]);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) stacked(g * d + r, c) = m(r, c) - (r == c ? 1 : 0);
    }
  }
  return kernel(kQ, stacked);
}

}  // namespace

FixedField::FixedField(AmbientPtr ambient, Subgroup subgroup)
    : ambient_(std::move(ambient)), subgroup_(std::move(subgroup)), echelon_(kQ, static_cast<std::size_t>(ambient_->degree())) {
  const NumberField& f = ambient_->field();
  if (!is_subgroup(ambient_->group(), subgroup_.members)) fail(ErrorCode::InvalidArgument, "not a subgroup");
  for (const auto& v : fixed_subspace(*ambient_, subgroup_)) echelon_.add(v);
  for (const auto& row : echelon_.rows()) basis_.push_back(NFElement{row});
  std::size_t k = basis_.size();
  if (static_cast<int>(k) * subgroup_.order() != ambient_->degree()) {
    fail(ErrorCode::Internal, "fixed field dimension differs from the index");
  }

  // Primitive element: a basis vector if one works, else sum of c^i b_i.
  std::vector<NFElement> candidates = basis_;
  for (long c = 2; c < 2 + 64; ++c) {
    NFElement s = f.zero();
    Rational pw(1);
    for (const auto& b : basis_) {
      s = f.add(s, f.scale(b, pw));
      pw *= c;
    }
    candidates.push_back(std::move(s));
  }
  bool found = false;
  for (const auto& cand : candidates) {
    QPoly m = f.minimal_polynomial(cand);
    if (static_cast<std::size_t>(m.degree()) == k) {
      primitive_ = cand;
      minpoly_ = std::move(m);
      found = true;
      break;
    }
  }
  if (!found) fail(ErrorCode::Internal, "no primitive element for the fixed field");

  QMatrix powers(k, k, Rational(0));
  NFElement p = f.one();
  for (std::size_t j = 0; j < k; ++j) {
    QVector c = *coordinates(p);
    for (std::size_t i = 0; i < k; ++i) powers(i, j) = c[i];
    p = f.mul(p, primitive_);
  }
  auto inv = inverse(kQ, powers);
  if (!inv) fail(ErrorCode::Internal, "powers of the primitive element are dependent");
  to_power_ = std::move(*inv);
}

bool FixedField::contains(const NFElement& x) const { return echelon_.contains(x.coords); }

std::optional<QVector> FixedField::coordinates(const NFElement& x) const { return echelon_.coordinates(x.coords); }

NFElement FixedField::from_coordinates(const QVector& c) const { return NFElement{echelon_.combine(c)}; }

QPoly FixedField::as_polynomial(const NFElement& x) const {
  auto c = coordinates(x);
  if (!c) fail(ErrorCode::InvalidArgument, "element lies outside the subfield");
  return QPoly(mat_vec(kQ, to_power_, *c));
}

Subgroup FixedField::stabilizer() const {
  Subgroup s;
  for (int g = 0; g < ambient_->group().order(); ++g) {
    if (ambient_->apply(g, primitive_) == primitive_) s.members.push_back(g);
  }
  return s;
}

FixedFieldPtr fixed_field(const AmbientPtr& ambient, const Subgroup& h) {
  return std::make_shared<const FixedField>(ambient, h);
}

GaloisSubextension make_subextension(const AmbientPtr& ambient, const Subgroup& inner, const Subgroup& outer) {
  const FiniteGroup& g = ambient->group();
  if (!is_subgroup(g, inner.members) || !is_subgroup(g, outer.members)) {
    fail(ErrorCode::InvalidArgument, "subextension needs two subgroups");
  }
  if (!is_normal_in(g, inner, outer)) {
    fail(ErrorCode::InvalidArgument, "inner subgroup is not normal in the outer one; L/K is not Galois");
  }
  return GaloisSubextension{ambient, inner, outer, QuotientGroup(g, inner, outer), fixed_field(ambient, inner),
                            fixed_field(ambient, outer)};
}

GaloisSubextension full_extension(const AmbientPtr& ambient) {
  return make_subextension(ambient, trivial_subgroup(ambient->group()), whole_group(ambient->group()));
}

Embedding make_embedding(const FixedFieldPtr& source, const AmbientPtr& target, NFElement image) {
  const NumberField& f = target->field();
  if (image.coords.size() != static_cast<std::size_t>(f.degree()) ||
      !f.is_zero(f.eval(source->minimal_polynomial(), image))) {
    fail(ErrorCode::NotAnEmbedding, "image is not a root of the primitive minimal polynomial");
  }
  return Embedding{source, target, std::move(image)};
}

Embedding inclusion(const FixedFieldPtr& source) { return Embedding{source, source->ambient(), source->primitive()}; }

NFElement apply_embedding(const Embedding& phi, const NFElement& x) {
  return phi.target->field().eval(phi.source->as_polynomial(x), phi.image);
}

Embedding compose(const Embedding& outer, const Embedding& inner) {
  if (!outer.source->contains(inner.image)) {
    fail(ErrorCode::NotAnEmbedding, "image of the inner embedding leaves the outer source");
  }
  return make_embedding(inner.source, outer.target, apply_embedding(outer, inner.image));
}

std::vector<Embedding> embeddings(const GaloisSubextension& l1, const AmbientPtr& target) {
  std::vector<Embedding> out;
  if (target->same_field(*l1.ambient)) {
    for (int r : l1.coset_reps()) {
      out.push_back(Embedding{l1.top, target, l1.ambient->apply(r, l1.top->primitive())});
    }
    return out;
  }
  if (l1.base->degree() != 1) {
    fail(ErrorCode::InvalidArgument, "embeddings into another ambient need base field Q");
  }
  for (auto& r : roots_in_field(target->field(), l1.top->minimal_polynomial())) {
    out.push_back(Embedding{l1.top, target, std::move(r)});
  }
  if (out.empty()) fail(ErrorCode::NoEmbedding, "primitive minimal polynomial has no root in the target");
  return out;
}

int restrict_automorphism(int tau, const Embedding& phi, const GaloisSubextension& l1) {
  if (phi.source->subgroup() != l1.inner || !phi.source->ambient()->same_field(*l1.ambient)) {
    fail(ErrorCode::InvalidArgument, "embedding source differs from the extension's top field");
  }
  if (phi.target->same_field(*l1.ambient)) {
    for (const auto& b : l1.base->basis()) {
      if (apply_embedding(phi, b) != b) fail(ErrorCode::NotAnEmbedding, "embedding does not fix the base field");
    }
  } else if (l1.base->degree() != 1) {
    fail(ErrorCode::InvalidArgument, "restriction across ambients needs base field Q");
  }
  NFElement want = phi.target->apply(tau, phi.image);
  for (int i = 0; i < l1.quotient.order(); ++i) {
    NFElement moved = l1.ambient->apply(l1.quotient.rep(i), l1.top->primitive());
    if (apply_embedding(phi, moved) == want) return i;
  }
  fail(ErrorCode::NotAnEmbedding, "automorphism does not preserve the embedded field over the base");
}

}  // namespace galoisdr
