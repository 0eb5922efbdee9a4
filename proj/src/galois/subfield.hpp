#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "galois/ambient.hpp"

namespace galoisdr {

/// The subfield N^H of an ambient, with a reduced echelon Q-basis and a
/// primitive element.
class FixedField {
 public:
  FixedField(AmbientPtr ambient, Subgroup subgroup);

  const AmbientPtr& ambient() const { return ambient_; }
  const Subgroup& subgroup() const { return subgroup_; }
  int degree() const { return static_cast<int>(basis_.size()); }
  const std::vector<NFElement>& basis() const { return basis_; }
  const NFElement& primitive() const { return primitive_; }
  const QPoly& minimal_polynomial() const { return minpoly_; }

  bool contains(const NFElement& x) const;
  /// Coordinates in basis(); nullopt outside the subfield.
  std::optional<QVector> coordinates(const NFElement& x) const;
  NFElement from_coordinates(const QVector& c) const;
  /// p with x = p(primitive), deg p < degree(); x must lie in the subfield.
  QPoly as_polynomial(const NFElement& x) const;
  /// Elements of the ambient group fixing the subfield pointwise.
  Subgroup stabilizer() const;

 private:
  AmbientPtr ambient_;
  Subgroup subgroup_;
  EchelonBasis<RationalField> echelon_;
  std::vector<NFElement> basis_;
  NFElement primitive_;
  QPoly minpoly_;
  QMatrix to_power_;  // basis coordinates -> coefficients in powers of primitive
};

using FixedFieldPtr = std::shared_ptr<const FixedField>;

FixedFieldPtr fixed_field(const AmbientPtr& ambient, const Subgroup& h);

/// L/K inside an ambient, with L = N^H, K = N^H' and H normal in H'. The
/// relative group H'/H is Gal(L/K).
struct GaloisSubextension {
  AmbientPtr ambient;
  Subgroup inner;
  Subgroup outer;
  QuotientGroup quotient;
  FixedFieldPtr top;
  FixedFieldPtr base;

  int degree() const { return quotient.order(); }
  /// Least index in each coset of H in H', in coset order.
  const std::vector<int>& coset_reps() const { return quotient.reps(); }
};

/// Throws InvalidArgument unless inner is normal in outer.
GaloisSubextension make_subextension(const AmbientPtr& ambient, const Subgroup& inner, const Subgroup& outer);
/// N over Q.
GaloisSubextension full_extension(const AmbientPtr& ambient);

/// A field homomorphism from a subfield into an ambient, given by the image
/// of the source's primitive element.
struct Embedding {
  FixedFieldPtr source;
  AmbientPtr target;
  NFElement image;
};

/// Throws NotAnEmbedding unless image is a root of the source's primitive
/// minimal polynomial.
Embedding make_embedding(const FixedFieldPtr& source, const AmbientPtr& target, NFElement image);
/// The inclusion of a subfield into its own ambient.
Embedding inclusion(const FixedFieldPtr& source);
NFElement apply_embedding(const Embedding& phi, const NFElement& x);
Embedding compose(const Embedding& outer, const Embedding& inner);

/// All K-embeddings of the top field of l1 into target. Within the same
/// ambient these are the restrictions of the elements of H', one per coset
/// of H. Across ambients K must be Q. Throws NoEmbedding if there are none.
std::vector<Embedding> embeddings(const GaloisSubextension& l1, const AmbientPtr& target);

/// The unique coset index s of l1's relative group with
/// phi(s(x)) = tau(phi(x)) for x in the top field. Throws NotAnEmbedding if
/// phi does not fix the base field or no such element exists.
int restrict_automorphism(int tau, const Embedding& phi, const GaloisSubextension& l1);

}  // namespace galoisdr
