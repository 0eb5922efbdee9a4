#pragma once

#include <memory>
#include <vector>

#include "exact/number_field.hpp"
#include "galois/group.hpp"

namespace galoisdr {

inline constexpr int kDefaultMaxDegree = 24;

/// theta = sum of coeff * roots[poly][root] over the terms.
struct GeneratorTerm {
  int poly = 0;
  int root = 0;
  Rational coeff;
};

/// A Galois number field over Q given as the splitting field of a list of
/// polynomials, with all roots and all automorphisms stored exactly.
class AmbientGaloisField {
 public:
  /// Builds and validates an ambient from raw data. If autos is empty they
  /// are enumerated from the generator terms. Throws Internal (or
  /// CorruptCache when `from_cache`) on any inconsistency.
  static std::shared_ptr<const AmbientGaloisField> assemble(QPoly modulus, std::vector<QPoly> polys,
                                                            std::vector<std::vector<NFElement>> roots,
                                                            std::vector<GeneratorTerm> terms,
                                                            std::vector<NFElement> autos = {},
                                                            bool from_cache = false);

  const NumberField& field() const { return field_; }
  int degree() const { return field_.degree(); }
  const std::vector<QPoly>& polys() const { return polys_; }
  const std::vector<std::vector<NFElement>>& roots() const { return roots_; }
  const std::vector<GeneratorTerm>& generator_terms() const { return terms_; }
  /// Images of the generator, identity first then lexicographic.
  const std::vector<NFElement>& autos() const { return autos_; }
  const FiniteGroup& group() const { return group_; }
  int identity_index() const { return 0; }

  const QMatrix& auto_matrix(int sigma) const { return matrices_[static_cast<std::size_t>(sigma)]; }
  NFElement apply(int sigma, const NFElement& x) const;
  /// Index of the automorphism sending the generator to `image`, or -1.
  int find_automorphism(const NFElement& image) const;
  /// Action of sigma on the stored roots of polys()[poly], as an index map.
  const std::vector<int>& root_permutation(int sigma, int poly) const {
    return perms_[static_cast<std::size_t>(sigma)][static_cast<std::size_t>(poly)];
  }
  /// Index of a root in roots()[poly], or -1.
  int root_index(int poly, const NFElement& x) const;

  /// Same field, same automorphisms.
  bool same_field(const AmbientGaloisField& other) const {
    return field_.modulus() == other.field_.modulus() && autos_ == other.autos_;
  }

 private:
  explicit AmbientGaloisField(QPoly modulus) : field_(std::move(modulus)) {}

  NumberField field_;
  std::vector<QPoly> polys_;
  std::vector<std::vector<NFElement>> roots_;
  std::vector<GeneratorTerm> terms_;
  std::vector<NFElement> autos_;
  std::vector<QMatrix> matrices_;
  FiniteGroup group_;
  std::vector<std::vector<std::vector<int>>> perms_;
};

using AmbientPtr = std::shared_ptr<const AmbientGaloisField>;

/// Q itself, as the degree-1 ambient with modulus x.
AmbientPtr rational_ambient();

/// Splitting field of the squarefree parts of `polys`, which are deduplicated
/// and put in canonical order first. Throws DegreeCapExceeded before any
/// adjunction that would pass `max_degree`.
AmbientPtr splitting_field(const std::vector<QPoly>& polys, int max_degree = kDefaultMaxDegree);

struct AmbientExtension {
  AmbientPtr field;
  /// Image of the old generator in the new field.
  NFElement iota;
  /// pi[s] is the restriction of automorphism s of the new field.
  std::vector<int> pi;
};

/// Adjoins the roots of f to n. The new ambient lists n's polynomials
/// followed by f.
AmbientExtension extend_ambient(const AmbientPtr& n, const QPoly& f, int max_degree = kDefaultMaxDegree);

/// iota applied to an element of the old field.
NFElement embed(const AmbientExtension& ext, const AmbientGaloisField& old_field, const NFElement& x);

/// Kernel of pi as a subgroup of the new group.
Subgroup extension_kernel(const AmbientExtension& ext);

/// Squarefree monic part, rejecting constants.
QPoly normalize_input_polynomial(const QPoly& f);

}  // namespace galoisdr
