#pragma once

#include <vector>

#include "galois/subfield.hpp"

namespace galoisdr {

/// A finite-level Artin motive with rational coefficients: a representation
/// of the ambient group G on Q^dim.
class Motive {
 public:
  /// action[g] is the matrix of group element g. Throws InvalidArgument
  /// unless this is a homomorphism on the ambient group table.
  Motive(AmbientPtr ambient, std::vector<QMatrix> action);

  const AmbientPtr& ambient() const { return ambient_; }
  const FiniteGroup& group() const { return ambient_->group(); }
  int dim() const { return dim_; }
  const QMatrix& action(int g) const { return action_[static_cast<std::size_t>(g)]; }
  const std::vector<QMatrix>& actions() const { return action_; }
  /// Traces, one per group element.
  std::vector<Rational> character() const;

 private:
  AmbientPtr ambient_;
  int dim_ = 0;
  std::vector<QMatrix> action_;
};

Motive unit_motive(const AmbientPtr& ambient);
/// Permutation motive of a G-set given by one permutation per group element.
Motive permutation_motive(const AmbientPtr& ambient, const std::vector<std::vector<int>>& perms);

/// A finite etale Q-scheme inside the ambient: component i is the spectrum
/// of N^{H_i}. Its points form the G-set of left cosets of each H_i.
struct EtaleScheme {
  AmbientPtr ambient;
  std::vector<Subgroup> components;
};

EtaleScheme make_etale_scheme(const AmbientPtr& ambient, std::vector<Subgroup> components);
/// Spec of a subfield.
EtaleScheme spec(const FixedFieldPtr& field);
/// Disjoint union (same ambient).
EtaleScheme disjoint_union(const EtaleScheme& x, const EtaleScheme& y);

struct SchemePoint {
  int component = 0;
  /// Sorted members of the coset g H_component.
  std::vector<int> coset;
};

/// Points in component order, cosets in left_cosets order.
std::vector<SchemePoint> scheme_points(const EtaleScheme& x);
/// perms[g][i] = index of g applied to point i.
std::vector<std::vector<int>> point_action(const EtaleScheme& x);
/// X x Y, decomposed into orbits on pairs; point (i, j) of the product lies
/// in the component of its orbit. pair_index[i * |Y| + j] gives its point
/// index in the result.
struct ProductScheme {
  EtaleScheme scheme;
  std::vector<int> pair_index;
};
ProductScheme product(const EtaleScheme& x, const EtaleScheme& y);

Motive motive_of(const EtaleScheme& x);

/// Rows form a basis of the vectors fixed by every element of h.
std::vector<QVector> sections(const Motive& v, const Subgroup& h);
std::vector<QVector> sections(const Motive& v, const FixedFieldPtr& m);

/// Sheaf condition at finite level for h_small normal in h_big: the
/// h_big-sections are the h_big/h_small-invariants of the h_small-sections.
bool sheaf_condition(const Motive& v, const Subgroup& h_small, const Subgroup& h_big);

struct FiniteTypeLevel {
  Subgroup kernel;
  /// Every subgroup of the kernel has all of V as sections.
  bool certified = false;
};
FiniteTypeLevel finite_type_level(const Motive& v);

/// Kronecker product action; first factor major.
Motive tensor(const Motive& v, const Motive& w);
/// Matrices X (w.dim x v.dim, row-major flattened) with w(g) X = X v(g).
std::vector<QVector> hom_motives(const Motive& v, const Motive& w);
/// Equal characters (enough for rational representations in characteristic 0).
bool isomorphic(const Motive& v, const Motive& w);

/// The restriction of v to an invariant subspace spanned by the given
/// vectors. Throws InvalidArgument if the span is not invariant.
Motive subrepresentation(const Motive& v, const std::vector<QVector>& basis);

struct IsotypicComponent {
  /// Basis of the component inside V.
  std::vector<QVector> basis;
  Motive motive;
  /// Minimal polynomial of the generic central element on the component.
  QPoly central_minpoly;
};

/// Decomposition of V into isotypic components by the class sums of G: each
/// component is where the algebra they generate acts through a field.
std::vector<IsotypicComponent> isotypic_components(const Motive& v);

struct IrreducibleSummand {
  std::vector<QVector> basis;
  Motive motive;
  /// End_G is a commutative field, which proves irreducibility. A summand
  /// whose endomorphism algebra is noncommutative is left uncertified.
  bool certified = false;
};

/// A small invariant subspace of the component: cyclic submodules of probe
/// vectors, shrunk until no probe gives a smaller one.
IrreducibleSummand irreducible_summand(const IsotypicComponent& c);

/// Minimal polynomial of a square rational matrix.
QPoly matrix_minimal_polynomial(const QMatrix& m);

}  // namespace galoisdr
