#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "galois/subfield.hpp"

namespace galoisdr {

/// A function on the relative group: one value in L per coset index.
using GroupFunction = std::vector<NFElement>;
using NFMatrix = Matrix<NFElement>;

/// Structure constants of A(L/K) in its K-basis f_0..f_{g-1}. All entries
/// are elements of K written in ambient coordinates.
struct HopfStructure {
  /// mult[i][j][k]: coefficient of f_k in f_i * f_j.
  std::vector<std::vector<std::vector<NFElement>>> mult;
  std::vector<NFElement> unit;
  std::vector<NFElement> counit;
  /// antipode[k][i]: coefficient of f_i in S(f_k).
  std::vector<std::vector<NFElement>> antipode;
  /// delta[k](i, j): coefficient of f_i (x) f_j in Delta(f_k).
  std::vector<NFMatrix> delta;
};

/// The coordinate ring A(L/K): functions f from Gal(L/K) to L with
/// sigma(f(sigma^-1 tau sigma)) = f(tau), a K-algebra of dimension [L:K].
class CoordinateRing {
 public:
  explicit CoordinateRing(GaloisSubextension ext);

  const GaloisSubextension& extension() const { return ext_; }
  const AmbientGaloisField& ambient() const { return *ext_.ambient; }
  const NumberField& field() const { return ext_.ambient->field(); }
  const FiniteGroup& group() const { return ext_.quotient.group(); }
  int dim() const { return static_cast<int>(basis_.size()); }

  /// K-basis.
  const std::vector<GroupFunction>& basis() const { return basis_; }
  /// Q-basis in reduced echelon form (coset-major, then power-basis
  /// coordinates of L's primitive element).
  const std::vector<GroupFunction>& rational_basis() const { return rational_basis_; }
  std::optional<QVector> rational_coordinates(const GroupFunction& f) const;
  bool contains(const GroupFunction& f) const { return rational_coordinates(f).has_value(); }
  /// Exhaustive check of the equivariance condition over all pairs.
  bool is_equivariant(const GroupFunction& f) const;

  /// Coefficients c with f = sum c_i f_i, for any function into L.
  std::vector<NFElement> decompose(const GroupFunction& f) const;
  /// As decompose, but every coefficient must lie in K; otherwise throws
  /// InconsistentDescent.
  std::vector<NFElement> decompose_in_base(const GroupFunction& f) const;
  GroupFunction combine(const std::vector<NFElement>& coeffs) const;
  GroupFunction product(const GroupFunction& a, const GroupFunction& b) const;
  GroupFunction constant(const NFElement& c) const { return GroupFunction(static_cast<std::size_t>(dim()), c); }

  /// Action of a relative group element on L (through its representative).
  NFElement act(int sigma, const NFElement& x) const { return ambient().apply(ext_.quotient.rep(sigma), x); }
  const NFMatrix& evaluation_matrix() const { return eval_; }
  const NFMatrix& evaluation_inverse() const { return eval_inv_; }

  /// Multiplication, counit, antipode and comultiplication, computed on
  /// first use.
  const HopfStructure& hopf() const;

 private:
  QVector flatten(const GroupFunction& f) const;

  GaloisSubextension ext_;
  std::size_t ell_ = 0;  // [L:Q]
  EchelonBasis<RationalField> rational_echelon_;
  std::vector<GroupFunction> rational_basis_;
  std::vector<GroupFunction> basis_;
  NFMatrix eval_;
  NFMatrix eval_inv_;
  mutable std::once_flag hopf_once_;
  mutable std::unique_ptr<HopfStructure> hopf_;
};

using CoordinateRingPtr = std::shared_ptr<const CoordinateRing>;

CoordinateRingPtr build_coordinate_ring(const GaloisSubextension& ext);

struct HopfAxiomReport {
  bool coassociative = false;
  bool counit = false;
  bool antipode = false;
  bool counit_multiplicative = false;
  /// (ev_sigma (x) ev_tau) Delta = ev_{sigma tau} for every pair.
  bool evaluation = false;

  bool all() const { return coassociative && counit && antipode && counit_multiplicative && evaluation; }
};

/// Exact tensor checks of the Hopf axioms.
HopfAxiomReport verify_hopf_axioms(const CoordinateRing& a);

}  // namespace galoisdr
