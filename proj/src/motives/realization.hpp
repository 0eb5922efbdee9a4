#pragma once

#include <optional>

#include "dr/coordinate_ring.hpp"
#include "motives/motive.hpp"

namespace galoisdr {

/// An element of V (x) N: one N-coefficient per basis vector of V.
using TensorElement = std::vector<NFElement>;

/// The de Rham realization W = (V (x) N)^G under the diagonal action.
class DeRham {
 public:
  /// One kernel solve; throws Internal if dim W differs from dim V.
  explicit DeRham(Motive v);

  const Motive& motive() const { return v_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  /// Q-basis of W.
  const std::vector<TensorElement>& basis() const { return basis_; }
  /// Q-coordinates of x in basis(), nullopt unless x lies in W.
  std::optional<QVector> coordinates(const TensorElement& x) const;
  TensorElement combine(const QVector& c) const;
  /// g acting on V (x) N diagonally.
  TensorElement act(int g, const TensorElement& x) const;

 private:
  QVector flatten(const TensorElement& x) const;

  Motive v_;
  std::vector<TensorElement> basis_;
  std::vector<QVector> flat_basis_;
  QMatrix flat_columns_;
};

DeRham de_rham(const Motive& v);

/// W(h(X)) with the pointwise product against the product of the fixed
/// fields N^{H_i}, through evaluation at the base point H_i of each
/// component.
struct GammaComparison {
  /// Rows: concatenated coordinates in the fixed-field bases; columns: the
  /// basis of W.
  QMatrix matrix;
  std::vector<FixedFieldPtr> fields;
  bool bijective = false;
  /// W is closed under the pointwise product and the matrix carries its
  /// structure constants to those of the product of fields.
  bool multiplicative = false;
  bool unital = false;

  bool ok() const { return bijective && multiplicative && unital; }
};

GammaComparison gamma_comparison(const EtaleScheme& x);

/// The coaction W -> W (x) A(N/Q): coeff[b][j][k] is the coefficient of
/// w_j (x) f_k in rho(w_b).
struct Coaction {
  std::shared_ptr<const DeRham> realization;
  CoordinateRingPtr ring;
  std::vector<std::vector<QVector>> coeff;
};

/// Pinned down by evaluation: (id (x) ev_tau) rho = tau on the V-leg. The
/// ring must be A(N/Q) for the motive's ambient. Throws InconsistentDescent
/// if a coefficient is not rational.
Coaction coaction(std::shared_ptr<const DeRham> w, const CoordinateRingPtr& a);

struct ComoduleReport {
  /// Evaluation at every tau reproduces the action on V.
  bool evaluation = false;
  bool coassociative = false;
  bool counit = false;

  bool all() const { return evaluation && coassociative && counit; }
};

ComoduleReport verify_comodule(const Coaction& c);

/// Q-linear T: W_x -> W_y commuting with the coactions; T(i, b) at index
/// i * dim(W_x) + b.
std::vector<QVector> comodule_homs(const Coaction& x, const Coaction& y);

/// The multiplication map W(V) (x)_Q W(V') -> W(V (x) V') lands in W and is
/// bijective.
bool tensor_compatible(const DeRham& v, const DeRham& w, const DeRham& vw);

}  // namespace galoisdr
