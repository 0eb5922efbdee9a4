#pragma once

#include <vector>

#include "exact/linalg.hpp"
#include "exact/polynomial.hpp"

namespace galoisdr {

/// Element of Q[t]/(m(t)) in the power basis 1, t, ..., t^(d-1). The field
/// is carried by context: every operation goes through a NumberField.
struct NFElement {
  std::vector<Rational> coords;

  friend bool operator==(const NFElement& a, const NFElement& b) { return a.coords == b.coords; }
  friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }
};

inline bool is_zero_element(const NFElement& e) {
  for (const auto& c : e.coords) {
    if (sgn(c) != 0) return false;
  }
  return true;
}

/// Lexicographic order on coordinate sequences.
bool nf_lex_less(const NFElement& a, const NFElement& b);

class NumberField {
 public:
  using Element = NFElement;

  /// modulus must be monic of degree >= 1. Irreducibility is the caller's
  /// contract; use certified() to have it checked.
  explicit NumberField(QPoly modulus);
  static NumberField certified(const QPoly& modulus);

  int degree() const { return d_; }
  const QPoly& modulus() const { return modulus_; }

  Element zero() const { return Element{std::vector<Rational>(static_cast<std::size_t>(d_))}; }
  Element one() const { return from_rational(Rational(1)); }
  Element from_int(long v) const { return from_rational(Rational(v)); }
  Element from_rational(const Rational& q) const {
    Element e = zero();
    e.coords[0] = q;
    return e;
  }
  /// The class of t.
  Element generator() const;
  /// Reduction of an arbitrary rational polynomial in t.
  Element from_poly(const QPoly& p) const;
  QPoly to_poly(const Element& e) const { return QPoly(e.coords); }

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element scale(const Element& a, const Rational& q) const;
  Element inv(const Element& a) const;
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  Element pow(const Element& a, unsigned e) const;
  bool is_zero(const Element& a) const { return is_zero_element(a); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_rational(const Element& a) const;

  /// Evaluates a rational polynomial at an element (Horner).
  Element eval(const QPoly& p, const Element& x) const;

  /// Matrix of multiplication by a: column k holds a * t^k.
  QMatrix mult_matrix(const Element& a) const;
  Rational norm(const Element& a) const;
  Rational trace(const Element& a) const;
  /// Monic minimal polynomial over Q, from the first linear relation among
  /// the powers of a.
  QPoly minimal_polynomial(const Element& a) const;
  /// Discriminant of the modulus.
  Rational discriminant() const;

 private:
  QPoly modulus_;
  int d_;
  // Reductions of t^d, ..., t^(2d-2).
  std::vector<std::vector<Rational>> high_powers_;
};

using NFPoly = Polynomial<NFElement>;
using NFPolyRing = PolyRing<NumberField>;

/// Norm from F[x] down to Q[x]: the product of the conjugates of g, i.e.
/// Res_t(m(t), g(x, t)). Computed by evaluation at integer points (each value
/// is a field norm, a determinant) and exact interpolation.
QPoly norm_poly(const NumberField& field, const NFPoly& g);

/// Embeds a rational polynomial into F[x].
NFPoly lift_poly(const NumberField& field, const QPoly& f);

/// Discriminant of a rational polynomial, via the resultant with its
/// derivative.
Rational poly_discriminant(const QPoly& f);

}  // namespace galoisdr
