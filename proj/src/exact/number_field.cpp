#include "exact/number_field.hpp"

#include "exact/factor_q.hpp"

namespace galoisdr {

bool nf_lex_less(const NFElement& a, const NFElement& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end(),
                                      [](const Rational& x, const Rational& y) { return cmp(x, y) < 0; });
}

NumberField::NumberField(QPoly modulus) : modulus_(std::move(modulus)), d_(modulus_.degree()) {
  if (d_ < 1) fail(ErrorCode::InvalidArgument, "number field modulus must have degree >= 1");
  if (modulus_.leading() != 1) fail(ErrorCode::InvalidArgument, "number field modulus must be monic");
  // t^d = -(m_0 + ... + m_{d-1} t^{d-1}); higher powers by shifting.
  std::size_t d = static_cast<std::size_t>(d_);
  std::vector<Rational> cur(d);
  for (std::size_t i = 0; i < d; ++i) cur[i] = -modulus_[i];
  for (int k = d_; k <= 2 * d_ - 2; ++k) {
    high_powers_.push_back(cur);
    std::vector<Rational> next(d);
    Rational top = cur[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (sgn(top) != 0) {
      for (std::size_t i = 0; i < d; ++i) next[i] -= top * modulus_[i];
    }
    cur = std::move(next);
  }
}

NumberField NumberField::certified(const QPoly& modulus) {
  if (!is_irreducible_over_q(modulus)) {
    fail(ErrorCode::InvalidArgument, "number field modulus is reducible over Q");
  }
  return NumberField(modulus);
}

NFElement NumberField::generator() const {
  Element e = zero();
  if (d_ == 1) {
    e.coords[0] = -modulus_[0];
  } else {
    e.coords[1] = 1;
  }
  return e;
}

NFElement NumberField::from_poly(const QPoly& p) const {
  RationalField Q;
  PolyRing<RationalField> R(Q);
  QPoly r = p.degree() >= d_ ? R.rem(p, modulus_) : p;
  Element e = zero();
  for (std::size_t i = 0; i < r.size(); ++i) e.coords[i] = r[i];
  return e;
}

NFElement NumberField::add(const Element& a, const Element& b) const {
  Element e = a;
  for (std::size_t i = 0; i < e.coords.size(); ++i) e.coords[i] += b.coords[i];
  return e;
}

NFElement NumberField::sub(const Element& a, const Element& b) const {
  Element e = a;
  for (std::size_t i = 0; i < e.coords.size(); ++i) e.coords[i] -= b.coords[i];
  return e;
}

NFElement NumberField::neg(const Element& a) const {
  Element e = a;
  for (auto& c : e.coords) c = -c;
  return e;
}

NFElement NumberField::scale(const Element& a, const Rational& q) const {
  Element e = a;
  for (auto& c : e.coords) c *= q;
  return e;
}

NFElement NumberField::mul(const Element& a, const Element& b) const {
  std::size_t d = static_cast<std::size_t>(d_);
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a.coords[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(b.coords[j]) == 0) continue;
      prod[i + j] += a.coords[i] * b.coords[j];
    }
  }
  Element e = zero();
  for (std::size_t i = 0; i < d; ++i) e.coords[i] = std::move(prod[i]);
  for (std::size_t k = d; k < 2 * d - 1; ++k) {
    const Rational& c = prod[k];
    if (sgn(c) == 0) continue;
    const auto& red = high_powers_[k - d];
    for (std::size_t i = 0; i < d; ++i) {
      if (sgn(red[i]) != 0) e.coords[i] += c * red[i];
    }
  }
  return e;
}

NFElement NumberField::inv(const Element& a) const {
  if (is_zero(a)) fail(ErrorCode::Internal, "inverse of zero in a number field");
  if (d_ == 1) return from_rational(1 / a.coords[0]);
  RationalField Q;
  PolyRing<RationalField> R(Q);
  auto x = R.xgcd(to_poly(a), modulus_);
  if (x.g.degree() != 0) fail(ErrorCode::Internal, "element not invertible: modulus is reducible");
  return from_poly(x.s);
}

NFElement NumberField::pow(const Element& a, unsigned e) const {
  Element result = one();
  Element base = a;
  while (e) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e) base = mul(base, base);
  }
  return result;
}

bool NumberField::is_rational(const Element& a) const {
  for (std::size_t i = 1; i < a.coords.size(); ++i) {
    if (sgn(a.coords[i]) != 0) return false;
  }
  return true;
}

NFElement NumberField::eval(const QPoly& p, const Element& x) const {
  Element acc = zero();
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = mul(acc, x);
    acc.coords[0] += p[i];
  }
  return acc;
}

QMatrix NumberField::mult_matrix(const Element& a) const {
  std::size_t d = static_cast<std::size_t>(d_);
  QMatrix m(d, d, Rational(0));
  Element cur = a;
  const Element t = generator();
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t i = 0; i < d; ++i) m(i, k) = cur.coords[i];
    if (k + 1 < d) cur = mul(cur, t);
  }
  return m;
}

Rational NumberField::norm(const Element& a) const {
  RationalField Q;
  return determinant(Q, mult_matrix(a));
}

Rational NumberField::trace(const Element& a) const {
  QMatrix m = mult_matrix(a);
  Rational tr(0);
  for (std::size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
  return tr;
}

QPoly NumberField::minimal_polynomial(const Element& a) const {
  RationalField Q;
  std::size_t d = static_cast<std::size_t>(d_);
  std::vector<Element> powers{one()};
  EchelonBasis<RationalField> span(Q, d);
  span.add(powers[0].coords);
  while (true) {
    Element next = mul(powers.back(), a);
    if (!span.add(next.coords)) {
      // next = sum c_i a^i; solve in the basis of the powers found so far.
      std::size_t k = powers.size();
      QMatrix m(d, k, Rational(0));
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < d; ++i) m(i, j) = powers[j].coords[i];
      }
      auto c = solve(Q, m, next.coords);
      if (!c) fail(ErrorCode::Internal, "minimal polynomial relation not found");
      std::vector<Rational> coeffs(k + 1);
      for (std::size_t j = 0; j < k; ++j) coeffs[j] = -(*c)[j];
      coeffs[k] = 1;
      return QPoly(std::move(coeffs));
    }
    powers.push_back(std::move(next));
  }
}

Rational NumberField::discriminant() const { return poly_discriminant(modulus_); }

Rational poly_discriminant(const QPoly& f) {
  RationalField Q;
  PolyRing<RationalField> R(Q);
  int n = f.degree();
  if (n < 1) return Rational(1);
  Rational res = resultant(Q, f, R.derivative(f));
  // disc = (-1)^(n(n-1)/2) res(f, f') / lc(f)
  long sign_exp = static_cast<long>(n) * (n - 1) / 2;
  if (sign_exp % 2 != 0) res = -res;
  return res / f.leading();
}

NFPoly lift_poly(const NumberField& field, const QPoly& f) {
  std::vector<NFElement> c;
  c.reserve(f.size());
  for (const auto& q : f.coeffs()) c.push_back(field.from_rational(q));
  return NFPoly(std::move(c));
}

QPoly norm_poly(const NumberField& field, const NFPoly& g) {
  if (g.is_zero()) return QPoly();
  std::size_t deg = static_cast<std::size_t>(g.degree()) * static_cast<std::size_t>(field.degree());
  NFPolyRing R(field);
  // Values at x = 0, 1, ..., deg, then Newton interpolation.
  std::vector<Rational> xs, ys;
  xs.reserve(deg + 1);
  ys.reserve(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) {
    NFElement v = R.eval(g, field.from_int(static_cast<long>(i)));
    xs.emplace_back(static_cast<long>(i));
    ys.push_back(field.norm(v));
  }
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level <= deg; ++level) {
    for (std::size_t i = deg; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  RationalField Q;
  PolyRing<RationalField> QR(Q);
  QPoly acc = QR.constant(dd[deg]);
  for (std::size_t i = deg; i-- > 0;) {
    acc = QR.add(QR.mul(acc, QR.linear(xs[i])), QR.constant(dd[i]));
  }
  return acc;
}

}  // namespace galoisdr
