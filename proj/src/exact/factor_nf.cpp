#include "exact/factor_nf.hpp"

#include <algorithm>

#include "exact/factor_q.hpp"

namespace galoisdr {

bool nf_poly_less(const NFPoly& a, const NFPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto ui = static_cast<std::size_t>(i);
    if (a[ui] != b[ui]) return nf_lex_less(a[ui], b[ui]);
  }
  return false;
}

std::vector<NFPoly> factor_squarefree_over_nf(const NumberField& field, const NFPoly& f_in) {
  NFPolyRing R(field);
  std::vector<NFPoly> out;
  if (f_in.degree() < 1) return out;
  NFPoly f = R.monic(f_in);
  if (f.degree() == 1 || field.degree() == 1) {
    if (field.degree() == 1) {
      // Q itself: factor the rational image directly.
      std::vector<Rational> c;
      for (const auto& e : f.coeffs()) c.push_back(e.coords[0]);
      for (const auto& g : factor_squarefree_over_q(QPoly(std::move(c)))) out.push_back(lift_poly(field, g));
    } else {
      out.push_back(f);
    }
    std::sort(out.begin(), out.end(), nf_poly_less);
    return out;
  }
  RationalField Q;
  PolyRing<RationalField> QR(Q);
  const NFElement theta = field.generator();
  for (long s = 0;; ++s) {
    NFElement shift = field.scale(theta, Rational(-s));
    NFPoly g = R.shift(f, shift);  // f(x - s*t)
    QPoly n = norm_poly(field, g);
    if (!QR.is_squarefree(n)) continue;
    auto qfactors = factor_squarefree_over_q(n);
    if (qfactors.size() == 1) {
      out.push_back(f);
      break;
    }
    NFElement back = field.scale(theta, Rational(s));
    for (const auto& h : qfactors) {
      NFPoly d = R.gcd(lift_poly(field, h), g);
      if (d.degree() < 1) fail(ErrorCode::Internal, "norm factor with trivial gcd");
      out.push_back(R.monic(R.shift(d, back)));  // d(x + s*t)
    }
    break;
  }
  std::sort(out.begin(), out.end(), nf_poly_less);
  return out;
}

NFFactorization factor_over_nf(const NumberField& field, const NFPoly& f) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  NFPolyRing R(field);
  NFFactorization out;
  out.unit = f.leading();
  for (const auto& [part, mult] : R.squarefree_decomposition(f)) {
    for (auto& g : factor_squarefree_over_nf(field, part)) out.factors.emplace_back(std::move(g), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return nf_poly_less(a.first, b.first); });
  return out;
}

std::vector<NFElement> roots_in_field(const NumberField& field, const QPoly& f) {
  RationalField Q;
  PolyRing<RationalField> QR(Q);
  std::vector<NFElement> roots;
  if (f.degree() < 1) return roots;
  QPoly sf = QR.squarefree_part(f);
  // Factor over Q first so each norm stays as small as possible.
  for (const auto& g : factor_squarefree_over_q(sf)) {
    for (const auto& h : factor_squarefree_over_nf(field, lift_poly(field, g))) {
      if (h.degree() == 1) roots.push_back(field.neg(h[0]));
    }
  }
  std::sort(roots.begin(), roots.end(), nf_lex_less);
  return roots;
}

}  // namespace galoisdr
