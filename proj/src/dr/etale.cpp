#include "dr/etale.hpp"

#include <algorithm>

#include "exact/factor_q.hpp"

namespace galoisdr {

std::vector<EtaleComponent> etale_decomposition(const CoordinateRing& a) {
  const NumberField& nf = a.field();
  RationalField q;
  PolyRing<RationalField> QR(q);
  const auto& basis = a.rational_basis();
  int total = static_cast<int>(basis.size());
  int base_degree = a.extension().base->degree();

  // A sits inside functions to L, so the minimal polynomial of a function is
  // the lcm of the minimal polynomials of its values.
  for (long c = 1; c < 64; ++c) {
    GroupFunction x = a.constant(nf.zero());
    Rational w(1);
    for (const auto& b : basis) {
      for (std::size_t t = 0; t < x.size(); ++t) x[t] = nf.add(x[t], nf.scale(b[t], w));
      w *= c;
    }
    QPoly m = QR.one();
    for (const auto& v : x) {
      QPoly mv = nf.minimal_polynomial(v);
      m = QR.mul(m, QR.exact_quo(mv, QR.gcd(m, mv)));
    }
    if (m.degree() != total) continue;

    std::vector<EtaleComponent> out;
    for (const auto& [factor, mult] : factor_over_q(m).factors) {
      EtaleComponent comp;
      comp.factor = factor;
      comp.degree = factor.degree() / base_degree;
      for (std::size_t t = 0; t < x.size(); ++t) {
        bool here = nf.is_zero(nf.eval(factor, x[t]));
        comp.idempotent.push_back(here ? nf.one() : nf.zero());
        if (here) comp.support.push_back(static_cast<int>(t));
      }
      if (!a.contains(comp.idempotent)) fail(ErrorCode::Internal, "idempotent outside the coordinate ring");
      out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(), [](const EtaleComponent& l, const EtaleComponent& r) {
      if (l.degree != r.degree) return l.degree < r.degree;
      return l.support < r.support;
    });
    return out;
  }
  fail(ErrorCode::Internal, "no generic element found for the etale decomposition");
}

}  // namespace galoisdr
