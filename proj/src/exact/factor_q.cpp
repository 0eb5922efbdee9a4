#include "exact/factor_q.hpp"

#include <algorithm>
#include <numeric>

#include "exact/prime_field.hpp"

namespace galoisdr {

namespace {

using QRing = PolyRing<RationalField>;
using FpRing = PolyRing<PrimeField>;

// Z/mZ with m a prime power; only units are ever inverted.
struct ModRing {
  using Element = Integer;
  Integer m;

  Element reduce(const Integer& a) const {
    Integer r = a % m;
    if (sgn(r) < 0) r += m;
    return r;
  }
  Element zero() const { return Integer(0); }
  Element one() const { return Integer(1); }
  Element from_int(long v) const { return reduce(Integer(v)); }
  Element add(const Element& a, const Element& b) const { return reduce(a + b); }
  Element sub(const Element& a, const Element& b) const { return reduce(a - b); }
  Element neg(const Element& a) const { return reduce(-a); }
  Element mul(const Element& a, const Element& b) const { return reduce(a * b); }
  Element inv(const Element& a) const {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
      fail(ErrorCode::Internal, "non-unit inverted modulo prime power");
    }
    return r;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
};

using ModPoly = Polynomial<Integer>;
using ModPolyRing = PolyRing<ModRing>;

ModPoly reduce_poly(const ModRing& R, const ZPoly& f) {
  std::vector<Integer> c;
  c.reserve(f.size());
  for (const auto& x : f.coeffs()) c.push_back(R.reduce(x));
  return ModPoly(std::move(c));
}

ModPoly lift_fp(const FpPoly& f) {
  std::vector<Integer> c;
  c.reserve(f.size());
  for (auto x : f.coeffs()) c.emplace_back(static_cast<unsigned long>(x));
  return ModPoly(std::move(c));
}

ZPoly symmetric(const ModRing& R, const ModPoly& f) {
  Integer half = R.m / 2;
  std::vector<Integer> c;
  c.reserve(f.size());
  for (const auto& x : f.coeffs()) c.push_back(x > half ? Integer(x - R.m) : x);
  return ZPoly(std::move(c));
}

FpPoly reduce_fp(const PrimeField& fp, const ZPoly& f) {
  std::vector<std::uint64_t> c;
  c.reserve(f.size());
  Integer p(static_cast<unsigned long>(fp.modulus()));
  for (const auto& x : f.coeffs()) {
    Integer r = x % p;
    if (sgn(r) < 0) r += p;
    c.push_back(r.get_ui());
  }
  return FpPoly(std::move(c));
}

struct HenselPair {
  ModPoly g;
  ModPoly h;
};

// Quadratic Hensel lifting of f = g*h (mod p), h monic, to modulus `target`
// which must be p^(2^k).
HenselPair hensel_lift(const ZPoly& f, const FpPoly& g0, const FpPoly& h0, const PrimeField& fp,
                       const Integer& target) {
  FpRing Fr(fp);
  auto bez = Fr.xgcd(g0, h0);
  if (bez.g.degree() != 0) fail(ErrorCode::Internal, "Hensel factors not coprime");
  ModPoly g = lift_fp(g0), h = lift_fp(h0), s = lift_fp(bez.s), t = lift_fp(bez.t);
  Integer m(static_cast<unsigned long>(fp.modulus()));
  while (m < target) {
    ModRing R2{m * m};
    ModPolyRing P(R2);
    ModPoly fm = reduce_poly(R2, f);
    ModPoly e = P.sub(fm, P.mul(g, h));
    auto [q, r] = P.divmod(P.mul(s, e), h);
    ModPoly g1 = P.add(P.add(g, P.mul(t, e)), P.mul(q, g));
    ModPoly h1 = P.add(h, r);
    ModPoly b = P.sub(P.add(P.mul(s, g1), P.mul(t, h1)), P.one());
    auto [c, d] = P.divmod(P.mul(s, b), h1);
    ModPoly s1 = P.sub(s, d);
    ModPoly t1 = P.sub(P.sub(t, P.mul(t, b)), P.mul(c, g1));
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
    m = R2.m;
  }
  return {g, h};
}

FpPoly fp_product(const FpRing& R, const std::vector<FpPoly>& fs, std::size_t lo, std::size_t hi) {
  FpPoly acc = R.one();
  for (std::size_t i = lo; i < hi; ++i) acc = R.mul(acc, fs[i]);
  return acc;
}

// Lifts f = lc(f) * prod(factors) mod p to monic factors mod `target`.
void lift_tree(const ZPoly& f, const std::vector<FpPoly>& factors, std::size_t lo, std::size_t hi,
               const PrimeField& fp, const Integer& target, std::vector<ModPoly>& out) {
  ModRing RT{target};
  if (hi - lo == 1) {
    ModPolyRing P(RT);
    out.push_back(P.monic(reduce_poly(RT, f)));
    return;
  }
  FpRing Fr(fp);
  std::size_t mid = lo + (hi - lo) / 2;
  FpPoly left = Fr.scale(fp_product(Fr, factors, lo, mid), reduce_fp(fp, ZPoly({f.leading()}))[0]);
  FpPoly right = fp_product(Fr, factors, mid, hi);
  HenselPair lifted = hensel_lift(f, left, right, fp, target);
  lift_tree(symmetric(RT, lifted.g), factors, lo, mid, fp, target, out);
  lift_tree(symmetric(RT, lifted.h), factors, mid, hi, fp, target, out);
}

Integer content(const ZPoly& f) {
  Integer g(0);
  for (const auto& c : f.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

ZPoly primitive(const ZPoly& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (sgn(f.leading()) < 0) c = -c;
  std::vector<Integer> v;
  v.reserve(f.size());
  for (const auto& x : f.coeffs()) v.push_back(x / c);
  return ZPoly(std::move(v));
}

// Exact division in Z[x]; nullopt if d does not divide f.
std::optional<ZPoly> z_exact_divide(const ZPoly& f, const ZPoly& d) {
  if (d.degree() > f.degree()) return std::nullopt;
  std::vector<Integer> r = f.coeffs();
  int dd = d.degree();
  std::vector<Integer> q(static_cast<std::size_t>(f.degree() - dd) + 1);
  const Integer& lead = d.leading();
  for (int i = f.degree(); i >= dd; --i) {
    Integer& top = r[static_cast<std::size_t>(i)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    Integer factor = top / lead;
    for (int j = 0; j <= dd; ++j) {
      r[static_cast<std::size_t>(i - dd + j)] -= factor * d[static_cast<std::size_t>(j)];
    }
    q[static_cast<std::size_t>(i - dd)] = factor;
  }
  for (int i = 0; i < dd; ++i) {
    if (sgn(r[static_cast<std::size_t>(i)]) != 0) return std::nullopt;
  }
  return ZPoly(std::move(q));
}

Integer factor_coefficient_bound(const ZPoly& f) {
  Integer sq(0);
  for (const auto& c : f.coeffs()) sq += c * c;
  Integer norm2;
  mpz_sqrt(norm2.get_mpz_t(), sq.get_mpz_t());
  norm2 += 1;
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(f.degree()));
  return abs(f.leading()) * two_n * norm2;
}

struct PrimeChoice {
  std::uint64_t p = 0;
  std::vector<FpPoly> factors;
};

constexpr int kPrimeCandidates = 6;

PrimeChoice choose_prime(const ZPoly& f) {
  PrimeChoice best;
  int tried = 0;
  for (std::uint64_t p = 3; tried < kPrimeCandidates; p += 2) {
    if (!is_prime(p)) continue;
    PrimeField fp(p);
    FpPoly fbar = reduce_fp(fp, f);
    if (fbar.degree() != f.degree()) continue;
    FpRing R(fp);
    if (!R.is_squarefree(fbar)) continue;
    ++tried;
    auto fs = factor_squarefree_mod_p(fp, fbar);
    if (best.p == 0 || fs.size() < best.factors.size()) {
      best.p = p;
      best.factors = std::move(fs);
    }
    if (best.factors.size() == 1) break;
  }
  return best;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// f primitive, squarefree, degree >= 1, positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  if (f.degree() <= 1) return {f};
  PrimeChoice choice = choose_prime(f);
  if (choice.factors.size() <= 1) return {f};
  PrimeField fp(choice.p);

  Integer bound = 2 * factor_coefficient_bound(f) + 1;
  Integer target(static_cast<unsigned long>(choice.p));
  while (target < bound) target *= target;

  std::vector<ModPoly> lifted;
  lift_tree(f, choice.factors, 0, choice.factors.size(), fp, target, lifted);
  ModRing RT{target};
  ModPolyRing P(RT);

  std::vector<ZPoly> found;
  ZPoly rest = f;
  std::vector<std::size_t> remaining(lifted.size());
  std::iota(remaining.begin(), remaining.end(), 0);
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool hit = false;
    std::vector<std::size_t> comb(s);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      ModPoly prod = P.constant(RT.reduce(rest.leading()));
      for (std::size_t c : comb) prod = P.mul(prod, lifted[remaining[c]]);
      ZPoly cand = symmetric(RT, prod);
      // Constant-term filter before the full trial division.
      const Integer& c0 = cand[0];
      Integer lc0 = rest.leading() * rest[0];
      if (sgn(c0) != 0 && sgn(lc0) != 0 && !mpz_divisible_p(lc0.get_mpz_t(), c0.get_mpz_t())) continue;
      ZPoly prim = primitive(cand);
      if (prim.degree() < 1) continue;
      auto q = z_exact_divide(rest, prim);
      if (!q) continue;
      found.push_back(prim);
      rest = primitive(*q);
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < remaining.size(); ++i) {
        if (std::find(comb.begin(), comb.end(), i) == comb.end()) keep.push_back(remaining[i]);
      }
      remaining = std::move(keep);
      hit = true;
      break;
    } while (next_combination(comb, remaining.size()));
    if (!hit) ++s;
  }
  if (rest.degree() >= 1) found.push_back(rest);
  return found;
}

}  // namespace

ZPoly primitive_integer_part(const QPoly& f) {
  Integer den(1);
  for (const auto& c : f.coeffs()) den = lcm_denominator(den, c);
  std::vector<Integer> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) {
    Rational scaled = c * den;
    v.push_back(scaled.get_num());
  }
  return primitive(ZPoly(std::move(v)));
}

QPoly to_qpoly(const ZPoly& f) {
  std::vector<Rational> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) v.emplace_back(c);
  return QPoly(std::move(v));
}

std::vector<QPoly> factor_squarefree_over_q(const QPoly& f) {
  RationalField Q;
  QRing R(Q);
  std::vector<QPoly> out;
  if (f.degree() < 1) return out;
  ZPoly z = primitive_integer_part(f);
  // Pull out powers of x first; they are invisible to the modular step.
  if (sgn(z[0]) == 0) {
    out.push_back(R.x());
    std::vector<Integer> shifted(z.coeffs().begin() + 1, z.coeffs().end());
    z = ZPoly(std::move(shifted));
  }
  if (z.degree() >= 1) {
    for (const auto& g : zassenhaus(z)) out.push_back(R.monic(to_qpoly(g)));
  }
  std::sort(out.begin(), out.end(), canonical_less<Rational>);
  return out;
}

QFactorization factor_over_q(const QPoly& f) {
  if (f.is_zero()) fail(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
  RationalField Q;
  QRing R(Q);
  QFactorization out;
  out.unit = f.leading();
  for (const auto& [part, mult] : R.squarefree_decomposition(f)) {
    for (auto& g : factor_squarefree_over_q(part)) out.factors.emplace_back(std::move(g), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

bool is_irreducible_over_q(const QPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_over_q(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

QPoly expand(const QFactorization& fac) {
  RationalField Q;
  QRing R(Q);
  QPoly acc = R.constant(fac.unit);
  for (const auto& [g, m] : fac.factors) acc = R.mul(acc, R.pow(g, static_cast<unsigned>(m)));
  return acc;
}

}  // namespace galoisdr
