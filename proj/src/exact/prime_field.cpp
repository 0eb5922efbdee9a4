#include "exact/prime_field.hpp"

#include <random>

namespace galoisdr {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 2 || p >= (1ULL << 32) || !is_prime(p)) {
    fail(ErrorCode::InvalidArgument, "PrimeField needs a prime below 2^32");
  }
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const {
  Element r = 1;
  a %= p_;
  while (e) {
    if (e & 1U) r = mul(r, a);
    a = mul(a, a);
    e >>= 1U;
  }
  return r;
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a % p_ == 0) fail(ErrorCode::Internal, "division by zero mod p");
  return pow(a, p_ - 2);
}

std::optional<PrimeField::Element> PrimeField::reduce(const Rational& q) const {
  Integer pz(static_cast<unsigned long>(p_));
  Integer dr = q.get_den() % pz;
  if (sgn(dr) == 0) return std::nullopt;
  Integer nr = q.get_num() % pz;
  if (sgn(nr) < 0) nr += pz;
  return div(nr.get_ui(), dr.get_ui());
}

std::optional<FpPoly> reduce_mod_p(const PrimeField& fp, const QPoly& f) {
  std::vector<std::uint64_t> c;
  c.reserve(f.size());
  for (const auto& q : f.coeffs()) {
    auto r = fp.reduce(q);
    if (!r) return std::nullopt;
    c.push_back(*r);
  }
  return FpPoly(std::move(c));
}

bool fp_lex_less(const FpPoly& a, const FpPoly& b) {
  return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                      b.coeffs().end());
}

namespace {

using Ring = PolyRing<PrimeField>;

FpPoly random_poly(const PrimeField& fp, int degree_below, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, fp.modulus() - 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(degree_below));
  for (auto& x : c) x = dist(rng);
  return FpPoly(std::move(c));
}

// Splits a product of distinct monic irreducibles, all of degree d.
void equal_degree_split(const Ring& R, const FpPoly& f, int d, std::mt19937_64& rng,
                        std::vector<FpPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f);
    return;
  }
  const PrimeField& fp = R.field();
  const std::uint64_t p = fp.modulus();
  while (true) {
    FpPoly a = random_poly(fp, f.degree(), rng);
    if (a.degree() < 1) continue;
    FpPoly g = R.gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(R, g, d, rng, out);
      equal_degree_split(R, R.exact_quo(f, g), d, rng, out);
      return;
    }
    FpPoly b;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      FpPoly t = R.rem(a, f);
      FpPoly acc = t;
      for (int i = 1; i < d; ++i) {
        t = R.mulmod(t, t, f);
        acc = R.add(acc, t);
      }
      b = acc;
    } else {
      Integer e;
      mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
      e = (e - 1) / 2;
      b = R.sub(R.powmod(a, e, f), R.one());
    }
    g = R.gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(R, g, d, rng, out);
      equal_degree_split(R, R.exact_quo(f, g), d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<FpPoly> factor_squarefree_mod_p(const PrimeField& fp, const FpPoly& f_in) {
  Ring R(fp);
  std::vector<FpPoly> out;
  if (f_in.degree() < 1) return out;
  FpPoly f = R.monic(f_in);
  // Fixed seed: the factor set is unique, only the discovery order depends on it.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  FpPoly h = R.x();
  const FpPoly x = R.x();
  Integer p(static_cast<unsigned long>(fp.modulus()));
  for (int i = 1; f.degree() >= 2 * i; ++i) {
    h = R.powmod(h, p, f);
    FpPoly g = R.gcd(R.sub(h, x), f);
    if (g.degree() > 0) {
      equal_degree_split(R, g, i, rng, out);
      f = R.exact_quo(f, g);
      h = R.rem(h, f);
    }
  }
  if (f.degree() > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return fp_lex_less(a, b);
  });
  return out;
}

}  // namespace galoisdr
