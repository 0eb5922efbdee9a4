#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "exact/polynomial.hpp"

namespace galoisdr {

/// Z/pZ for a prime p < 2^32.
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Element>(r < 0 ? r + static_cast<long>(p_) : r);
  }
  Element add(Element a, Element b) const { return (a + b) % p_; }
  Element sub(Element a, Element b) const { return (a + p_ - b) % p_; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const { return (a * b) % p_; }
  Element pow(Element a, std::uint64_t e) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  /// Reduction of a p-integral rational; nullopt when p divides the denominator.
  std::optional<Element> reduce(const Rational& q) const;

 private:
  std::uint64_t p_;
};

using FpPoly = Polynomial<std::uint64_t>;

/// Reduction of a rational polynomial; nullopt if some coefficient is not
/// p-integral.
std::optional<FpPoly> reduce_mod_p(const PrimeField& fp, const QPoly& f);

/// Complete factorization of a squarefree polynomial over F_p into monic
/// irreducibles (distinct-degree then equal-degree splitting). The result is
/// sorted by degree, then lexicographically by coefficient sequence.
std::vector<FpPoly> factor_squarefree_mod_p(const PrimeField& fp, const FpPoly& f);

/// Lexicographic comparison of coefficient sequences, lowest degree first.
bool fp_lex_less(const FpPoly& a, const FpPoly& b);

bool is_prime(std::uint64_t n);

}  // namespace galoisdr
