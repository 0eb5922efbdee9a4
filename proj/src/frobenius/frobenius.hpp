#pragma once

#include <cstdint>
#include <optional>

#include "dr/points.hpp"
#include "exact/prime_field.hpp"

namespace galoisdr {

/// A prime of Q together with a prime of the ambient above it, given by an
/// irreducible factor g of the modulus mod p.
class PrimeContext {
 public:
  /// factor_choice indexes the factors of the modulus mod p sorted
  /// lexicographically by coefficient sequence; 0 is the canonical choice. Throws
  /// RamifiedOrBadPrime for p dividing the discriminant or a stored
  /// denominator.
  PrimeContext(AmbientPtr ambient, std::uint64_t p, int factor_choice = 0);

  const AmbientPtr& ambient() const { return ambient_; }
  std::uint64_t p() const { return fp_.modulus(); }
  const PrimeField& residue_prime_field() const { return fp_; }
  const FpPoly& factor() const { return factors_[static_cast<std::size_t>(choice_)]; }
  const std::vector<FpPoly>& all_factors() const { return factors_; }
  int factor_choice() const { return choice_; }
  int residue_degree() const { return factor().degree(); }

  /// Residue of a p-integral element in F_p[t]/(g); nullopt if some
  /// coordinate has p in its denominator.
  std::optional<FpPoly> reduce(const NFElement& x) const;

 private:
  AmbientPtr ambient_;
  PrimeField fp_;
  std::vector<FpPoly> factors_;
  int choice_;
};

/// Throws RamifiedOrBadPrime unless p is prime and good for the ambient.
void check_good_prime(const AmbientGaloisField& n, std::uint64_t p);

/// The automorphism with red(sigma(theta)) = red(theta)^p at the chosen
/// prime above p.
int frobenius_element(const PrimeContext& ctx);

/// Sorted degrees of the irreducible factors of polys()[poly] mod p.
std::vector<int> splitting_type(const AmbientGaloisField& n, int poly, std::uint64_t p);

struct FrobeniusCertificates {
  /// phi(f(phi)) = f(phi) for every basis f.
  bool fixed = false;
  /// f(s phi s^-1) = s(f(phi)) for every s and every basis f.
  bool transport = false;
  /// Every value reduces at the chosen prime to an element of F_p; nullopt
  /// when some value is not p-integral in power-basis coordinates.
  std::optional<bool> residues_rational;
};

struct FrobeniusData {
  std::uint64_t p = 0;
  int factor_choice = 0;
  int residue_degree = 0;
  /// Index in the ambient group.
  int sigma_ambient = 0;
  /// Coset index in Gal(L/Q).
  int sigma = 0;
  int order = 0;
  /// Index of the conjugacy class of sigma in Gal(L/Q).
  int conjugacy_class = 0;
  /// The point f -> f(sigma), valued in the decomposition field.
  AlgebraPoint point;
  FixedFieldPtr decomposition_field;
  FrobeniusCertificates certificates;
  /// Residues of the values in F_p, when defined.
  std::optional<std::vector<std::uint64_t>> residues;
};

/// The algebraic Frobenius of A(L/Q) at p. The ring's base must be Q.
FrobeniusData algebraic_frobenius(const CoordinateRingPtr& a, std::uint64_t p, int factor_choice = 0);

/// Every factor choice gives the same point: the Frobenius elements are
/// conjugate, the values are related by the transport identity, and the
/// residues agree.
bool factor_choice_independent(const CoordinateRingPtr& a, std::uint64_t p);

/// The identity point if L is totally real (Sturm count of its primitive
/// minimal polynomial); otherwise RamifiedInfinitePlace.
AlgebraPoint frobenius_at_infinity(const CoordinateRingPtr& a);

/// Image of an ambient automorphism in Gal(L/K).
int frobenius_in_quotient(int sigma_ambient, const GaloisSubextension& l);

struct SweepEntry {
  std::uint64_t p = 0;
  bool good = false;
  std::vector<int> residue_degrees;
  std::optional<FrobeniusData> data;
};

/// Algebraic Frobenius for every prime in [lo, hi]; bad primes are listed
/// with good = false.
std::vector<SweepEntry> frobenius_sweep(const CoordinateRingPtr& a, std::uint64_t lo, std::uint64_t hi);

}  // namespace galoisdr
