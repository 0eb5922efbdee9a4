#include <doctest.h>

#include <map>

#include "dr/restriction.hpp"
#include "exact/poly_io.hpp"
#include "frobenius/frobenius.hpp"

using namespace galoisdr;

namespace {

QPoly P(const char* text) { return parse_polynomial(text); }

struct Suite {
  AmbientPtr q2 = splitting_field({P("x^2-2")});
  AmbientPtr n6 = splitting_field({P("x^3-2")});
  AmbientPtr c4 = splitting_field({P("x^4-5*x^2+5")});
  CoordinateRingPtr a6 = build_coordinate_ring(full_extension(n6));
};

const Suite& suite() {
  static const Suite s;
  return s;
}

// Brute-force count of cube roots of 2 mod p; for a cubic with nonzero
// discriminant mod p this determines the factorization pattern.
std::vector<int> cubic_pattern_oracle(std::uint64_t p) {
  int roots = 0;
  for (std::uint64_t r = 0; r < p; ++r) roots += (r * r % p * r % p) == 2 % p ? 1 : 0;
  if (roots == 0) return {3};
  if (roots == 1) return {1, 2};
  return {1, 1, 1};
}

// Euler's criterion, by repeated multiplication.
bool is_square_mod(std::int64_t a, std::uint64_t p) {
  std::uint64_t x = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) %
                                                static_cast<std::int64_t>(p));
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < (p - 1) / 2; ++i) r = r * x % p;
  return r == 1;
}

// Element orders straight from the multiplication table.
int table_order(const FiniteGroup& g, int x) {
  const auto& t = g.table();
  int k = 1;
  for (int y = x; y != g.identity(); y = t[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)]) ++k;
  return k;
}

bool is_rational(const NFElement& x) {
  for (std::size_t i = 1; i < x.coords.size(); ++i) {
    if (x.coords[i] != 0) return false;
  }
  return true;
}

const std::vector<std::uint64_t> kPrimes = {5, 7, 11, 13, 31};

}  // namespace

TEST_CASE("Frobenius elements of x^3-2 match the mod-p factorization") {
  const auto& n = *suite().n6;
  std::map<std::uint64_t, int> expected_order = {{5, 2}, {7, 3}, {31, 1}};
  for (std::uint64_t p : kPrimes) {
    CAPTURE(p);
    PrimeContext ctx(suite().n6, p);
    int sigma = frobenius_element(ctx);
    auto oracle = cubic_pattern_oracle(p);
    CHECK(cycle_type(n.root_permutation(sigma, 0)) == oracle);
    CHECK(splitting_type(n, 0, p) == oracle);
    CHECK(table_order(n.group(), sigma) == ctx.residue_degree());
    if (expected_order.count(p)) CHECK(table_order(n.group(), sigma) == expected_order[p]);
  }
}

TEST_CASE("Dedekind consistency across the suite") {
  for (const auto& amb : {suite().q2, suite().n6, suite().c4}) {
    for (std::uint64_t p = 3; p < 80; ++p) {
      if (!is_prime(p)) continue;
      try {
        check_good_prime(*amb, p);
      } catch (const GaloisError& e) {
        CHECK(e.code() == ErrorCode::RamifiedOrBadPrime);
        continue;
      }
      PrimeContext ctx(amb, p);
      int sigma = frobenius_element(ctx);
      for (int i = 0; i < static_cast<int>(amb->polys().size()); ++i) {
        CHECK(cycle_type(amb->root_permutation(sigma, i)) == splitting_type(*amb, i, p));
      }
    }
  }
}

TEST_CASE("bad primes and invalid input") {
  CHECK_THROWS_AS(PrimeContext(suite().n6, 2), GaloisError);
  try {
    PrimeContext ctx(suite().n6, 3);
    FAIL("3 ramifies in the splitting field of x^3-2");
  } catch (const GaloisError& e) {
    CHECK(e.code() == ErrorCode::RamifiedOrBadPrime);
  }
  try {
    check_good_prime(*suite().n6, 6);
    FAIL("6 is not prime");
  } catch (const GaloisError& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  CHECK_THROWS_AS(PrimeContext(suite().n6, 7, 5), GaloisError);
}

TEST_CASE("algebraic Frobenius certificates over S3") {
  const auto& a = suite().a6;
  for (std::uint64_t p : kPrimes) {
    CAPTURE(p);
    FrobeniusData d = algebraic_frobenius(a, p);
    CHECK(d.certificates.fixed);
    CHECK(d.certificates.transport);
    CHECK(d.order == d.residue_degree);
    CHECK(d.point.images.size() == 6);
    CHECK(d.decomposition_field->degree() * d.order == 6);
    // Every value lies in the decomposition field.
    for (const auto& v : d.point.images) CHECK(d.decomposition_field->contains(v));
    CHECK(factor_choice_independent(a, p));
  }
}

TEST_CASE("each factor choice gives a conjugate Frobenius and the same point") {
  const auto& a = suite().a6;
  const FiniteGroup& g = a->group();
  for (std::uint64_t p : kPrimes) {
    CAPTURE(p);
    FrobeniusData base = algebraic_frobenius(a, p);
    std::size_t count = PrimeContext(suite().n6, p).all_factors().size();
    CHECK(count * static_cast<std::size_t>(base.residue_degree) == 6);
    for (std::size_t j = 0; j < count; ++j) {
      FrobeniusData d = algebraic_frobenius(a, p, static_cast<int>(j));
      bool found = false;
      for (int s = 0; s < g.order(); ++s) {
        if (g.table()[static_cast<std::size_t>(g.table()[static_cast<std::size_t>(s)][static_cast<std::size_t>(base.sigma)])]
                     [static_cast<std::size_t>(g.inv(s))] != d.sigma) {
          continue;
        }
        bool transported = true;
        for (std::size_t i = 0; i < 6; ++i) transported = transported && d.point.images[i] == a->act(s, base.point.images[i]);
        found = found || transported;
      }
      CHECK(found);
      CHECK(d.conjugacy_class == base.conjugacy_class);
    }
  }
}

TEST_CASE("trivial and 3-cycle Frobenius points") {
  const auto& a = suite().a6;
  FrobeniusData d31 = algebraic_frobenius(a, 31);
  CHECK(d31.point == counit_point(a));
  for (const auto& v : d31.point.images) CHECK(is_rational(v));
  CHECK(d31.residues.has_value());

  FrobeniusData d7 = algebraic_frobenius(a, 7);
  CHECK(d7.decomposition_field->degree() == 2);
  // The quadratic subfield is Q(sqrt(-3)): its primitive's minimal
  // polynomial has discriminant -3 times a square.
  Rational disc = poly_discriminant(d7.decomposition_field->minimal_polynomial());
  Rational ratio = disc / Rational(-3);
  mpz_class num = ratio.get_num(), den = ratio.get_den();
  CHECK(ratio > 0);
  CHECK(mpz_perfect_square_p(num.get_mpz_t()) != 0);
  CHECK(mpz_perfect_square_p(den.get_mpz_t()) != 0);
  for (const auto& v : d7.point.images) CHECK(d7.decomposition_field->contains(v));
}

TEST_CASE("Frobenius at the infinite place") {
  CHECK(frobenius_at_infinity(build_coordinate_ring(full_extension(suite().q2))).images.size() == 2);
  auto a4 = build_coordinate_ring(full_extension(suite().c4));
  CHECK(a4->dim() == 4);
  CHECK(frobenius_at_infinity(a4) == galois_to_point(a4, a4->group().identity()));
  try {
    frobenius_at_infinity(suite().a6);
    FAIL("x^3-2 has complex roots");
  } catch (const GaloisError& e) {
    CHECK(e.code() == ErrorCode::RamifiedInfinitePlace);
  }
}

TEST_CASE("Frobenius in the quadratic quotient and restriction compatibility") {
  const auto& n6 = suite().n6;
  Subgroup a3;
  for (int x = 0; x < n6->group().order(); ++x) {
    if (table_order(n6->group(), x) != 2) a3.members.push_back(x);
  }
  auto quad = make_subextension(n6, a3, whole_group(n6->group()));
  CHECK(frobenius_in_quotient(0, full_extension(n6)) == 0);

  auto aq = build_coordinate_ring(quad);
  RestrictionMap r = restriction(inclusion(quad.top), aq, suite().a6);
  for (std::uint64_t p : kPrimes) {
    CAPTURE(p);
    FrobeniusData dn = algebraic_frobenius(suite().a6, p);
    FrobeniusData dq = algebraic_frobenius(aq, p);
    int image = frobenius_in_quotient(dn.sigma_ambient, quad);
    CHECK(image == dq.sigma);
    // p splits in Q(sqrt(-3)) exactly when -3 is a square mod p.
    CHECK((image == quad.quotient.group().identity()) == is_square_mod(-3, p));
    // f(Frob_L) = (restriction of f)(Frob_N) for every basis f of A(L).
    for (int i = 0; i < aq->dim(); ++i) {
      std::vector<NFElement> column;
      for (int k = 0; k < suite().a6->dim(); ++k) column.push_back(r.matrix(static_cast<std::size_t>(k), static_cast<std::size_t>(i)));
      GroupFunction lifted = suite().a6->combine(column);
      CHECK(lifted[static_cast<std::size_t>(dn.sigma)] == dq.point.images[static_cast<std::size_t>(i)]);
    }
  }
  CHECK(frobenius_in_quotient(algebraic_frobenius(suite().a6, 7).sigma_ambient, quad) == 0);
  CHECK(frobenius_in_quotient(algebraic_frobenius(suite().a6, 5).sigma_ambient, quad) != 0);
}

TEST_CASE("sweep over small primes") {
  auto entries = frobenius_sweep(suite().a6, 2, 500);
  std::map<int, int> freq;
  int good = 0;
  for (const auto& e : entries) {
    CAPTURE(e.p);
    if (!e.good) {
      CHECK((e.p == 2 || e.p == 3));
      continue;
    }
    ++good;
    REQUIRE(e.data.has_value());
    CHECK(e.residue_degrees == cubic_pattern_oracle(e.p));
    CHECK(e.data->certificates.fixed);
    CHECK(e.data->certificates.transport);
    ++freq[e.data->order];
  }
  CHECK(good == 93);
  // Chebotarev (statistical, so only a warning): densities 1/6, 1/2, 1/3 for orders 1, 2, 3.
  WARN(std::abs(freq[1] / double(good) - 1.0 / 6) < 0.15);
  WARN(std::abs(freq[2] / double(good) - 1.0 / 2) < 0.15);
  WARN(std::abs(freq[3] / double(good) - 1.0 / 3) < 0.15);
}
