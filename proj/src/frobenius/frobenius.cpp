#include "frobenius/frobenius.hpp"

#include <algorithm>

#include "exact/real_roots.hpp"

namespace galoisdr {

namespace {

bool divides(std::uint64_t p, const mpz_class& z) { return mpz_divisible_ui_p(z.get_mpz_t(), p) != 0; }

bool has_p_denominator(std::uint64_t p, const std::vector<Rational>& v) {
  return std::any_of(v.begin(), v.end(), [&](const Rational& q) { return divides(p, q.get_den()); });
}

void bad_prime(std::uint64_t p, const std::string& why) {
  fail(ErrorCode::RamifiedOrBadPrime, "p = " + std::to_string(p) + ": " + why);
}

}  // namespace

void check_good_prime(const AmbientGaloisField& n, std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    fail(ErrorCode::InvalidArgument, std::to_string(p) + " is not a prime below 2^32");
  }
  const QPoly& m = n.field().modulus();
  if (has_p_denominator(p, m.coeffs())) bad_prime(p, "divides a denominator of the modulus");
  if (divides(p, n.field().discriminant().get_num())) bad_prime(p, "divides the discriminant of the modulus");
  for (const auto& a : n.autos()) {
    if (has_p_denominator(p, a.coords)) bad_prime(p, "divides a denominator of an automorphism");
  }
  for (std::size_t i = 0; i < n.polys().size(); ++i) {
    if (has_p_denominator(p, n.polys()[i].coeffs())) bad_prime(p, "divides a denominator of an input polynomial");
    if (divides(p, poly_discriminant(n.polys()[i]).get_num())) {
      bad_prime(p, "divides the discriminant of an input polynomial");
    }
    for (const auto& r : n.roots()[i]) {
      if (has_p_denominator(p, r.coords)) bad_prime(p, "divides a denominator of a stored root");
    }
  }
}

PrimeContext::PrimeContext(AmbientPtr ambient, std::uint64_t p, int factor_choice)
    : ambient_(std::move(ambient)), fp_((check_good_prime(*ambient_, p), p)), choice_(factor_choice) {
  auto reduced = reduce_mod_p(fp_, ambient_->field().modulus());
  if (!reduced) bad_prime(p, "modulus is not p-integral");
  factors_ = factor_squarefree_mod_p(fp_, *reduced);
  std::sort(factors_.begin(), factors_.end(), fp_lex_less);
  if (factor_choice < 0 || static_cast<std::size_t>(factor_choice) >= factors_.size()) {
    fail(ErrorCode::InvalidArgument, "factor choice out of range");
  }
}

std::optional<FpPoly> PrimeContext::reduce(const NFElement& x) const {
  std::vector<std::uint64_t> c;
  for (const auto& q : x.coords) {
    auto r = fp_.reduce(q);
    if (!r) return std::nullopt;
    c.push_back(*r);
  }
  PolyRing<PrimeField> R(fp_);
  return R.rem(FpPoly(std::move(c)), factor());
}

int frobenius_element(const PrimeContext& ctx) {
  const FpPoly& g = ctx.factor();
  PolyRing<PrimeField> R(ctx.residue_prime_field());
  FpPoly target = R.powmod(R.rem(R.x(), g), Integer(static_cast<unsigned long>(ctx.p())), g);
  const AmbientGaloisField& n = *ctx.ambient();
  int found = -1;
  for (int s = 0; s < n.group().order(); ++s) {
    if (ctx.reduce(n.autos()[static_cast<std::size_t>(s)]) == target) {
      if (found >= 0) fail(ErrorCode::Internal, "Frobenius element is not unique");
      found = s;
    }
  }
  if (found < 0) fail(ErrorCode::Internal, "no automorphism reduces to the p-power map");
  return found;
}

std::vector<int> splitting_type(const AmbientGaloisField& n, int poly, std::uint64_t p) {
  check_good_prime(n, p);
  PrimeField fp(p);
  auto f = reduce_mod_p(fp, n.polys()[static_cast<std::size_t>(poly)]);
  std::vector<int> degrees;
  for (const auto& g : factor_squarefree_mod_p(fp, *f)) degrees.push_back(g.degree());
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

FrobeniusData algebraic_frobenius(const CoordinateRingPtr& a, std::uint64_t p, int factor_choice) {
  const GaloisSubextension& ext = a->extension();
  if (ext.base->degree() != 1) fail(ErrorCode::InvalidArgument, "Frobenius points need base field Q");
  PrimeContext ctx(ext.ambient, p, factor_choice);
  const FiniteGroup& g = a->group();

  FrobeniusData d;
  d.p = p;
  d.factor_choice = factor_choice;
  d.residue_degree = ctx.residue_degree();
  d.sigma_ambient = frobenius_element(ctx);
  d.sigma = ext.quotient.coset_of(d.sigma_ambient);
  d.order = g.element_order(d.sigma);
  auto classes = conjugacy_classes(g, whole_group(g));
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (std::binary_search(classes[c].begin(), classes[c].end(), d.sigma)) d.conjugacy_class = static_cast<int>(c);
  }
  std::vector<int> gens = ext.inner.members;
  gens.push_back(d.sigma_ambient);
  d.decomposition_field = fixed_field(ext.ambient, generate(ext.ambient->group(), gens));

  std::vector<NFElement> values;
  for (const auto& f : a->basis()) values.push_back(f[static_cast<std::size_t>(d.sigma)]);

  d.certificates.fixed = true;
  for (const auto& v : values) {
    if (a->act(d.sigma, v) != v) d.certificates.fixed = false;
  }
  d.certificates.transport = true;
  for (int s = 0; s < g.order(); ++s) {
    std::size_t moved = static_cast<std::size_t>(g.conj(s, d.sigma));
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (a->basis()[i][moved] != a->act(s, values[i])) d.certificates.transport = false;
    }
  }
  std::vector<std::uint64_t> residues;
  bool integral = true, rational = true;
  for (const auto& v : values) {
    auto r = ctx.reduce(v);
    if (!r) {
      integral = false;
      break;
    }
    rational = rational && r->degree() <= 0;
    residues.push_back(r->is_zero() ? 0 : (*r)[0]);
  }
  if (integral) {
    d.certificates.residues_rational = rational;
    if (rational) d.residues = std::move(residues);
  }
  d.point = AlgebraPoint{a, d.decomposition_field, std::move(values)};
  return d;
}

bool factor_choice_independent(const CoordinateRingPtr& a, std::uint64_t p) {
  const FiniteGroup& g = a->group();
  FrobeniusData base = algebraic_frobenius(a, p, 0);
  std::size_t count = PrimeContext(a->extension().ambient, p).all_factors().size();
  for (std::size_t j = 0; j < count; ++j) {
    FrobeniusData d = algebraic_frobenius(a, p, static_cast<int>(j));
    if (!d.certificates.fixed || !d.certificates.transport) return false;
    if (d.certificates.residues_rational == std::optional<bool>(false)) return false;
    if (base.residues && d.residues && *base.residues != *d.residues) return false;
    bool related = false;
    for (int s = 0; s < g.order() && !related; ++s) {
      if (g.conj(s, base.sigma) != d.sigma) continue;
      related = true;
      for (std::size_t i = 0; i < d.point.images.size(); ++i) {
        if (d.point.images[i] != a->act(s, base.point.images[i])) related = false;
      }
    }
    if (!related) return false;
  }
  return true;
}

AlgebraPoint frobenius_at_infinity(const CoordinateRingPtr& a) {
  const GaloisSubextension& ext = a->extension();
  if (ext.base->degree() != 1) fail(ErrorCode::InvalidArgument, "infinite place needs base field Q");
  const QPoly& m = ext.top->minimal_polynomial();
  if (count_real_roots(m) != m.degree()) {
    fail(ErrorCode::RamifiedInfinitePlace, "the field is not totally real, so the infinite place ramifies");
  }
  return galois_to_point(a, a->group().identity());
}

int frobenius_in_quotient(int sigma_ambient, const GaloisSubextension& l) {
  int c = l.quotient.coset_of(sigma_ambient);
  if (c < 0) fail(ErrorCode::InvalidArgument, "automorphism does not fix the base field");
  return c;
}

std::vector<SweepEntry> frobenius_sweep(const CoordinateRingPtr& a, std::uint64_t lo, std::uint64_t hi) {
  std::vector<SweepEntry> out;
  const AmbientGaloisField& n = a->ambient();
  for (std::uint64_t p = std::max<std::uint64_t>(lo, 2); p <= hi; ++p) {
    if (!is_prime(p)) continue;
    SweepEntry e;
    e.p = p;
    try {
      check_good_prime(n, p);
      e.good = true;
    } catch (const GaloisError& err) {
      if (err.code() != ErrorCode::RamifiedOrBadPrime) throw;
    }
    if (e.good) {
      for (int i = 0; i < static_cast<int>(n.polys().size()); ++i) {
        auto t = splitting_type(n, i, p);
        e.residue_degrees.insert(e.residue_degrees.end(), t.begin(), t.end());
      }
      std::sort(e.residue_degrees.begin(), e.residue_degrees.end());
      e.data = algebraic_frobenius(a, p);
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace galoisdr
