#include <doctest.h>

#include <set>

#include "exact/poly_io.hpp"
#include "motives/realization.hpp"

using namespace galoisdr;

namespace {

QPoly P(const char* text) { return parse_polynomial(text); }

struct Suite {
  AmbientPtr n6 = splitting_field({P("x^3-2")});
  CoordinateRingPtr a6 = build_coordinate_ring(full_extension(n6));
  Subgroup order2;
  Subgroup a3;
  EtaleScheme point, cubic, regular, two;

  Suite() {
    const FiniteGroup& g = n6->group();
    for (const auto& h : all_subgroups(g)) {
      if (h.order() == 2 && order2.members.empty()) order2 = h;
      if (h.order() == 3) a3 = h;
    }
    point = make_etale_scheme(n6, {whole_group(g)});
    cubic = make_etale_scheme(n6, {order2});
    regular = make_etale_scheme(n6, {trivial_subgroup(g)});
    two = make_etale_scheme(n6, {whole_group(g), a3});
  }

  std::vector<EtaleScheme> schemes() const { return {point, cubic, regular, two}; }
};

const Suite& suite() {
  static const Suite s;
  return s;
}

// Orbits of G on (G/H1) x (G/H2), computed on raw cosets.
int orbit_count_oracle(const FiniteGroup& g, const Subgroup& h1, const Subgroup& h2) {
  const auto& t = g.table();
  auto coset = [&](int x, const Subgroup& h) {
    std::set<int> c;
    for (int m : h.members) c.insert(t[static_cast<std::size_t>(x)][static_cast<std::size_t>(m)]);
    return c;
  };
  std::set<std::pair<std::set<int>, std::set<int>>> seen;
  int orbits = 0;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = 0; b < g.order(); ++b) {
      auto pt = std::make_pair(coset(a, h1), coset(b, h2));
      if (seen.count(pt)) continue;
      ++orbits;
      for (int s = 0; s < g.order(); ++s) {
        seen.insert({coset(t[static_cast<std::size_t>(s)][static_cast<std::size_t>(a)], h1),
                     coset(t[static_cast<std::size_t>(s)][static_cast<std::size_t>(b)], h2)});
      }
    }
  }
  return orbits;
}

int inverse_of(const FiniteGroup& g, int x) {
  for (int y = 0; y < g.order(); ++y) {
    if (g.table()[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == g.identity()) return y;
  }
  return -1;
}

// <chi_v, chi_w> = dim Hom_G(V, W) for rational representations.
Rational character_pairing(const Motive& v, const Motive& w) {
  const FiniteGroup& g = v.group();
  auto cv = v.character(), cw = w.character();
  Rational s = 0;
  for (int x = 0; x < g.order(); ++x) s += cv[static_cast<std::size_t>(inverse_of(g, x))] * cw[static_cast<std::size_t>(x)];
  return s / g.order();
}

// Conjugacy classes of cyclic subgroups, straight from the table: this
// counts the irreducible rational representations.
int rational_class_count(const FiniteGroup& g) {
  const auto& t = g.table();
  std::set<std::set<int>> cyclic;
  for (int x = 0; x < g.order(); ++x) {
    std::set<int> c;
    int y = x;
    do {
      c.insert(y);
      y = t[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    } while (!c.count(y));
    cyclic.insert(c);
  }
  std::set<std::set<int>> reps;
  for (const auto& c : cyclic) {
    std::set<int> least = c;
    for (int s = 0; s < g.order(); ++s) {
      std::set<int> conj;
      for (int m : c) {
        conj.insert(t[static_cast<std::size_t>(t[static_cast<std::size_t>(s)][static_cast<std::size_t>(m)])]
                     [static_cast<std::size_t>(inverse_of(g, s))]);
      }
      least = std::min(least, conj);
    }
    reps.insert(least);
  }
  return static_cast<int>(reps.size());
}

Motive two_dim_irreducible() {
  Motive reg = motive_of(suite().regular);
  for (const auto& c : isotypic_components(reg)) {
    if (c.basis.size() == 4) return irreducible_summand(c).motive;
  }
  FAIL("no 4-dimensional isotypic component");
  return reg;
}

std::vector<Motive> suite_motives() {
  std::vector<Motive> out;
  for (const auto& x : suite().schemes()) out.push_back(motive_of(x));
  out.push_back(two_dim_irreducible());
  return out;
}

}  // namespace

TEST_CASE("motives of etale schemes") {
  const auto& s = suite();
  CHECK(motive_of(s.point).dim() == 1);
  CHECK(motive_of(s.point).character() == unit_motive(s.n6).character());
  CHECK(motive_of(s.cubic).dim() == 3);
  CHECK(motive_of(s.regular).dim() == 6);
  CHECK(motive_of(s.two).dim() == 3);
  // The cubic field's scheme is Spec of a field containing a root of x^3-2.
  auto cubic_field = fixed_field(s.n6, s.order2);
  CHECK(cubic_field->degree() == 3);
  CHECK(spec(cubic_field).components == s.cubic.components);

  std::vector<QMatrix> bad(6, QMatrix(1, 1, Rational(2)));
  CHECK_THROWS_AS(Motive(s.n6, bad), GaloisError);
}

TEST_CASE("sections count orbits") {
  const auto& s = suite();
  const FiniteGroup& g = s.n6->group();
  Motive h3 = motive_of(s.cubic);
  CHECK(sections(h3, whole_group(g)).size() == 1);
  CHECK(sections(h3, trivial_subgroup(g)).size() == 3);
  CHECK(sections(h3, fixed_field(s.n6, s.order2)).size() == 2);
  for (const auto& x : s.schemes()) {
    Motive v = motive_of(x);
    for (const auto& h : all_subgroups(g)) {
      int expected = 0;
      for (const auto& comp : x.components) expected += orbit_count_oracle(g, comp, h);
      CHECK(static_cast<int>(sections(v, h).size()) == expected);
    }
  }
}

TEST_CASE("sheaf condition and functorial restriction") {
  const FiniteGroup& g = suite().n6->group();
  auto subs = all_subgroups(g);
  for (const auto& v : suite_motives()) {
    for (const auto& small : subs) {
      for (const auto& big : subs) {
        if (!is_subset(small, big)) continue;
        // Sections for the bigger group sit inside those for the smaller.
        auto s_small = sections(v, small);
        EchelonBasis<RationalField> e(RationalField{}, static_cast<std::size_t>(v.dim()));
        for (const auto& x : s_small) e.add(x);
        for (const auto& x : sections(v, big)) CHECK(e.contains(x));
        if (is_normal_in(g, small, big)) CHECK(sheaf_condition(v, small, big));
      }
    }
  }
}

TEST_CASE("finite type level") {
  const auto& s = suite();
  const FiniteGroup& g = s.n6->group();
  auto unit = finite_type_level(unit_motive(s.n6));
  CHECK(unit.kernel == whole_group(g));
  CHECK(unit.certified);
  CHECK(finite_type_level(motive_of(s.regular)).kernel.order() == 1);
  CHECK(finite_type_level(motive_of(s.cubic)).kernel.order() == 1);
  auto quad = finite_type_level(motive_of(make_etale_scheme(s.n6, {s.a3})));
  CHECK(quad.kernel == s.a3);
  CHECK(quad.certified);
}

TEST_CASE("isotypic decomposition and irreducibles") {
  const auto& s = suite();
  Motive reg = motive_of(s.regular);
  auto comps = isotypic_components(reg);
  CHECK(static_cast<int>(comps.size()) == rational_class_count(s.n6->group()));
  std::multiset<std::size_t> dims;
  for (const auto& c : comps) dims.insert(c.basis.size());
  CHECK(dims == std::multiset<std::size_t>{1, 1, 4});
  for (const auto& c : comps) {
    auto irr = irreducible_summand(c);
    CHECK(irr.certified);
    CHECK(character_pairing(irr.motive, irr.motive) == 1);
    // Multiplicity in the regular representation equals the dimension.
    CHECK(character_pairing(irr.motive, reg) == irr.motive.dim());
  }
  Motive two = two_dim_irreducible();
  CHECK(two.dim() == 2);
  CHECK(hom_motives(two, unit_motive(s.n6)).empty());
}

TEST_CASE("isotypic components over the order-12 group") {
  auto n12 = splitting_field({P("x^3-2"), P("x^2-2")});
  auto reg = motive_of(make_etale_scheme(n12, {trivial_subgroup(n12->group())}));
  auto comps = isotypic_components(reg);
  CHECK(static_cast<int>(comps.size()) == rational_class_count(n12->group()));
  std::size_t total = 0;
  for (const auto& c : comps) total += c.basis.size();
  CHECK(total == 12);
}

TEST_CASE("de Rham dimension descent") {
  for (const auto& v : suite_motives()) CHECK(de_rham(v).dim() == v.dim());
  DeRham unit = de_rham(unit_motive(suite().n6));
  REQUIRE(unit.dim() == 1);
  // W = Q: the basis vector is a nonzero rational.
  const auto& w = unit.basis()[0][0];
  for (std::size_t i = 1; i < w.coords.size(); ++i) CHECK(w.coords[i] == 0);
  CHECK(w.coords[0] != 0);
}

TEST_CASE("Gamma comparison") {
  const auto& s = suite();
  for (const auto& x : s.schemes()) CHECK(gamma_comparison(x).ok());
  auto g2 = gamma_comparison(s.two);
  CHECK(g2.matrix.rows() == 3);
  CHECK(g2.fields[1]->degree() == 2);

  // The function gH -> g(r) for a root r fixed by H is in W and cubes to 2.
  const auto& n = *s.n6;
  const NumberField& nf = n.field();
  auto cubic_field = fixed_field(s.n6, s.order2);
  NFElement r;
  for (const auto& root : n.roots()[0]) {
    if (cubic_field->contains(root)) r = root;
  }
  REQUIRE(!r.coords.empty());
  DeRham w = de_rham(motive_of(s.cubic));
  TensorElement t, cube;
  for (const auto& pt : scheme_points(s.cubic)) {
    NFElement v = n.apply(pt.coset.front(), r);
    t.push_back(v);
    cube.push_back(nf.mul(v, nf.mul(v, v)));
  }
  CHECK(w.coordinates(t).has_value());
  CHECK(cube == TensorElement(3, nf.from_int(2)));
}

TEST_CASE("coaction and comodule axioms") {
  const auto& s = suite();
  auto unit = std::make_shared<const DeRham>(unit_motive(s.n6));
  Coaction cu = coaction(unit, s.a6);
  std::vector<NFElement> coeffs;
  for (const auto& q : cu.coeff[0][0]) coeffs.push_back(s.n6->field().from_rational(q));
  CHECK(s.a6->combine(coeffs) == s.a6->constant(s.n6->field().one()));

  for (const auto& v : suite_motives()) {
    auto w = std::make_shared<const DeRham>(v);
    Coaction c = coaction(w, s.a6);
    auto rep = verify_comodule(c);
    CHECK(rep.evaluation);
    CHECK(rep.coassociative);
    CHECK(rep.counit);
  }

  // Evaluation against raw permutations of the cubic scheme's points.
  auto perms = point_action(s.cubic);
  auto w = std::make_shared<const DeRham>(motive_of(s.cubic));
  Coaction c = coaction(w, s.a6);
  const NumberField& nf = s.n6->field();
  for (int tau = 0; tau < 6; ++tau) {
    int elem = s.a6->extension().quotient.rep(tau);
    for (std::size_t b = 0; b < 3; ++b) {
      TensorElement moved(3, nf.zero());
      for (std::size_t i = 0; i < 3; ++i) moved[static_cast<std::size_t>(perms[static_cast<std::size_t>(elem)][i])] = w->basis()[b][i];
      TensorElement got(3, nf.zero());
      for (std::size_t j = 0; j < 3; ++j) {
        NFElement sc = nf.zero();
        for (std::size_t k = 0; k < 6; ++k) {
          sc = nf.add(sc, nf.mul(nf.from_rational(c.coeff[b][j][k]), s.a6->basis()[k][static_cast<std::size_t>(tau)]));
        }
        for (std::size_t i = 0; i < 3; ++i) got[i] = nf.add(got[i], nf.mul(sc, w->basis()[j][i]));
      }
      CHECK(got == moved);
    }
  }
}

TEST_CASE("tensor, hom and faithfulness") {
  const auto& s = suite();
  Motive unit = unit_motive(s.n6);
  Motive h3 = motive_of(s.cubic);
  Motive t = tensor(h3, unit);
  CHECK(t.actions() == h3.actions());
  CHECK(hom_motives(h3, unit).size() == 1);

  auto motives = suite_motives();
  std::vector<Coaction> co;
  for (const auto& v : motives) co.push_back(coaction(std::make_shared<const DeRham>(v), s.a6));
  for (std::size_t i = 0; i < motives.size(); ++i) {
    for (std::size_t j = 0; j < motives.size(); ++j) {
      std::size_t dim = hom_motives(motives[i], motives[j]).size();
      CHECK(Rational(static_cast<long>(dim)) == character_pairing(motives[i], motives[j]));
      CHECK(comodule_homs(co[i], co[j]).size() == dim);
    }
  }
}

TEST_CASE("products of schemes and tensor compatibility") {
  const auto& s = suite();
  auto schemes = s.schemes();
  for (const auto& x : schemes) {
    for (const auto& y : schemes) {
      ProductScheme p = product(x, y);
      Motive hx = motive_of(x), hy = motive_of(y);
      Motive hp = motive_of(p.scheme);
      Motive t = tensor(hx, hy);
      CHECK(isomorphic(hp, t));
      // The pairing bijection intertwines the actions exactly.
      auto px = point_action(x), py = point_action(y), pp = point_action(p.scheme);
      std::size_t ny = py[0].size();
      bool intertwines = true;
      for (std::size_t g = 0; g < px.size(); ++g) {
        for (std::size_t pair = 0; pair < p.pair_index.size(); ++pair) {
          std::size_t moved = static_cast<std::size_t>(px[g][pair / ny]) * ny + static_cast<std::size_t>(py[g][pair % ny]);
          intertwines = intertwines && pp[g][static_cast<std::size_t>(p.pair_index[pair])] == p.pair_index[moved];
        }
      }
      CHECK(intertwines);
      if (hx.dim() * hy.dim() <= 18) CHECK(tensor_compatible(de_rham(hx), de_rham(hy), de_rham(t)));
    }
  }
}
