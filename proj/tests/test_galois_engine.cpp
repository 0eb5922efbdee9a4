#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "exact/factor_q.hpp"
#include "exact/poly_io.hpp"
#include "galois/serialize.hpp"
#include "galois/subfield.hpp"

using namespace galoisdr;

namespace {

QPoly P(const char* text) { return parse_polynomial(text); }

using Table = std::vector<std::vector<int>>;

// Oracles below read only the raw table.
int raw_identity(const Table& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < t.size(); ++j) ok = ok && t[i][j] == static_cast<int>(j);
    if (ok) return static_cast<int>(i);
  }
  return -1;
}

int raw_inverse(const Table& t, int a) {
  int e = raw_identity(t);
  for (std::size_t b = 0; b < t.size(); ++b) {
    if (t[static_cast<std::size_t>(a)][b] == e) return static_cast<int>(b);
  }
  return -1;
}

std::multiset<int> class_sizes(const Table& t) {
  std::multiset<int> sizes;
  std::set<int> seen;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (seen.count(static_cast<int>(x))) continue;
    std::set<int> cls;
    for (std::size_t g = 0; g < t.size(); ++g) {
      int gx = t[g][x];
      cls.insert(t[static_cast<std::size_t>(gx)][static_cast<std::size_t>(raw_inverse(t, static_cast<int>(g)))]);
    }
    seen.insert(cls.begin(), cls.end());
    sizes.insert(static_cast<int>(cls.size()));
  }
  return sizes;
}

std::multiset<int> element_orders(const Table& t) {
  std::multiset<int> orders;
  int e = raw_identity(t);
  for (std::size_t x = 0; x < t.size(); ++x) {
    int k = 1;
    for (int y = static_cast<int>(x); y != e; y = t[x][static_cast<std::size_t>(y)]) ++k;
    orders.insert(k);
  }
  return orders;
}

bool associative(const Table& t) {
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      for (std::size_t c = 0; c < t.size(); ++c) {
        if (t[static_cast<std::size_t>(t[a][b])][c] != t[a][static_cast<std::size_t>(t[b][c])]) return false;
      }
    }
  }
  return true;
}

bool is_rational_square(const Rational& q) {
  if (sgn(q) < 0) return false;
  return mpz_perfect_square_p(q.get_num_mpz_t()) != 0 && mpz_perfect_square_p(q.get_den_mpz_t()) != 0;
}

void check_ambient_invariants(const AmbientGaloisField& n) {
  const auto& f = n.field();
  REQUIRE(static_cast<int>(n.autos().size()) == n.degree());
  CHECK(n.autos()[0] == f.generator());
  for (std::size_t i = 1; i + 1 < n.autos().size(); ++i) CHECK(nf_lex_less(n.autos()[i], n.autos()[i + 1]));
  for (const auto& a : n.autos()) CHECK(f.is_zero(f.eval(f.modulus(), a)));
  CHECK(associative(n.group().table()));
  CHECK(raw_identity(n.group().table()) == 0);
  for (std::size_t p = 0; p < n.polys().size(); ++p) {
    for (const auto& r : n.roots()[p]) CHECK(f.is_zero(f.eval(n.polys()[p], r)));
  }
  // sigma_i(sigma_j(x)) = (sigma_i o sigma_j)(x) on a non-generator element.
  NFElement x = f.add(f.generator(), f.mul(f.generator(), f.generator()));
  for (int i = 0; i < n.degree(); ++i) {
    for (int j = 0; j < n.degree(); ++j) {
      CHECK(n.apply(i, n.apply(j, x)) == n.apply(n.group().mul(i, j), x));
    }
  }
}

}  // namespace

TEST_CASE("splitting field of x^2 - 2") {
  auto n = splitting_field({P("x^2-2")});
  CHECK(n->degree() == 2);
  CHECK(n->group().order() == 2);
  check_ambient_invariants(*n);
}

TEST_CASE("splitting field of x^3 - 2 is S3") {
  auto n = splitting_field({P("x^3-2")});
  CHECK(n->degree() == 6);
  check_ambient_invariants(*n);
  CHECK(class_sizes(n->group().table()) == std::multiset<int>{1, 2, 3});
  CHECK(n->roots()[0].size() == 3);
  auto classes = conjugacy_classes(n->group(), whole_group(n->group()));
  std::multiset<int> sizes;
  for (const auto& c : classes) sizes.insert(static_cast<int>(c.size()));
  CHECK(sizes == class_sizes(n->group().table()));
}

TEST_CASE("splitting field of x^3 - 2 and x^2 - 2 is S3 x C2") {
  auto n = splitting_field({P("x^3-2"), P("x^2-2")});
  CHECK(n->degree() == 12);
  check_ambient_invariants(*n);
  const Table& t = n->group().table();
  CHECK(class_sizes(t) == std::multiset<int>{1, 1, 2, 2, 3, 3});
  CHECK(element_orders(t) == std::multiset<int>{1, 2, 2, 2, 2, 2, 2, 2, 3, 3, 6, 6});
  // Input order does not matter.
  auto m = splitting_field({P("x^2-2"), P("x^3-2")});
  CHECK(m->field().modulus() == n->field().modulus());
}

TEST_CASE("degree cap") {
  CHECK_THROWS_WITH_AS(splitting_field({P("x^3-2"), P("x^2-2")}, 6), doctest::Contains("exceed"), GaloisError);
  try {
    splitting_field({P("x^5-x-1")});
    FAIL("expected DegreeCapExceeded");
  } catch (const GaloisError& e) {
    CHECK(e.code() == ErrorCode::DegreeCapExceeded);
  }
  CHECK_THROWS_AS(splitting_field({P("7")}), GaloisError);
}

TEST_CASE("fixed fields") {
  auto n = splitting_field({P("x^3-2")});
  const FiniteGroup& g = n->group();
  auto whole = fixed_field(n, whole_group(g));
  CHECK(whole->degree() == 1);
  auto triv = fixed_field(n, trivial_subgroup(g));
  CHECK(triv->degree() == 6);

  // A3: the elements of order 3 with the identity.
  Subgroup a3;
  for (int x = 0; x < 6; ++x) {
    if (g.element_order(x) != 2) a3.members.push_back(x);
  }
  REQUIRE(a3.order() == 3);
  auto quad = fixed_field(n, a3);
  CHECK(quad->degree() == 2);
  CHECK(quad->minimal_polynomial().degree() == 2);
  // Q(sqrt d) = Q(sqrt -3) iff d / -3 is a square.
  CHECK(is_rational_square(poly_discriminant(quad->minimal_polynomial()) / Rational(-3)));
  for (const auto& b : quad->basis()) {
    for (int h : a3.members) CHECK(n->apply(h, b) == b);
  }
}

TEST_CASE("Galois correspondence over all subgroups") {
  std::vector<std::vector<QPoly>> suite = {
      {P("x^2-2")}, {P("x^3-2")}, {P("x^4-5*x^2+5")}, {P("x^4+1")}, {P("x^3-2"), P("x^2-2")}};
  for (const auto& polys : suite) {
    auto n = splitting_field(polys);
    for (const auto& h : all_subgroups(n->group())) {
      auto l = fixed_field(n, h);
      CHECK(l->degree() * h.order() == n->degree());
      CHECK(l->minimal_polynomial().degree() == l->degree());
      CHECK(l->stabilizer() == h);
    }
  }
}

TEST_CASE("orbits on roots match irreducibility") {
  std::vector<QPoly> inputs = {P("x^4-1"), P("x^3-2"), P("x^4-5*x^2+5"), P("x^2-2")};
  for (const auto& f : inputs) {
    auto n = splitting_field({f});
    const auto& roots = n->roots()[0];
    std::set<int> orbit;
    for (int s = 0; s < n->degree(); ++s) orbit.insert(n->root_permutation(s, 0)[0]);
    bool transitive = orbit.size() == roots.size();
    CHECK(transitive == is_irreducible_over_q(n->polys()[0]));
  }
}

TEST_CASE("extend_ambient") {
  auto n6 = splitting_field({P("x^3-2")});

  SUBCASE("already split") {
    auto ext = extend_ambient(n6, P("x^2-1"));
    CHECK(ext.field->same_field(*n6));
    CHECK(ext.iota == n6->field().generator());
    for (int s = 0; s < 6; ++s) CHECK(ext.pi[static_cast<std::size_t>(s)] == s);
  }

  SUBCASE("x^3-2 ambient by x^2-2") {
    auto ext = extend_ambient(n6, P("x^2-2"));
    const auto& big = *ext.field;
    CHECK(big.degree() == 12);
    check_ambient_invariants(big);
    CHECK(extension_kernel(ext).order() == 2);
    // pi is a surjective homomorphism, and iota intertwines the actions.
    std::set<int> image(ext.pi.begin(), ext.pi.end());
    CHECK(image.size() == 6);
    for (int a = 0; a < 12; ++a) {
      for (int b = 0; b < 12; ++b) {
        CHECK(ext.pi[static_cast<std::size_t>(big.group().mul(a, b))] ==
              n6->group().mul(ext.pi[static_cast<std::size_t>(a)], ext.pi[static_cast<std::size_t>(b)]));
      }
      NFElement x = n6->field().generator();
      for (int k = 0; k < 6; ++k) {
        CHECK(embed(ext, *n6, n6->apply(ext.pi[static_cast<std::size_t>(a)], x)) == big.apply(a, embed(ext, *n6, x)));
        x = n6->field().mul(x, n6->field().generator());
      }
    }
  }

  SUBCASE("rational ambient by x^2-2") {
    auto ext = extend_ambient(rational_ambient(), P("x^2-2"));
    CHECK(ext.field->degree() == 2);
    CHECK(ext.pi == std::vector<int>{0, 0});
  }
}

TEST_CASE("extend_ambient is functorial") {
  auto a = splitting_field({P("x^2-2")});
  auto e1 = extend_ambient(a, P("x^2-3"));
  auto e2 = extend_ambient(e1.field, P("x^2-5"));
  const auto& c = *e2.field;
  CHECK(c.degree() == 8);
  // The direct map: sigma(iota(theta_A)) = iota(pi(sigma)(theta_A)).
  NFElement iota = embed(e2, *e1.field, e1.iota);
  for (int s = 0; s < c.degree(); ++s) {
    NFElement moved = c.apply(s, iota);
    int direct = -1;
    for (int t = 0; t < a->degree(); ++t) {
      if (c.field().eval(a->field().to_poly(a->autos()[static_cast<std::size_t>(t)]), iota) == moved) direct = t;
    }
    CHECK(direct == e1.pi[static_cast<std::size_t>(e2.pi[static_cast<std::size_t>(s)])]);
  }
}

TEST_CASE("embeddings and restriction") {
  auto q2 = splitting_field({P("x^2-2")});
  CHECK(embeddings(full_extension(q2), q2).size() == 2);

  auto n6 = splitting_field({P("x^3-2")});
  auto full6 = full_extension(n6);
  auto self = embeddings(full6, n6);
  CHECK(self.size() == 6);

  auto n12 = splitting_field({P("x^3-2"), P("x^2-2")});
  auto cross = embeddings(full6, n12);
  CHECK(cross.size() == 6);
  std::set<std::vector<Rational>> images;
  const auto& f6 = n6->field();
  for (const auto& phi : cross) {
    images.insert(phi.image.coords);
    // Homomorphism on products of power-basis elements.
    NFElement t = f6.generator();
    NFElement u = f6.add(f6.mul(t, t), f6.one());
    CHECK(apply_embedding(phi, f6.mul(t, u)) == n12->field().mul(apply_embedding(phi, t), apply_embedding(phi, u)));
    CHECK(apply_embedding(phi, f6.add(t, u)) == n12->field().add(apply_embedding(phi, t), apply_embedding(phi, u)));
  }
  CHECK(images.size() == 6);

  // identity restricts to the identity; with L1 = N and phi = id, tau itself
  auto id = inclusion(full6.top);
  for (int tau = 0; tau < 6; ++tau) {
    int s = restrict_automorphism(tau, id, full6);
    CHECK(full6.quotient.rep(s) == tau);
  }
  for (const auto& phi : cross) CHECK(restrict_automorphism(0, phi, full6) == 0);

  // quadratic subfield, tau a 3-cycle: identity of Gal(L1/Q)
  Subgroup a3;
  for (int x = 0; x < 6; ++x) {
    if (n6->group().element_order(x) != 2) a3.members.push_back(x);
  }
  auto quad = make_subextension(n6, a3, whole_group(n6->group()));
  auto incl = inclusion(quad.top);
  for (int tau : a3.members) CHECK(restrict_automorphism(tau, incl, quad) == 0);
  for (int tau = 0; tau < 6; ++tau) {
    if (!a3.contains(tau)) CHECK(restrict_automorphism(tau, incl, quad) == 1);
  }

  // An embedding of N6 over the quadratic field must fix it.
  auto over_quad = make_subextension(n6, trivial_subgroup(n6->group()), a3);
  CHECK(embeddings(over_quad, n6).size() == 3);
  int transposition = -1;
  for (int x = 0; x < 6; ++x) {
    if (n6->group().element_order(x) == 2) transposition = x;
  }
  Embedding bad{over_quad.top, n6, n6->apply(transposition, over_quad.top->primitive())};
  try {
    restrict_automorphism(0, bad, over_quad);
    FAIL("expected NotAnEmbedding");
  } catch (const GaloisError& e) {
    CHECK(e.code() == ErrorCode::NotAnEmbedding);
  }

  // N6 does not fit in Q(sqrt 2).
  try {
    embeddings(full6, q2);
    FAIL("expected NoEmbedding");
  } catch (const GaloisError& e) {
    CHECK(e.code() == ErrorCode::NoEmbedding);
  }
}

TEST_CASE("ambient serialization round trip and tamper detection") {
  auto n = splitting_field({P("x^3-2")});
  auto j = ambient_to_json(*n);
  auto back = ambient_from_json(j);
  CHECK(back->same_field(*n));
  CHECK(back->group().table() == n->group().table());
  CHECK(ambient_to_json(*back) == j);

  auto tampered = j;
  tampered["autos"][1][0] = "5";
  try {
    ambient_from_json(tampered);
    FAIL("expected CorruptCache");
  } catch (const GaloisError& e) {
    CHECK(e.code() == ErrorCode::CorruptCache);
  }
  auto swapped = j;
  std::swap(swapped["table"][1][2], swapped["table"][1][3]);
  CHECK_THROWS_AS(ambient_from_json(swapped), GaloisError);
  CHECK_THROWS_AS(ambient_from_json(nlohmann::json::parse(R"({"degree": 2})")), GaloisError);
}
