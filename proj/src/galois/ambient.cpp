#include "galois/ambient.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "exact/factor_nf.hpp"
#include "exact/factor_q.hpp"

namespace galoisdr {

namespace {

RationalField kQ;

struct NFLess {
  bool operator()(const NFElement& a, const NFElement& b) const { return nf_lex_less(a, b); }
};

struct Adjunction {
  NumberField field;
  NFElement old_generator;  // image of the previous generator
  NFElement root;           // the adjoined root
  Rational c;               // new generator = root + c * old generator
};

// Adjoins a root y of the monic irreducible h over f. The new generator is
// y + c*t for the least c >= 0 whose characteristic polynomial (the norm of
// h(z - c*t)) is squarefree.
Adjunction adjoin_root(const NumberField& f, const NFPoly& h, int cap) {
  int d = f.degree();
  int e = h.degree();
  if (static_cast<long>(d) * e > cap) {
    fail(ErrorCode::DegreeCapExceeded, "splitting field degree would exceed " + std::to_string(cap));
  }
  NFPolyRing R(f);
  PolyRing<RationalField> QR(kQ);
  const NFElement t = f.generator();
  std::size_t dd = static_cast<std::size_t>(d);
  std::size_t big = dd * static_cast<std::size_t>(e);
  for (long c = 0; c < 10000; ++c) {
    NFElement ct = f.scale(t, Rational(c));
    QPoly m = norm_poly(f, R.shift(h, f.neg(ct)));
    if (!QR.is_squarefree(m)) continue;

    // Coordinates of the powers of y + c*t in the basis y^b t^a of F[y]/(h).
    QMatrix powers(big, big, Rational(0));
    NFPoly step = R.add(R.x(), R.constant(ct));
    NFPoly cur = R.one();
    for (std::size_t k = 0; k < big; ++k) {
      for (std::size_t b = 0; b < cur.size(); ++b) {
        for (std::size_t a = 0; a < dd; ++a) powers(b * dd + a, k) = cur[b].coords[a];
      }
      cur = R.rem(R.mul(cur, step), h);
    }
    auto coords_of = [&](std::size_t index) {
      QVector rhs(big, Rational(0));
      rhs[index] = 1;
      auto sol = solve(kQ, powers, rhs);
      if (!sol) fail(ErrorCode::Internal, "primitive element does not generate the tower");
      return NFElement{std::move(*sol)};
    };
    NumberField n(m);
    NFElement root = coords_of(dd);
    NFElement old_gen = d >= 2 ? coords_of(1) : n.from_rational(t.coords[0]);
    return Adjunction{std::move(n), std::move(old_gen), std::move(root), Rational(c)};
  }
  fail(ErrorCode::Internal, "no primitive element found");
}

struct TowerTerm {
  int poly;
  NFElement root;
  Rational coeff;
};

// A splitting field under construction.
struct Tower {
  NumberField field;
  NFElement base_generator;  // image of the starting field's generator
  std::vector<QPoly> polys;
  std::vector<std::vector<NFElement>> roots;
  std::vector<TowerTerm> terms;
};

void grow(Tower& t, const QPoly& f, int cap) {
  int poly_index = static_cast<int>(t.polys.size());
  NFPoly rest = lift_poly(t.field, f);
  std::vector<NFElement> found;
  while (true) {
    NFPolyRing R(t.field);
    auto factors = factor_squarefree_over_nf(t.field, rest);
    NFPoly nonlinear = R.one();
    const NFPoly* pick = nullptr;
    for (const auto& g : factors) {
      if (g.degree() == 1) {
        found.push_back(t.field.neg(g[0]));
      } else {
        nonlinear = R.mul(nonlinear, g);
        if (pick == nullptr) pick = &g;
      }
    }
    if (pick == nullptr) break;

    Adjunction a = adjoin_root(t.field, *pick, cap);
    const NumberField old = t.field;
    auto map = [&](const NFElement& x) { return a.field.eval(old.to_poly(x), a.old_generator); };
    for (auto& x : found) x = map(x);
    for (auto& list : t.roots) {
      for (auto& x : list) x = map(x);
    }
    for (auto& term : t.terms) {
      term.root = map(term.root);
      term.coeff *= a.c;
    }
    std::erase_if(t.terms, [](const TowerTerm& term) { return sgn(term.coeff) == 0; });
    t.terms.push_back(TowerTerm{poly_index, a.root, Rational(1)});
    t.base_generator = map(t.base_generator);
    std::vector<NFElement> mapped;
    for (const auto& c : nonlinear.coeffs()) mapped.push_back(map(c));
    t.field = a.field;
    NFPolyRing R2(t.field);
    rest = R2.exact_quo(NFPoly(std::move(mapped)), R2.linear(a.root));
    found.push_back(a.root);
  }
  std::sort(found.begin(), found.end(), nf_lex_less);
  t.polys.push_back(f);
  t.roots.push_back(std::move(found));
}

Tower tower_from(const AmbientGaloisField& n) {
  Tower t{n.field(), n.field().generator(), n.polys(), n.roots(), {}};
  for (const auto& term : n.generator_terms()) {
    t.terms.push_back(TowerTerm{term.poly, n.roots()[static_cast<std::size_t>(term.poly)][static_cast<std::size_t>(term.root)],
                                term.coeff});
  }
  return t;
}

AmbientPtr finish(const Tower& t) {
  std::vector<GeneratorTerm> terms;
  for (const auto& term : t.terms) {
    const auto& list = t.roots[static_cast<std::size_t>(term.poly)];
    auto it = std::find(list.begin(), list.end(), term.root);
    if (it == list.end()) fail(ErrorCode::Internal, "adjoined root missing from its root list");
    terms.push_back(GeneratorTerm{term.poly, static_cast<int>(it - list.begin()), term.coeff});
  }
  return AmbientGaloisField::assemble(t.field.modulus(), t.polys, t.roots, std::move(terms));
}

}  // namespace

QPoly normalize_input_polynomial(const QPoly& f) {
  if (f.degree() < 1) fail(ErrorCode::InvalidArgument, "polynomial must be nonconstant");
  PolyRing<RationalField> QR(kQ);
  return QR.monic(QR.squarefree_part(f));
}

std::shared_ptr<const AmbientGaloisField> AmbientGaloisField::assemble(
    QPoly modulus, std::vector<QPoly> polys, std::vector<std::vector<NFElement>> roots,
    std::vector<GeneratorTerm> terms, std::vector<NFElement> autos, bool from_cache) {
  ErrorCode code = from_cache ? ErrorCode::CorruptCache : ErrorCode::Internal;
  auto bad = [&](const std::string& msg) { fail(code, "ambient field: " + msg); };

  if (modulus.degree() < 1 || modulus.leading() != 1) bad("modulus must be monic and nonconstant");
  if (from_cache && !is_irreducible_over_q(modulus)) bad("modulus is reducible");
  std::shared_ptr<AmbientGaloisField> a(new AmbientGaloisField(std::move(modulus)));
  const NumberField& f = a->field_;
  std::size_t n = static_cast<std::size_t>(f.degree());
  PolyRing<RationalField> QR(kQ);

  if (polys.size() != roots.size()) bad("root lists do not match the polynomials");
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].degree() < 1 || !QR.is_monic(polys[i])) bad("defining polynomial must be monic");
    if (static_cast<int>(roots[i].size()) != polys[i].degree()) bad("wrong number of roots");
    std::set<NFElement, NFLess> distinct;
    for (const auto& r : roots[i]) {
      if (r.coords.size() != n) bad("root has wrong dimension");
      if (!f.is_zero(f.eval(polys[i], r))) bad("stored root is not a root");
      distinct.insert(r);
    }
    if (distinct.size() != roots[i].size()) bad("repeated root");
  }
  NFElement sum = f.zero();
  for (const auto& term : terms) {
    if (term.poly < 0 || static_cast<std::size_t>(term.poly) >= roots.size() || term.root < 0 ||
        term.root >= static_cast<int>(roots[static_cast<std::size_t>(term.poly)].size())) {
      bad("generator term out of range");
    }
    sum = f.add(sum, f.scale(roots[static_cast<std::size_t>(term.poly)][static_cast<std::size_t>(term.root)], term.coeff));
  }
  if (sum != f.generator()) bad("generator terms do not sum to the generator");

  if (autos.empty()) {
    // Each automorphism sends every adjoined root to a root of the same
    // rational minimal polynomial, so the image of the generator is one of
    // these sums; the roots of the modulus among them are the automorphisms.
    std::vector<std::vector<int>> choices;
    for (const auto& term : terms) {
      const auto& list = roots[static_cast<std::size_t>(term.poly)];
      QPoly minpoly = f.minimal_polynomial(list[static_cast<std::size_t>(term.root)]);
      std::vector<int> c;
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (f.is_zero(f.eval(minpoly, list[i]))) c.push_back(static_cast<int>(i));
      }
      choices.push_back(std::move(c));
    }
    std::set<NFElement, NFLess> found;
    std::vector<std::size_t> pos(terms.size(), 0);
    while (true) {
      NFElement cand = f.zero();
      for (std::size_t j = 0; j < terms.size(); ++j) {
        const auto& r = roots[static_cast<std::size_t>(terms[j].poly)][static_cast<std::size_t>(choices[j][pos[j]])];
        cand = f.add(cand, f.scale(r, terms[j].coeff));
      }
      if (f.is_zero(f.eval(f.modulus(), cand))) found.insert(cand);
      std::size_t j = 0;
      while (j < pos.size() && pos[j] + 1 == choices[j].size()) pos[j++] = 0;
      if (j == pos.size()) break;
      ++pos[j];
    }
    if (terms.empty()) found.insert(f.generator());
    autos.assign(found.begin(), found.end());
  }
  {
    std::set<NFElement, NFLess> distinct;
    for (const auto& x : autos) {
      if (x.coords.size() != n) bad("automorphism image has wrong dimension");
      if (!f.is_zero(f.eval(f.modulus(), x))) bad("automorphism image is not a root of the modulus");
      distinct.insert(x);
    }
    if (distinct.size() != autos.size() || autos.size() != n) bad("automorphism count differs from the degree");
  }
  NFElement gen = f.generator();
  std::sort(autos.begin(), autos.end(), [&](const NFElement& x, const NFElement& y) {
    if ((x == gen) != (y == gen)) return x == gen;
    return nf_lex_less(x, y);
  });

  std::map<NFElement, int, NFLess> index;
  for (std::size_t i = 0; i < n; ++i) {
    index[autos[i]] = static_cast<int>(i);
    QMatrix m(n, n, Rational(0));
    NFElement p = f.one();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t r = 0; r < n; ++r) m(r, k) = p.coords[r];
      p = f.mul(p, autos[i]);
    }
    a->matrices_.push_back(std::move(m));
  }
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(NFElement{mat_vec(kQ, a->matrices_[i], autos[j].coords)});
      if (it == index.end()) bad("composition leaves the automorphism set");
      table[i][j] = it->second;
    }
  }
  if (!verify_group_axioms(table)) bad("composition table is not a group");
  a->group_ = FiniteGroup(std::move(table));
  a->autos_ = std::move(autos);
  a->polys_ = std::move(polys);
  a->roots_ = std::move(roots);
  a->terms_ = std::move(terms);

  a->perms_.assign(n, {});
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t p = 0; p < a->polys_.size(); ++p) {
      std::vector<int> perm;
      for (const auto& r : a->roots_[p]) {
        int k = a->root_index(static_cast<int>(p), a->apply(static_cast<int>(s), r));
        if (k < 0) bad("automorphism does not permute the roots");
        perm.push_back(k);
      }
      a->perms_[s].push_back(std::move(perm));
    }
  }
  return a;
}

NFElement AmbientGaloisField::apply(int sigma, const NFElement& x) const {
  return NFElement{mat_vec(kQ, matrices_[static_cast<std::size_t>(sigma)], x.coords)};
}

int AmbientGaloisField::find_automorphism(const NFElement& image) const {
  auto it = std::find(autos_.begin(), autos_.end(), image);
  return it == autos_.end() ? -1 : static_cast<int>(it - autos_.begin());
}

int AmbientGaloisField::root_index(int poly, const NFElement& x) const {
  const auto& list = roots_[static_cast<std::size_t>(poly)];
  auto it = std::find(list.begin(), list.end(), x);
  return it == list.end() ? -1 : static_cast<int>(it - list.begin());
}

AmbientPtr rational_ambient() {
  static const AmbientPtr q = AmbientGaloisField::assemble(qpoly({0, 1}), {}, {}, {});
  return q;
}

AmbientPtr splitting_field(const std::vector<QPoly>& polys, int max_degree) {
  std::vector<QPoly> inputs;
  for (const auto& f : polys) inputs.push_back(normalize_input_polynomial(f));
  std::sort(inputs.begin(), inputs.end(), [](const QPoly& a, const QPoly& b) { return canonical_less(a, b); });
  inputs.erase(std::unique(inputs.begin(), inputs.end()), inputs.end());
  Tower t = tower_from(*rational_ambient());
  for (const auto& f : inputs) grow(t, f, max_degree);
  return finish(t);
}

AmbientExtension extend_ambient(const AmbientPtr& n, const QPoly& f, int max_degree) {
  Tower t = tower_from(*n);
  grow(t, normalize_input_polynomial(f), max_degree);
  AmbientExtension ext{finish(t), t.base_generator, {}};
  const AmbientGaloisField& big = *ext.field;
  std::map<NFElement, int, NFLess> images;
  for (int s = 0; s < n->group().order(); ++s) {
    images[embed(ext, *n, n->autos()[static_cast<std::size_t>(s)])] = s;
  }
  for (int s = 0; s < big.group().order(); ++s) {
    auto it = images.find(big.apply(s, ext.iota));
    if (it == images.end()) fail(ErrorCode::Internal, "automorphism does not preserve the subfield");
    ext.pi.push_back(it->second);
  }
  return ext;
}

NFElement embed(const AmbientExtension& ext, const AmbientGaloisField& old_field, const NFElement& x) {
  return ext.field->field().eval(old_field.field().to_poly(x), ext.iota);
}

Subgroup extension_kernel(const AmbientExtension& ext) {
  Subgroup k;
  for (std::size_t s = 0; s < ext.pi.size(); ++s) {
    if (ext.pi[s] == 0) k.members.push_back(static_cast<int>(s));
  }
  return k;
}

}  // namespace galoisdr
