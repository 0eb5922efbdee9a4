#include "motives/motive.hpp"

#include <algorithm>
#include <map>

#include "exact/factor_q.hpp"

namespace galoisdr {

namespace {

const RationalField kQ;

QMatrix identity(std::size_t n) { return identity_matrix<Rational>(n, Rational(0), Rational(1)); }

QMatrix sub(const QMatrix& a, const QMatrix& b) {
  QMatrix c = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) -= b(r, k);
  }
  return c;
}

QMatrix add_scaled(QMatrix a, const QMatrix& b, const Rational& s) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) a(r, k) += s * b(r, k);
  }
  return a;
}

QVector flatten(const QMatrix& m) {
  QVector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t k = 0; k < m.cols(); ++k) v.push_back(m(r, k));
  }
  return v;
}

// Basis (as columns) to a dim x k matrix.
QMatrix columns(const std::vector<QVector>& basis, std::size_t dim) {
  QMatrix b(dim, basis.size(), Rational(0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < dim; ++i) b(i, j) = basis[j][i];
  }
  return b;
}

QMatrix eval_poly(const QPoly& q, const QMatrix& m) {
  QMatrix acc(m.rows(), m.cols(), Rational(0));
  for (int i = q.degree(); i >= 0; --i) {
    acc = mat_mul(kQ, acc, m);
    for (std::size_t r = 0; r < m.rows(); ++r) acc(r, r) += q[static_cast<std::size_t>(i)];
  }
  return acc;
}

// Vectors fixed by every generator, or all of Q^dim if there are none.
std::vector<QVector> fixed_vectors(const std::vector<const QMatrix*>& ops, std::size_t dim) {
  if (ops.empty()) {
    std::vector<QVector> all;
    for (std::size_t i = 0; i < dim; ++i) {
      QVector e(dim, Rational(0));
      e[i] = 1;
      all.push_back(std::move(e));
    }
    return all;
  }
  QMatrix stacked(ops.size() * dim, dim, Rational(0));
  QMatrix id = identity(dim);
  for (std::size_t g = 0; g < ops.size(); ++g) {
    QMatrix d = sub(*ops[g], id);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t k = 0; k < dim; ++k) stacked(g * dim + r, k) = d(r, k);
    }
  }
  return kernel(kQ, std::move(stacked));
}

bool same_span(const std::vector<QVector>& a, const std::vector<QVector>& b, std::size_t dim) {
  if (a.size() != b.size()) return false;
  EchelonBasis<RationalField> e(kQ, dim);
  for (const auto& v : a) e.add(v);
  return std::all_of(b.begin(), b.end(), [&](const QVector& v) { return e.contains(v); });
}

void require_same_ambient(const Motive& v, const Motive& w) {
  if (!v.ambient()->same_field(*w.ambient())) fail(ErrorCode::AmbientMismatch, "motives over different ambients");
}

std::vector<QVector> cyclic_span(const Motive& v, const QVector& x) {
  EchelonBasis<RationalField> e(kQ, static_cast<std::size_t>(v.dim()));
  std::vector<QVector> out;
  for (const auto& m : v.actions()) {
    QVector y = mat_vec(kQ, m, x);
    if (e.add(y)) out.push_back(std::move(y));
  }
  return out;
}

}  // namespace

Motive::Motive(AmbientPtr ambient, std::vector<QMatrix> matrices)
    : ambient_(std::move(ambient)), action_(std::move(matrices)) {
  const FiniteGroup& g = group();
  if (action_.size() != static_cast<std::size_t>(g.order())) {
    fail(ErrorCode::InvalidArgument, "motive needs one matrix per group element");
  }
  dim_ = static_cast<int>(action_[0].rows());
  for (const auto& m : action_) {
    if (m.rows() != static_cast<std::size_t>(dim_) || m.cols() != static_cast<std::size_t>(dim_)) {
      fail(ErrorCode::InvalidArgument, "motive matrices must be square of one size");
    }
  }
  if (!(action(g.identity()) == identity(static_cast<std::size_t>(dim_)))) {
    fail(ErrorCode::InvalidArgument, "identity must act trivially");
  }
  // rho(x s) = rho(x) rho(s) for all x and every generator s forces a homomorphism.
  for (int s : generators(g, whole_group(g))) {
    for (int x = 0; x < g.order(); ++x) {
      if (!(action(g.mul(x, s)) == mat_mul(kQ, action(x), action(s)))) {
        fail(ErrorCode::InvalidArgument, "action is not a homomorphism");
      }
    }
  }
}

std::vector<Rational> Motive::character() const {
  std::vector<Rational> chi;
  for (const auto& m : action_) {
    Rational t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    chi.push_back(t);
  }
  return chi;
}

Motive unit_motive(const AmbientPtr& ambient) {
  return Motive(ambient, std::vector<QMatrix>(static_cast<std::size_t>(ambient->group().order()), identity(1)));
}

Motive permutation_motive(const AmbientPtr& ambient, const std::vector<std::vector<int>>& perms) {
  std::vector<QMatrix> action;
  for (const auto& p : perms) {
    QMatrix m(p.size(), p.size(), Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) m(static_cast<std::size_t>(p[i]), i) = 1;
    action.push_back(std::move(m));
  }
  return Motive(ambient, std::move(action));
}

EtaleScheme make_etale_scheme(const AmbientPtr& ambient, std::vector<Subgroup> components) {
  for (auto& h : components) {
    std::sort(h.members.begin(), h.members.end());
    if (!is_subgroup(ambient->group(), h.members)) fail(ErrorCode::InvalidArgument, "component is not a subgroup");
  }
  return EtaleScheme{ambient, std::move(components)};
}

EtaleScheme spec(const FixedFieldPtr& field) { return make_etale_scheme(field->ambient(), {field->stabilizer()}); }

EtaleScheme disjoint_union(const EtaleScheme& x, const EtaleScheme& y) {
  if (!x.ambient->same_field(*y.ambient)) fail(ErrorCode::AmbientMismatch, "schemes over different ambients");
  auto comps = x.components;
  comps.insert(comps.end(), y.components.begin(), y.components.end());
  return EtaleScheme{x.ambient, std::move(comps)};
}

std::vector<SchemePoint> scheme_points(const EtaleScheme& x) {
  const FiniteGroup& g = x.ambient->group();
  std::vector<SchemePoint> pts;
  for (std::size_t c = 0; c < x.components.size(); ++c) {
    for (auto& coset : left_cosets(g, x.components[c], whole_group(g))) {
      pts.push_back(SchemePoint{static_cast<int>(c), std::move(coset)});
    }
  }
  return pts;
}

std::vector<std::vector<int>> point_action(const EtaleScheme& x) {
  const FiniteGroup& g = x.ambient->group();
  auto pts = scheme_points(x);
  // (component, element) -> point index
  std::map<std::pair<int, int>, int> where;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (int m : pts[i].coset) where[{pts[i].component, m}] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> perms;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> p;
    for (const auto& pt : pts) p.push_back(where.at({pt.component, g.mul(s, pt.coset.front())}));
    perms.push_back(std::move(p));
  }
  return perms;
}

ProductScheme product(const EtaleScheme& x, const EtaleScheme& y) {
  if (!x.ambient->same_field(*y.ambient)) fail(ErrorCode::AmbientMismatch, "schemes over different ambients");
  const FiniteGroup& g = x.ambient->group();
  auto px = point_action(x), py = point_action(y);
  std::size_t nx = px[0].size(), ny = py[0].size();
  auto act = [&](int s, std::size_t pair) {
    return static_cast<std::size_t>(px[static_cast<std::size_t>(s)][pair / ny]) * ny +
           static_cast<std::size_t>(py[static_cast<std::size_t>(s)][pair % ny]);
  };
  ProductScheme out;
  out.scheme.ambient = x.ambient;
  out.pair_index.assign(nx * ny, -1);
  int next = 0;
  for (std::size_t rep = 0; rep < nx * ny; ++rep) {
    if (out.pair_index[rep] >= 0) continue;
    Subgroup stab;
    for (int s = 0; s < g.order(); ++s) {
      if (act(s, rep) == rep) stab.members.push_back(s);
    }
    auto cosets = left_cosets(g, stab, whole_group(g));
    for (std::size_t c = 0; c < cosets.size(); ++c) {
      out.pair_index[act(cosets[c].front(), rep)] = next + static_cast<int>(c);
    }
    next += static_cast<int>(cosets.size());
    out.scheme.components.push_back(std::move(stab));
  }
  return out;
}

Motive motive_of(const EtaleScheme& x) { return permutation_motive(x.ambient, point_action(x)); }

std::vector<QVector> sections(const Motive& v, const Subgroup& h) {
  std::vector<const QMatrix*> ops;
  for (int s : generators(v.group(), h)) ops.push_back(&v.action(s));
  return fixed_vectors(ops, static_cast<std::size_t>(v.dim()));
}

std::vector<QVector> sections(const Motive& v, const FixedFieldPtr& m) {
  if (!m->ambient()->same_field(*v.ambient())) fail(ErrorCode::AmbientMismatch, "subfield of another ambient");
  return sections(v, m->stabilizer());
}

bool sheaf_condition(const Motive& v, const Subgroup& h_small, const Subgroup& h_big) {
  if (!is_normal_in(v.group(), h_small, h_big)) fail(ErrorCode::InvalidArgument, "subgroup is not normal");
  auto small = sections(v, h_small);
  auto big = sections(v, h_big);
  if (small.empty()) return big.empty();
  // Action of h_big on the h_small-sections, in their coordinates.
  std::size_t dim = static_cast<std::size_t>(v.dim());
  QMatrix b = columns(small, dim);
  std::vector<QMatrix> mats;
  for (int s : generators(v.group(), h_big)) {
    QMatrix m(small.size(), small.size(), Rational(0));
    for (std::size_t j = 0; j < small.size(); ++j) {
      auto c = solve(kQ, b, mat_vec(kQ, v.action(s), small[j]));
      if (!c) return false;
      for (std::size_t i = 0; i < small.size(); ++i) m(i, j) = (*c)[i];
    }
    mats.push_back(std::move(m));
  }
  std::vector<const QMatrix*> ops;
  for (const auto& m : mats) ops.push_back(&m);
  std::vector<QVector> invariant;
  for (const auto& c : fixed_vectors(ops, small.size())) invariant.push_back(mat_vec(kQ, b, c));
  return same_span(invariant, big, dim);
}

FiniteTypeLevel finite_type_level(const Motive& v) {
  const FiniteGroup& g = v.group();
  FiniteTypeLevel out;
  QMatrix id = identity(static_cast<std::size_t>(v.dim()));
  for (int s = 0; s < g.order(); ++s) {
    if (v.action(s) == id) out.kernel.members.push_back(s);
  }
  out.certified = true;
  for (const auto& h : all_subgroups(g)) {
    if (!is_subset(h, out.kernel)) continue;
    if (sections(v, h).size() != static_cast<std::size_t>(v.dim())) out.certified = false;
  }
  return out;
}

Motive tensor(const Motive& v, const Motive& w) {
  require_same_ambient(v, w);
  std::size_t a = static_cast<std::size_t>(v.dim()), b = static_cast<std::size_t>(w.dim());
  std::vector<QMatrix> action;
  for (int s = 0; s < v.group().order(); ++s) {
    QMatrix k(a * b, a * b, Rational(0));
    const QMatrix& x = v.action(s);
    const QMatrix& y = w.action(s);
    for (std::size_t i = 0; i < a; ++i) {
      for (std::size_t j = 0; j < a; ++j) {
        if (sgn(x(i, j)) == 0) continue;
        for (std::size_t p = 0; p < b; ++p) {
          for (std::size_t q = 0; q < b; ++q) k(i * b + p, j * b + q) = x(i, j) * y(p, q);
        }
      }
    }
    action.push_back(std::move(k));
  }
  return Motive(v.ambient(), std::move(action));
}

std::vector<QVector> hom_motives(const Motive& v, const Motive& w) {
  require_same_ambient(v, w);
  std::size_t a = static_cast<std::size_t>(v.dim()), b = static_cast<std::size_t>(w.dim());
  auto gens = generators(v.group(), whole_group(v.group()));
  if (gens.empty()) return fixed_vectors({}, a * b);
  // Unknown X(r, c) at index r * a + c.
  QMatrix eq(gens.size() * a * b, a * b, Rational(0));
  for (std::size_t t = 0; t < gens.size(); ++t) {
    const QMatrix& x = v.action(gens[t]);
    const QMatrix& y = w.action(gens[t]);
    for (std::size_t r = 0; r < b; ++r) {
      for (std::size_t c = 0; c < a; ++c) {
        std::size_t row = t * a * b + r * a + c;
        for (std::size_t k = 0; k < b; ++k) eq(row, k * a + c) += y(r, k);
        for (std::size_t k = 0; k < a; ++k) eq(row, r * a + k) -= x(k, c);
      }
    }
  }
  return kernel(kQ, std::move(eq));
}

bool isomorphic(const Motive& v, const Motive& w) {
  return v.ambient()->same_field(*w.ambient()) && v.character() == w.character();
}

Motive subrepresentation(const Motive& v, const std::vector<QVector>& basis) {
  std::size_t dim = static_cast<std::size_t>(v.dim());
  QMatrix b = columns(basis, dim);
  if (rank(kQ, b) != basis.size()) fail(ErrorCode::InvalidArgument, "subspace basis is not independent");
  std::vector<QMatrix> action;
  for (const auto& m : v.actions()) {
    QMatrix r(basis.size(), basis.size(), Rational(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto c = solve(kQ, b, mat_vec(kQ, m, basis[j]));
      if (!c) fail(ErrorCode::InvalidArgument, "subspace is not invariant");
      for (std::size_t i = 0; i < basis.size(); ++i) r(i, j) = (*c)[i];
    }
    action.push_back(std::move(r));
  }
  return Motive(v.ambient(), std::move(action));
}

QPoly matrix_minimal_polynomial(const QMatrix& m) {
  std::size_t n = m.rows();
  std::vector<QVector> powers;
  EchelonBasis<RationalField> e(kQ, n * n);
  QMatrix p = identity(n);
  for (;;) {
    QVector flat = flatten(p);
    if (e.contains(flat)) {
      QMatrix a(n * n, powers.size(), Rational(0));
      for (std::size_t j = 0; j < powers.size(); ++j) {
        for (std::size_t i = 0; i < n * n; ++i) a(i, j) = powers[j][i];
      }
      auto c = solve(kQ, a, flat);
      std::vector<Rational> coeffs;
      for (const auto& x : *c) coeffs.push_back(-x);
      coeffs.push_back(1);
      return QPoly(std::move(coeffs));
    }
    e.add(flat);
    powers.push_back(std::move(flat));
    p = mat_mul(kQ, p, m);
  }
}

std::vector<IsotypicComponent> isotypic_components(const Motive& v) {
  const FiniteGroup& g = v.group();
  auto classes = conjugacy_classes(g, whole_group(g));
  std::size_t dim = static_cast<std::size_t>(v.dim());

  std::vector<IsotypicComponent> done;
  std::vector<std::vector<QVector>> pending;
  if (dim > 0) pending.push_back(fixed_vectors({}, dim));
  while (!pending.empty()) {
    auto basis = std::move(pending.back());
    pending.pop_back();
    Motive u = subrepresentation(v, basis);
    std::size_t k = basis.size();
    std::vector<QMatrix> sums;
    EchelonBasis<RationalField> span(kQ, k * k);
    for (const auto& cls : classes) {
      QMatrix s(k, k, Rational(0));
      for (int x : cls) s = add_scaled(std::move(s), u.action(x), Rational(1));
      span.add(flatten(s));
      sums.push_back(std::move(s));
    }
    bool resolved = false;
    for (int attempt = 1; attempt <= 40 && !resolved; ++attempt) {
      QMatrix z(k, k, Rational(0));
      Rational c = 1;
      for (const auto& s : sums) {
        z = add_scaled(std::move(z), s, c);
        c = c * attempt + 1;
      }
      QPoly mp = matrix_minimal_polynomial(z);
      auto factors = factor_squarefree_over_q(mp);
      if (factors.size() == 1 && static_cast<std::size_t>(mp.degree()) == span.rank()) {
        done.push_back(IsotypicComponent{basis, std::move(u), std::move(mp)});
        resolved = true;
      } else if (factors.size() > 1) {
        QMatrix b = columns(basis, dim);
        for (const auto& q : factors) {
          std::vector<QVector> piece;
          for (const auto& w : kernel(kQ, eval_poly(q, z))) piece.push_back(mat_vec(kQ, b, w));
          pending.push_back(std::move(piece));
        }
        resolved = true;
      }
    }
    if (!resolved) fail(ErrorCode::Internal, "could not separate isotypic components");
  }
  std::sort(done.begin(), done.end(), [](const IsotypicComponent& a, const IsotypicComponent& b) {
    if (a.basis.size() != b.basis.size()) return a.basis.size() < b.basis.size();
    return a.central_minpoly.coeffs() < b.central_minpoly.coeffs();
  });
  return done;
}

IrreducibleSummand irreducible_summand(const IsotypicComponent& c) {
  const Motive& v = c.motive;
  std::size_t dim = static_cast<std::size_t>(v.dim());
  std::vector<QVector> current = fixed_vectors({}, dim);
  for (bool shrunk = true; shrunk && current.size() > 1;) {
    shrunk = false;
    std::vector<QVector> probes = current;
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      QVector s = current[i];
      for (std::size_t t = 0; t < dim; ++t) s[t] += current[i + 1][t];
      probes.push_back(std::move(s));
    }
    for (const auto& x : probes) {
      auto span = cyclic_span(v, x);
      if (span.size() < current.size()) {
        current = std::move(span);
        shrunk = true;
        break;
      }
    }
  }
  Motive w = subrepresentation(v, current);

  // Certificate: End_G(W) commutative with a primitive element.
  auto ends = hom_motives(w, w);
  std::size_t k = current.size();
  std::vector<QMatrix> mats;
  for (const auto& e : ends) {
    QMatrix m(k, k, Rational(0));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t s = 0; s < k; ++s) m(r, s) = e[r * k + s];
    }
    mats.push_back(std::move(m));
  }
  bool commutative = true;
  for (std::size_t i = 0; i < mats.size() && commutative; ++i) {
    for (std::size_t j = i + 1; j < mats.size() && commutative; ++j) {
      commutative = mat_mul(kQ, mats[i], mats[j]) == mat_mul(kQ, mats[j], mats[i]);
    }
  }
  bool certified = false;
  for (int attempt = 1; attempt <= 10 && commutative && !certified; ++attempt) {
    QMatrix x(k, k, Rational(0));
    Rational coef = 1;
    for (const auto& m : mats) {
      x = add_scaled(std::move(x), m, coef);
      coef = coef * attempt + 1;
    }
    QPoly mp = matrix_minimal_polynomial(x);
    certified = static_cast<std::size_t>(mp.degree()) == mats.size() && is_irreducible_over_q(mp);
  }
  std::vector<QVector> in_v;
  QMatrix b = columns(c.basis, c.basis.empty() ? 0 : c.basis[0].size());
  for (const auto& x : current) in_v.push_back(mat_vec(kQ, b, x));
  return IrreducibleSummand{std::move(in_v), std::move(w), certified};
}

}  // namespace galoisdr
