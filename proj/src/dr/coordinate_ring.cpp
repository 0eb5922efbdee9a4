#include "dr/coordinate_ring.hpp"

namespace galoisdr {

namespace {

const RationalField kQ;

}  // namespace

CoordinateRing::CoordinateRing(GaloisSubextension ext)
    : ext_(std::move(ext)),
      ell_(static_cast<std::size_t>(ext_.top->degree())),
      rational_echelon_(kQ, static_cast<std::size_t>(ext_.degree()) * static_cast<std::size_t>(ext_.top->degree())) {
  const NumberField& nf = field();
  const FixedField& l = *ext_.top;
  const FiniteGroup& g = group();
  std::size_t order = static_cast<std::size_t>(g.order());
  std::size_t width = order * ell_;

  // Power basis of L and the action of each generator on it.
  std::vector<NFElement> powers;
  NFElement p = nf.one();
  for (std::size_t k = 0; k < ell_; ++k) {
    powers.push_back(p);
    p = nf.mul(p, l.primitive());
  }
  std::vector<int> gens = generators(g, whole_group(g));
  QMatrix constraints(gens.size() * width, width, Rational(0));
  for (std::size_t s = 0; s < gens.size(); ++s) {
    int sigma = gens[s];
    QMatrix act_matrix(ell_, ell_, Rational(0));
    for (std::size_t k = 0; k < ell_; ++k) {
      QPoly image = l.as_polynomial(act(sigma, powers[k]));
      for (std::size_t r = 0; r < image.size(); ++r) act_matrix(r, k) = image[r];
    }
    // sigma(f(sigma^-1 tau sigma)) - f(tau) = 0
    for (std::size_t tau = 0; tau < order; ++tau) {
      std::size_t rho = static_cast<std::size_t>(g.conj(g.inv(sigma), static_cast<int>(tau)));
      std::size_t row0 = s * width + tau * ell_;
      for (std::size_t r = 0; r < ell_; ++r) {
        for (std::size_t c = 0; c < ell_; ++c) constraints(row0 + r, rho * ell_ + c) += act_matrix(r, c);
        constraints(row0 + r, tau * ell_ + r) -= 1;
      }
    }
  }
  std::vector<QVector> kernel_basis;
  if (gens.empty()) {
    for (std::size_t i = 0; i < width; ++i) {
      QVector v(width, Rational(0));
      v[i] = 1;
      kernel_basis.push_back(std::move(v));
    }
  } else {
    kernel_basis = kernel(kQ, constraints);
  }
  for (const auto& v : kernel_basis) rational_echelon_.add(v);
  if (rational_echelon_.rank() != order * static_cast<std::size_t>(ext_.base->degree())) {
    fail(ErrorCode::Internal, "coordinate ring has the wrong rational dimension");
  }
  for (const auto& row : rational_echelon_.rows()) {
    GroupFunction f;
    for (std::size_t tau = 0; tau < order; ++tau) {
      QPoly poly(std::vector<Rational>(row.begin() + static_cast<std::ptrdiff_t>(tau * ell_),
                                       row.begin() + static_cast<std::ptrdiff_t>((tau + 1) * ell_)));
      f.push_back(nf.eval(poly, l.primitive()));
    }
    rational_basis_.push_back(std::move(f));
  }

  // K-basis: greedily keep rational basis vectors that are independent over L.
  EchelonBasis<NumberField> span(nf, order);
  for (const auto& f : rational_basis_) {
    if (span.add(f)) basis_.push_back(f);
    if (basis_.size() == order) break;
  }
  if (basis_.size() != order) fail(ErrorCode::Internal, "coordinate ring does not span over L");
  eval_ = NFMatrix(order, order, nf.zero());
  for (std::size_t tau = 0; tau < order; ++tau) {
    for (std::size_t i = 0; i < order; ++i) eval_(tau, i) = basis_[i][tau];
  }
  auto inv = inverse(nf, eval_);
  if (!inv) fail(ErrorCode::Internal, "evaluation matrix is singular");
  eval_inv_ = std::move(*inv);
}

QVector CoordinateRing::flatten(const GroupFunction& f) const {
  QVector v;
  v.reserve(f.size() * ell_);
  for (const auto& x : f) {
    QPoly poly = ext_.top->as_polynomial(x);
    for (std::size_t k = 0; k < ell_; ++k) v.push_back(k < poly.size() ? poly[k] : Rational(0));
  }
  return v;
}

std::optional<QVector> CoordinateRing::rational_coordinates(const GroupFunction& f) const {
  if (f.size() != static_cast<std::size_t>(dim())) return std::nullopt;
  for (const auto& x : f) {
    if (!ext_.top->contains(x)) return std::nullopt;
  }
  return rational_echelon_.coordinates(flatten(f));
}

bool CoordinateRing::is_equivariant(const GroupFunction& f) const {
  const FiniteGroup& g = group();
  for (const auto& x : f) {
    if (!ext_.top->contains(x)) return false;
  }
  for (int sigma = 0; sigma < g.order(); ++sigma) {
    for (int tau = 0; tau < g.order(); ++tau) {
      int rho = g.conj(g.inv(sigma), tau);
      if (act(sigma, f[static_cast<std::size_t>(rho)]) != f[static_cast<std::size_t>(tau)]) return false;
    }
  }
  return true;
}

std::vector<NFElement> CoordinateRing::decompose(const GroupFunction& f) const {
  return mat_vec(field(), eval_inv_, f);
}

std::vector<NFElement> CoordinateRing::decompose_in_base(const GroupFunction& f) const {
  auto c = decompose(f);
  for (const auto& x : c) {
    if (!ext_.base->contains(x)) {
      fail(ErrorCode::InconsistentDescent, "descent coefficients leave the base field");
    }
  }
  return c;
}

GroupFunction CoordinateRing::combine(const std::vector<NFElement>& coeffs) const {
  return mat_vec(field(), eval_, coeffs);
}

GroupFunction CoordinateRing::product(const GroupFunction& a, const GroupFunction& b) const {
  GroupFunction out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(field().mul(a[i], b[i]));
  return out;
}

const HopfStructure& CoordinateRing::hopf() const {
  std::call_once(hopf_once_, [this] {
    const NumberField& nf = field();
    const FiniteGroup& g = group();
    std::size_t n = static_cast<std::size_t>(dim());
    auto h = std::make_unique<HopfStructure>();
    h->mult.assign(n, std::vector<std::vector<NFElement>>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        h->mult[i][j] = decompose_in_base(product(basis_[i], basis_[j]));
        h->mult[j][i] = h->mult[i][j];
      }
    }
    h->unit = decompose_in_base(constant(nf.one()));
    for (std::size_t i = 0; i < n; ++i) h->counit.push_back(basis_[i][static_cast<std::size_t>(g.identity())]);
    for (std::size_t k = 0; k < n; ++k) {
      GroupFunction s;
      for (std::size_t tau = 0; tau < n; ++tau) s.push_back(basis_[k][static_cast<std::size_t>(g.inv(static_cast<int>(tau)))]);
      h->antipode.push_back(decompose_in_base(s));
    }
    // Delta(f_k) = sum C(i, j) f_i (x) f_j with E C E^T = (f_k(sigma tau)).
    NFMatrix inv_t(n, n, nf.zero());
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) inv_t(r, c) = eval_inv_(c, r);
    }
    for (std::size_t k = 0; k < n; ++k) {
      NFMatrix t(n, n, nf.zero());
      for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t u = 0; u < n; ++u) {
          t(s, u) = basis_[k][static_cast<std::size_t>(g.mul(static_cast<int>(s), static_cast<int>(u)))];
        }
      }
      NFMatrix c = mat_mul(nf, mat_mul(nf, eval_inv_, t), inv_t);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t q = 0; q < n; ++q) {
          if (!ext_.base->contains(c(r, q))) {
            fail(ErrorCode::InconsistentDescent, "comultiplication leaves the base field");
          }
        }
      }
      h->delta.push_back(std::move(c));
    }
    hopf_ = std::move(h);
  });
  return *hopf_;
}

CoordinateRingPtr build_coordinate_ring(const GaloisSubextension& ext) { return std::make_shared<const CoordinateRing>(ext); }

HopfAxiomReport verify_hopf_axioms(const CoordinateRing& a) {
  const NumberField& nf = a.field();
  const HopfStructure& h = a.hopf();
  const FiniteGroup& g = a.group();
  std::size_t n = static_cast<std::size_t>(a.dim());
  NFElement zero = nf.zero(), one = nf.one();
  auto dot = [&](auto&& term, std::size_t len) {
    NFElement acc = zero;
    for (std::size_t i = 0; i < len; ++i) acc = nf.add(acc, term(i));
    return acc;
  };
  HopfAxiomReport r;

  r.counit = true;
  for (std::size_t k = 0; k < n && r.counit; ++k) {
    const NFMatrix& c = h.delta[k];
    for (std::size_t j = 0; j < n; ++j) {
      NFElement left = dot([&](std::size_t i) { return nf.mul(c(i, j), h.counit[i]); }, n);
      NFElement right = dot([&](std::size_t i) { return nf.mul(c(j, i), h.counit[i]); }, n);
      NFElement want = j == k ? one : zero;
      if (left != want || right != want) r.counit = false;
    }
  }

  r.coassociative = true;
  for (std::size_t k = 0; k < n && r.coassociative; ++k) {
    const NFMatrix& ck = h.delta[k];
    for (std::size_t x = 0; x < n && r.coassociative; ++x) {
      for (std::size_t y = 0; y < n && r.coassociative; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          // (Delta (x) id) Delta versus (id (x) Delta) Delta at f_x (x) f_y (x) f_z
          NFElement left = dot([&](std::size_t i) { return nf.mul(ck(i, z), h.delta[i](x, y)); }, n);
          NFElement right = dot([&](std::size_t j) { return nf.mul(ck(x, j), h.delta[j](y, z)); }, n);
          if (left != right) {
            r.coassociative = false;
            break;
          }
        }
      }
    }
  }

  // m (S (x) id) Delta = m (id (x) S) Delta = unit * counit
  r.antipode = true;
  for (std::size_t k = 0; k < n && r.antipode; ++k) {
    const NFMatrix& ck = h.delta[k];
    std::vector<NFElement> left(n, zero), right(n, zero);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (nf.is_zero(ck(i, j))) continue;
        for (std::size_t s = 0; s < n; ++s) {
          const NFElement& si = h.antipode[i][s];
          const NFElement& sj = h.antipode[j][s];
          for (std::size_t b = 0; b < n; ++b) {
            if (!nf.is_zero(si)) left[b] = nf.add(left[b], nf.mul(ck(i, j), nf.mul(si, h.mult[s][j][b])));
            if (!nf.is_zero(sj)) right[b] = nf.add(right[b], nf.mul(ck(i, j), nf.mul(sj, h.mult[i][s][b])));
          }
        }
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      NFElement want = nf.mul(h.counit[k], h.unit[b]);
      if (left[b] != want || right[b] != want) r.antipode = false;
    }
  }

  r.counit_multiplicative = dot([&](std::size_t i) { return nf.mul(h.unit[i], h.counit[i]); }, n) == one;
  for (std::size_t i = 0; i < n && r.counit_multiplicative; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      NFElement via = dot([&](std::size_t k) { return nf.mul(h.mult[i][j][k], h.counit[k]); }, n);
      if (via != nf.mul(h.counit[i], h.counit[j])) {
        r.counit_multiplicative = false;
        break;
      }
    }
  }

  r.evaluation = true;
  const auto& basis = a.basis();
  for (std::size_t k = 0; k < n && r.evaluation; ++k) {
    const NFMatrix& ck = h.delta[k];
    for (int s = 0; s < g.order() && r.evaluation; ++s) {
      for (int t = 0; t < g.order(); ++t) {
        NFElement v = zero;
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            if (nf.is_zero(ck(i, j))) continue;
            v = nf.add(v, nf.mul(ck(i, j), nf.mul(basis[i][static_cast<std::size_t>(s)], basis[j][static_cast<std::size_t>(t)])));
          }
        }
        if (v != basis[k][static_cast<std::size_t>(g.mul(s, t))]) {
          r.evaluation = false;
          break;
        }
      }
    }
  }
  return r;
}

}  // namespace galoisdr
