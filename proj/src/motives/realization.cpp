#include "motives/realization.hpp"

namespace galoisdr {

namespace {

const RationalField kQ;

Rational rational_part(const NFElement& x) {
  for (std::size_t i = 1; i < x.coords.size(); ++i) {
    if (sgn(x.coords[i]) != 0) fail(ErrorCode::InconsistentDescent, "coaction coefficient is not rational");
  }
  return x.coords.empty() ? Rational(0) : x.coords[0];
}

bool is_full_extension(const CoordinateRing& a) {
  const auto& e = a.extension();
  return e.inner.order() == 1 && e.outer.order() == e.ambient->group().order();
}

}  // namespace

DeRham::DeRham(Motive v) : v_(std::move(v)) {
  const AmbientGaloisField& n = *v_.ambient();
  std::size_t d = static_cast<std::size_t>(v_.dim());
  std::size_t deg = static_cast<std::size_t>(n.degree());
  std::size_t cols = d * deg;
  auto gens = generators(n.group(), whole_group(n.group()));
  QMatrix stacked(gens.size() * cols, cols, Rational(0));
  for (std::size_t t = 0; t < gens.size(); ++t) {
    const QMatrix& rho = v_.action(gens[t]);
    const QMatrix& a = n.auto_matrix(gens[t]);
    // Row (j, k) of kron(rho, a) - I.
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i) {
        if (sgn(rho(j, i)) == 0) continue;
        for (std::size_t k = 0; k < deg; ++k) {
          for (std::size_t l = 0; l < deg; ++l) stacked(t * cols + j * deg + k, i * deg + l) += rho(j, i) * a(k, l);
        }
      }
    }
    for (std::size_t r = 0; r < cols; ++r) stacked(t * cols + r, r) -= 1;
  }
  if (gens.empty()) {
    for (std::size_t r = 0; r < cols; ++r) {
      QVector e(cols, Rational(0));
      e[r] = 1;
      flat_basis_.push_back(std::move(e));
    }
  } else {
    flat_basis_ = kernel(kQ, std::move(stacked));
  }
  if (flat_basis_.size() != d) fail(ErrorCode::Internal, "de Rham dimension differs from the motive's");
  flat_columns_ = QMatrix(cols, d, Rational(0));
  for (std::size_t b = 0; b < d; ++b) {
    TensorElement x;
    for (std::size_t i = 0; i < d; ++i) {
      x.push_back(NFElement{QVector(flat_basis_[b].begin() + static_cast<std::ptrdiff_t>(i * deg),
                                    flat_basis_[b].begin() + static_cast<std::ptrdiff_t>((i + 1) * deg))});
    }
    basis_.push_back(std::move(x));
    for (std::size_t r = 0; r < cols; ++r) flat_columns_(r, b) = flat_basis_[b][r];
  }
}

QVector DeRham::flatten(const TensorElement& x) const {
  QVector v;
  for (const auto& e : x) v.insert(v.end(), e.coords.begin(), e.coords.end());
  return v;
}

std::optional<QVector> DeRham::coordinates(const TensorElement& x) const {
  if (basis_.empty()) {
    for (const auto& e : x) {
      if (!is_zero_element(e)) return std::nullopt;
    }
    return QVector{};
  }
  return solve(kQ, flat_columns_, flatten(x));
}

TensorElement DeRham::combine(const QVector& c) const {
  const NumberField& nf = v_.ambient()->field();
  TensorElement x(static_cast<std::size_t>(v_.dim()), nf.zero());
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = nf.add(x[i], nf.mul(nf.from_rational(c[b]), basis_[b][i]));
  }
  return x;
}

TensorElement DeRham::act(int g, const TensorElement& x) const {
  const NumberField& nf = v_.ambient()->field();
  const QMatrix& rho = v_.action(g);
  TensorElement y(x.size(), nf.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    NFElement gx = v_.ambient()->apply(g, x[i]);
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (sgn(rho(j, i)) != 0) y[j] = nf.add(y[j], nf.mul(nf.from_rational(rho(j, i)), gx));
    }
  }
  return y;
}

DeRham de_rham(const Motive& v) { return DeRham(v); }

GammaComparison gamma_comparison(const EtaleScheme& x) {
  GammaComparison out;
  DeRham w(motive_of(x));
  const AmbientGaloisField& n = *x.ambient;
  const NumberField& nf = n.field();
  auto pts = scheme_points(x);
  std::vector<std::size_t> base_point, offset;
  std::size_t rows = 0;
  for (std::size_t c = 0; c < x.components.size(); ++c) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (pts[i].component == static_cast<int>(c)) {
        base_point.push_back(i);
        break;
      }
    }
    out.fields.push_back(fixed_field(x.ambient, x.components[c]));
    offset.push_back(rows);
    rows += static_cast<std::size_t>(out.fields.back()->degree());
  }
  std::size_t d = static_cast<std::size_t>(w.dim());

  // Image of an element of W in the product of fields; nullopt if a value
  // leaves its field.
  auto image = [&](const TensorElement& t) -> std::optional<QVector> {
    QVector v;
    for (std::size_t c = 0; c < out.fields.size(); ++c) {
      auto coords = out.fields[c]->coordinates(t[base_point[c]]);
      if (!coords) return std::nullopt;
      v.insert(v.end(), coords->begin(), coords->end());
    }
    return v;
  };

  out.matrix = QMatrix(rows, d, Rational(0));
  bool defined = true;
  for (std::size_t b = 0; b < d; ++b) {
    auto v = image(w.basis()[b]);
    if (!v) {
      defined = false;
      break;
    }
    for (std::size_t r = 0; r < rows; ++r) out.matrix(r, b) = (*v)[r];
  }
  if (!defined) return out;
  out.bijective = rows == d && rank(kQ, out.matrix) == d;

  // Product of two images, componentwise in the fields.
  auto field_product = [&](const QVector& a, const QVector& b) {
    QVector r;
    for (std::size_t c = 0; c < out.fields.size(); ++c) {
      const auto& f = out.fields[c];
      auto part = [&](const QVector& v) {
        return f->from_coordinates(QVector(v.begin() + static_cast<std::ptrdiff_t>(offset[c]),
                                           v.begin() + static_cast<std::ptrdiff_t>(offset[c] + static_cast<std::size_t>(f->degree()))));
      };
      auto coords = f->coordinates(nf.mul(part(a), part(b)));
      r.insert(r.end(), coords->begin(), coords->end());
    }
    return r;
  };

  out.multiplicative = true;
  for (std::size_t a = 0; a < d && out.multiplicative; ++a) {
    for (std::size_t b = a; b < d && out.multiplicative; ++b) {
      TensorElement prod;
      for (std::size_t i = 0; i < pts.size(); ++i) prod.push_back(nf.mul(w.basis()[a][i], w.basis()[b][i]));
      auto c = w.coordinates(prod);
      if (!c) {
        out.multiplicative = false;
        break;
      }
      QVector lhs = mat_vec(kQ, out.matrix, *c);
      out.multiplicative = lhs == field_product(out.matrix.col(a), out.matrix.col(b));
    }
  }
  TensorElement one(pts.size(), nf.one());
  auto c1 = w.coordinates(one);
  if (c1) {
    QVector expected;
    for (const auto& f : out.fields) {
      auto e = f->coordinates(nf.one());
      expected.insert(expected.end(), e->begin(), e->end());
    }
    out.unital = mat_vec(kQ, out.matrix, *c1) == expected;
  }
  return out;
}

Coaction coaction(std::shared_ptr<const DeRham> w, const CoordinateRingPtr& a) {
  const Motive& v = w->motive();
  if (!a->ambient().same_field(*v.ambient()) || !is_full_extension(*a)) {
    fail(ErrorCode::InvalidArgument, "coaction needs A(N/Q) of the motive's ambient");
  }
  const NumberField& nf = v.ambient()->field();
  std::size_t d = static_cast<std::size_t>(w->dim());
  std::size_t g = static_cast<std::size_t>(a->dim());
  std::size_t vd = static_cast<std::size_t>(v.dim());
  const QuotientGroup& quot = a->extension().quotient;

  // Columns: the basis of W inside N^dim V.
  NFMatrix wm(vd, d, nf.zero());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < vd; ++i) wm(i, j) = w->basis()[j][i];
  }

  Coaction out{w, a, std::vector<std::vector<QVector>>(d, std::vector<QVector>(d, QVector(g, Rational(0))))};
  for (std::size_t b = 0; b < d; ++b) {
    // values[j][tau]: N-coefficient of w_j in tau acting on the V-leg of w_b.
    std::vector<GroupFunction> values(d, GroupFunction(g, nf.zero()));
    for (std::size_t tau = 0; tau < g; ++tau) {
      const QMatrix& rho = v.action(quot.rep(static_cast<int>(tau)));
      TensorElement u(vd, nf.zero());
      for (std::size_t r = 0; r < vd; ++r) {
        for (std::size_t i = 0; i < vd; ++i) {
          if (sgn(rho(r, i)) != 0) u[r] = nf.add(u[r], nf.mul(nf.from_rational(rho(r, i)), w->basis()[b][i]));
        }
      }
      auto sol = solve(nf, wm, u);
      if (!sol) fail(ErrorCode::InconsistentDescent, "translated vector leaves the span of W");
      for (std::size_t j = 0; j < d; ++j) values[j][tau] = (*sol)[j];
    }
    for (std::size_t j = 0; j < d; ++j) {
      auto c = a->decompose_in_base(values[j]);
      for (std::size_t k = 0; k < g; ++k) out.coeff[b][j][k] = rational_part(c[k]);
    }
  }
  return out;
}

ComoduleReport verify_comodule(const Coaction& c) {
  ComoduleReport r;
  const DeRham& w = *c.realization;
  const CoordinateRing& a = *c.ring;
  const Motive& v = w.motive();
  const NumberField& nf = v.ambient()->field();
  std::size_t d = static_cast<std::size_t>(w.dim());
  std::size_t g = static_cast<std::size_t>(a.dim());
  std::size_t vd = static_cast<std::size_t>(v.dim());

  r.evaluation = true;
  for (std::size_t b = 0; b < d && r.evaluation; ++b) {
    for (std::size_t tau = 0; tau < g && r.evaluation; ++tau) {
      TensorElement lhs(vd, nf.zero());
      for (std::size_t j = 0; j < d; ++j) {
        NFElement s = nf.zero();
        for (std::size_t k = 0; k < g; ++k) {
          s = nf.add(s, nf.mul(nf.from_rational(c.coeff[b][j][k]), a.basis()[k][tau]));
        }
        for (std::size_t i = 0; i < vd; ++i) lhs[i] = nf.add(lhs[i], nf.mul(s, w.basis()[j][i]));
      }
      const QMatrix& rho = v.action(a.extension().quotient.rep(static_cast<int>(tau)));
      TensorElement rhs(vd, nf.zero());
      for (std::size_t i = 0; i < vd; ++i) {
        for (std::size_t k = 0; k < vd; ++k) {
          rhs[i] = nf.add(rhs[i], nf.mul(nf.from_rational(rho(i, k)), w.basis()[b][k]));
        }
      }
      r.evaluation = lhs == rhs;
    }
  }

  const HopfStructure& h = a.hopf();
  r.counit = true;
  for (std::size_t b = 0; b < d; ++b) {
    for (std::size_t j = 0; j < d; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < g; ++k) s += c.coeff[b][j][k] * rational_part(h.counit[k]);
      if (s != (b == j ? 1 : 0)) r.counit = false;
    }
  }

  std::vector<QMatrix> delta;
  for (std::size_t k = 0; k < g; ++k) {
    QMatrix m(g, g, Rational(0));
    for (std::size_t x = 0; x < g; ++x) {
      for (std::size_t y = 0; y < g; ++y) m(x, y) = rational_part(h.delta[k](x, y));
    }
    delta.push_back(std::move(m));
  }
  r.coassociative = true;
  for (std::size_t b = 0; b < d && r.coassociative; ++b) {
    for (std::size_t i = 0; i < d && r.coassociative; ++i) {
      for (std::size_t m = 0; m < g && r.coassociative; ++m) {
        for (std::size_t l = 0; l < g && r.coassociative; ++l) {
          Rational lhs = 0, rhs = 0;
          for (std::size_t j = 0; j < d; ++j) lhs += c.coeff[b][j][l] * c.coeff[j][i][m];
          for (std::size_t k = 0; k < g; ++k) rhs += c.coeff[b][i][k] * delta[k](m, l);
          r.coassociative = lhs == rhs;
        }
      }
    }
  }
  return r;
}

std::vector<QVector> comodule_homs(const Coaction& x, const Coaction& y) {
  if (x.ring != y.ring) fail(ErrorCode::InvalidArgument, "coactions over different coordinate rings");
  std::size_t dx = x.coeff.size(), dy = y.coeff.size();
  std::size_t g = static_cast<std::size_t>(x.ring->dim());
  if (dx * dy == 0) return {};
  QMatrix eq(dx * dy * g, dx * dy, Rational(0));
  for (std::size_t b = 0; b < dx; ++b) {
    for (std::size_t i = 0; i < dy; ++i) {
      for (std::size_t k = 0; k < g; ++k) {
        std::size_t row = (b * dy + i) * g + k;
        for (std::size_t j = 0; j < dy; ++j) eq(row, j * dx + b) += y.coeff[j][i][k];
        for (std::size_t j = 0; j < dx; ++j) eq(row, i * dx + j) -= x.coeff[b][j][k];
      }
    }
  }
  return kernel(kQ, std::move(eq));
}

bool tensor_compatible(const DeRham& v, const DeRham& w, const DeRham& vw) {
  const NumberField& nf = v.motive().ambient()->field();
  std::size_t a = static_cast<std::size_t>(v.motive().dim()), b = static_cast<std::size_t>(w.motive().dim());
  if (static_cast<std::size_t>(vw.motive().dim()) != a * b) return false;
  EchelonBasis<RationalField> span(kQ, static_cast<std::size_t>(vw.dim()));
  for (const auto& x : v.basis()) {
    for (const auto& y : w.basis()) {
      TensorElement t;
      for (std::size_t i = 0; i < a; ++i) {
        for (std::size_t j = 0; j < b; ++j) t.push_back(nf.mul(x[i], y[j]));
      }
      auto c = vw.coordinates(t);
      if (!c) return false;
      span.add(*c);
    }
  }
  return span.rank() == static_cast<std::size_t>(vw.dim());
}

}  // namespace galoisdr
