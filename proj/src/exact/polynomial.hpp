#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact/rational.hpp"

namespace galoisdr {

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the last entry is nonzero.
template <class T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }

  const T& operator[](std::size_t i) const { return c_[i]; }
  const T& leading() const {
    assert(!c_.empty());
    return c_.back();
  }
  const std::vector<T>& coeffs() const { return c_; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void normalize() {
    while (!c_.empty() && is_zero_element(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

using QPoly = Polynomial<Rational>;
using ZPoly = Polynomial<Integer>;

struct RationalField {
  using Element = Rational;
  Element zero() const { return Rational(0); }
  Element one() const { return Rational(1); }
  Element from_int(long v) const { return Rational(v); }
  Element from_rational(const Rational& q) const { return q; }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (sgn(a) == 0) fail(ErrorCode::Internal, "division by zero in Q");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_char_zero() const { return true; }
};

/// Polynomial arithmetic over a field policy F. F supplies zero, one,
/// from_int, add, sub, neg, mul, inv, div, is_zero, equal.
template <class F>
class PolyRing {
 public:
  using E = typename F::Element;
  using P = Polynomial<E>;

  explicit PolyRing(const F& field) : f_(field) {}

  const F& field() const { return f_; }

  P constant(const E& c) const { return P(std::vector<E>{c}); }
  P one() const { return constant(f_.one()); }
  P x() const { return P(std::vector<E>{f_.zero(), f_.one()}); }
  P monomial(const E& c, int deg) const {
    std::vector<E> v(static_cast<std::size_t>(deg) + 1, f_.zero());
    v.back() = c;
    return P(std::move(v));
  }
  /// x - a
  P linear(const E& a) const { return P(std::vector<E>{f_.neg(a), f_.one()}); }

  const E& coeff_or(const P& p, int i, const E& zero) const {
    return i <= p.degree() ? p[static_cast<std::size_t>(i)] : zero;
  }

  P add(const P& a, const P& b) const {
    std::size_t n = std::max(a.size(), b.size());
    std::vector<E> v;
    v.reserve(n);
    E z = f_.zero();
    for (std::size_t i = 0; i < n; ++i) {
      const E& x = i < a.size() ? a[i] : z;
      const E& y = i < b.size() ? b[i] : z;
      v.push_back(f_.add(x, y));
    }
    return P(std::move(v));
  }

  P sub(const P& a, const P& b) const {
    std::size_t n = std::max(a.size(), b.size());
    std::vector<E> v;
    v.reserve(n);
    E z = f_.zero();
    for (std::size_t i = 0; i < n; ++i) {
      const E& x = i < a.size() ? a[i] : z;
      const E& y = i < b.size() ? b[i] : z;
      v.push_back(f_.sub(x, y));
    }
    return P(std::move(v));
  }

  P neg(const P& a) const {
    std::vector<E> v;
    v.reserve(a.size());
    for (const auto& c : a.coeffs()) v.push_back(f_.neg(c));
    return P(std::move(v));
  }

  P scale(const P& a, const E& s) const {
    if (f_.is_zero(s)) return P();
    std::vector<E> v;
    v.reserve(a.size());
    for (const auto& c : a.coeffs()) v.push_back(f_.mul(c, s));
    return P(std::move(v));
  }

  P mul(const P& a, const P& b) const {
    if (a.is_zero() || b.is_zero()) return P();
    std::vector<E> v(a.size() + b.size() - 1, f_.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (f_.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        v[i + j] = f_.add(v[i + j], f_.mul(a[i], b[j]));
      }
    }
    return P(std::move(v));
  }

  P pow(const P& a, unsigned e) const {
    P result = one();
    P base = a;
    while (e) {
      if (e & 1U) result = mul(result, base);
      e >>= 1U;
      if (e) base = mul(base, base);
    }
    return result;
  }

  std::pair<P, P> divmod(const P& a, const P& b) const {
    if (b.is_zero()) fail(ErrorCode::Internal, "polynomial division by zero");
    if (a.degree() < b.degree()) return {P(), a};
    std::vector<E> r = a.coeffs();
    int db = b.degree();
    std::vector<E> q(static_cast<std::size_t>(a.degree() - db) + 1, f_.zero());
    E lead_inv = f_.inv(b.leading());
    for (int i = a.degree(); i >= db; --i) {
      const E& top = r[static_cast<std::size_t>(i)];
      if (f_.is_zero(top)) continue;
      E factor = f_.mul(top, lead_inv);
      for (int j = 0; j <= db; ++j) {
        auto idx = static_cast<std::size_t>(i - db + j);
        r[idx] = f_.sub(r[idx], f_.mul(factor, b[static_cast<std::size_t>(j)]));
      }
      q[static_cast<std::size_t>(i - db)] = std::move(factor);
    }
    r.resize(static_cast<std::size_t>(db));
    return {P(std::move(q)), P(std::move(r))};
  }

  P rem(const P& a, const P& b) const { return divmod(a, b).second; }
  P quo(const P& a, const P& b) const { return divmod(a, b).first; }

  /// Quotient of an exact division; throws if the remainder is nonzero.
  P exact_quo(const P& a, const P& b) const {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(ErrorCode::Internal, "inexact polynomial division");
    return q;
  }

  bool divides(const P& d, const P& a) const { return rem(a, d).is_zero(); }

  P monic(const P& a) const {
    if (a.is_zero()) return a;
    return scale(a, f_.inv(a.leading()));
  }

  bool is_monic(const P& a) const { return !a.is_zero() && f_.equal(a.leading(), f_.one()); }

  /// Monic gcd; gcd(0, 0) = 0.
  P gcd(P a, P b) const {
    while (!b.is_zero()) {
      P r = rem(a, b);
      a = std::move(b);
      b = monic(r);
    }
    return monic(a);
  }

  struct Xgcd {
    P g;
    P s;
    P t;
  };

  /// s*a + t*b = g with g the monic gcd.
  Xgcd xgcd(const P& a, const P& b) const {
    P r0 = a, r1 = b;
    P s0 = one(), s1;
    P t0, t1 = one();
    while (!r1.is_zero()) {
      auto [q, r] = divmod(r0, r1);
      P s2 = sub(s0, mul(q, s1));
      P t2 = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) return {P(), P(), P()};
    E li = f_.inv(r0.leading());
    return {scale(r0, li), scale(s0, li), scale(t0, li)};
  }

  P derivative(const P& a) const {
    if (a.degree() < 1) return P();
    std::vector<E> v;
    v.reserve(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) v.push_back(f_.mul(f_.from_int(static_cast<long>(i)), a[i]));
    return P(std::move(v));
  }

  E eval(const P& a, const E& x) const {
    E acc = f_.zero();
    for (std::size_t i = a.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), a[i]);
    return acc;
  }

  /// a(b(x))
  P compose(const P& a, const P& b) const {
    P acc;
    for (std::size_t i = a.size(); i-- > 0;) acc = add(mul(acc, b), constant(a[i]));
    return acc;
  }

  /// a(x + s)
  P shift(const P& a, const E& s) const {
    std::vector<E> c = a.coeffs();
    int n = a.degree();
    for (int i = 0; i < n; ++i) {
      for (int j = n - 1; j >= i; --j) {
        auto uj = static_cast<std::size_t>(j);
        c[uj] = f_.add(c[uj], f_.mul(s, c[uj + 1]));
      }
    }
    return P(std::move(c));
  }

  P mulmod(const P& a, const P& b, const P& m) const { return rem(mul(a, b), m); }

  P powmod(P base, Integer e, const P& m) const {
    P result = rem(one(), m);
    base = rem(base, m);
    while (sgn(e) > 0) {
      if (mpz_odd_p(e.get_mpz_t())) result = mulmod(result, base, m);
      e >>= 1;
      if (sgn(e) > 0) base = mulmod(base, base, m);
    }
    return result;
  }

  bool is_squarefree(const P& a) const {
    if (a.degree() < 1) return true;
    return gcd(a, derivative(a)).degree() == 0;
  }

  /// Yun's algorithm; characteristic zero only. Returns monic factors with
  /// multiplicities, each factor squarefree and pairwise coprime.
  std::vector<std::pair<P, int>> squarefree_decomposition(const P& a) const {
    std::vector<std::pair<P, int>> out;
    if (a.degree() < 1) return out;
    P f = monic(a);
    P df = derivative(f);
    P g = gcd(f, df);
    P b = exact_quo(f, g);
    P c = exact_quo(df, g);
    P d = sub(c, derivative(b));
    int i = 1;
    while (b.degree() > 0) {
      P h = gcd(b, d);
      if (h.degree() > 0) out.emplace_back(h, i);
      b = exact_quo(b, h);
      c = exact_quo(d, h);
      d = sub(c, derivative(b));
      ++i;
    }
    return out;
  }

  P squarefree_part(const P& a) const {
    if (a.degree() < 1) return monic(a);
    return monic(exact_quo(a, gcd(a, derivative(a))));
  }

 private:
  const F& f_;
};

/// Resultant of a and b over a field, via the Euclidean remainder sequence.
/// Agrees with the Sylvester determinant.
template <class F>
typename F::Element resultant(const F& field, Polynomial<typename F::Element> a,
                              Polynomial<typename F::Element> b) {
  using E = typename F::Element;
  PolyRing<F> R(field);
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) fail(ErrorCode::InvalidArgument, "resultant of two zero polynomials");
    const auto& nz = a.is_zero() ? b : a;
    return nz.degree() == 0 ? field.one() : field.zero();
  }
  E acc = field.one();
  while (true) {
    int m = a.degree();
    int n = b.degree();
    if (n == 0) {
      E p = field.one();
      for (int i = 0; i < m; ++i) p = field.mul(p, b.leading());
      return field.mul(acc, p);
    }
    auto r = R.rem(a, b);
    if (r.is_zero()) return field.zero();
    int k = r.degree();
    if ((m % 2 == 1) && (n % 2 == 1)) acc = field.neg(acc);
    for (int i = 0; i < m - k; ++i) acc = field.mul(acc, b.leading());
    a = std::move(b);
    b = std::move(r);
  }
}

inline QPoly qpoly(std::initializer_list<long> coeffs_low_first) {
  std::vector<Rational> v;
  for (long c : coeffs_low_first) v.emplace_back(c);
  return QPoly(std::move(v));
}

/// Canonical order: degree first, then coefficients from the top down.
template <class T>
bool canonical_less(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto ui = static_cast<std::size_t>(i);
    int c = cmp(a[ui], b[ui]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace galoisdr
