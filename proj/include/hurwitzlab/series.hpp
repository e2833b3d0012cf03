#pragma once

// One-variable truncated power series and Laurent series over a coefficient
// ring R. R must be default-constructible as zero, constructible from
// Rational, and support +, -, *, unary -, and multiplication by Rational.
// Each series carries a validity order N: coefficients of exponents above N
// are unknown, and every operation reports the largest order it can
// guarantee from its inputs.

#include "hurwitzlab/multipoly.hpp"
#include "hurwitzlab/rational.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitzlab {

inline Rational ring_inverse(const Rational& a) {
  if (is_zero(a)) throw std::domain_error("inverse of zero");
  return Rational(1) / a;
}

inline MultiPoly ring_inverse(const MultiPoly& a) {
  auto c = a.constant_value();
  if (!c || is_zero(*c)) throw std::domain_error("polynomial is not a unit");
  return MultiPoly(Rational(1) / *c);
}

template <class R>
class TruncSeries {
 public:
  TruncSeries() = default;
  /// Series known up to z^order, all coefficients zero.
  explicit TruncSeries(int order) : coeffs_(check_order(order) + 1) {}
  TruncSeries(std::vector<R> coeffs, int order) : coeffs_(std::move(coeffs)) {
    check_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
  }

  static TruncSeries constant(const R& c, int order) {
    TruncSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  /// The series z (or zero if order < 1).
  static TruncSeries variable(int order) {
    TruncSeries s(order);
    if (order >= 1) s.coeffs_[1] = R(Rational(1));
    return s;
  }
  static TruncSeries monomial(int k, const R& c, int order) {
    TruncSeries s(order);
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<R>& coefficients() const { return coeffs_; }

  /// Coefficient of z^k; throws std::out_of_range above the validity order.
  const R& operator[](int k) const {
    if (k < 0 || k > order()) throw std::out_of_range("series coefficient beyond validity order");
    return coeffs_[static_cast<std::size_t>(k)];
  }
  R& at(int k) {
    if (k < 0 || k > order()) throw std::out_of_range("series coefficient beyond validity order");
    return coeffs_[static_cast<std::size_t>(k)];
  }

  /// Index of the first nonzero coefficient, or order()+1 if none is known.
  int valuation() const {
    for (int k = 0; k <= order(); ++k)
      if (!is_zero(coeffs_[static_cast<std::size_t>(k)])) return k;
    return order() + 1;
  }

  TruncSeries truncated(int new_order) const {
    if (new_order > order()) throw std::invalid_argument("cannot extend validity order");
    return TruncSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + new_order + 1), new_order);
  }

  TruncSeries& operator+=(const TruncSeries& o) {
    const int n = std::min(order(), o.order());
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) coeffs_[static_cast<std::size_t>(k)] += o.coeffs_[static_cast<std::size_t>(k)];
    return *this;
  }
  TruncSeries& operator-=(const TruncSeries& o) {
    const int n = std::min(order(), o.order());
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) coeffs_[static_cast<std::size_t>(k)] -= o.coeffs_[static_cast<std::size_t>(k)];
    return *this;
  }
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  TruncSeries operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    const int va = a.valuation(), vb = b.valuation();
    const int n = std::min(a.order() + vb, b.order() + va);
    TruncSeries r(n);
    for (int i = va; i <= std::min(a.order(), n); ++i) {
      const R& ai = a.coeffs_[static_cast<std::size_t>(i)];
      if (is_zero(ai)) continue;
      for (int j = vb; j <= std::min(b.order(), n - i); ++j)
        r.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
    }
    return r;
  }
  TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

  friend TruncSeries operator*(TruncSeries a, const Rational& c) {
    for (auto& x : a.coeffs_) x = x * c;
    return a;
  }
  friend TruncSeries operator*(const Rational& c, TruncSeries a) { return std::move(a) * c; }

  /// Multiplies every coefficient by a ring element.
  TruncSeries scaled(const R& c) const {
    TruncSeries r = *this;
    for (auto& x : r.coeffs_) x = c * x;
    return r;
  }

  /// z^k * f, k >= 0.
  TruncSeries shifted(int k) const {
    if (k < 0) throw std::invalid_argument("negative shift of a power series");
    TruncSeries r(order() + k);
    for (int i = 0; i <= order(); ++i) r.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
    return r;
  }

  /// f(c z).
  TruncSeries rescaled(const Rational& c) const {
    TruncSeries r = *this;
    Rational p(1);
    for (auto& x : r.coeffs_) {
      x = x * p;
      p *= c;
    }
    return r;
  }

  /// Odd part (f(z) - f(-z))/2 and even part.
  TruncSeries odd_part() const {
    TruncSeries r = *this;
    for (int k = 0; k <= order(); k += 2) r.coeffs_[static_cast<std::size_t>(k)] = R();
    return r;
  }
  TruncSeries even_part() const {
    TruncSeries r = *this;
    for (int k = 1; k <= order(); k += 2) r.coeffs_[static_cast<std::size_t>(k)] = R();
    return r;
  }

  TruncSeries derivative() const {
    if (order() == 0) return TruncSeries(0);
    TruncSeries r(order() - 1);
    for (int k = 1; k <= order(); ++k) r.coeffs_[static_cast<std::size_t>(k - 1)] = coeffs_[static_cast<std::size_t>(k)] * Rational(k);
    return r;
  }
  /// Antiderivative with zero constant term.
  TruncSeries integral() const {
    TruncSeries r(order() + 1);
    for (int k = 0; k <= order(); ++k) r.coeffs_[static_cast<std::size_t>(k + 1)] = coeffs_[static_cast<std::size_t>(k)] * Rational(1, k + 1);
    return r;
  }

  TruncSeries pow(unsigned e) const {
    TruncSeries result = constant(R(Rational(1)), order());
    TruncSeries base = *this;
    while (e != 0) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return result;
  }

  /// Equality of the coefficients both series know.
  bool agrees_with(const TruncSeries& o) const {
    const int n = std::min(order(), o.order());
    for (int k = 0; k <= n; ++k)
      if (coeffs_[static_cast<std::size_t>(k)] != o.coeffs_[static_cast<std::size_t>(k)]) return false;
    return true;
  }
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be nonnegative");
    return order;
  }
  std::vector<R> coeffs_{R()};
};

template <class R>
TruncSeries<R> compose(const TruncSeries<R>& f, const TruncSeries<R>& g) {
  if (!is_zero(g[0])) throw std::domain_error("compose: inner series has a nonzero constant term");
  const int v = g.valuation();
  const long bound = static_cast<long>(f.order() + 1) * v - 1;
  const int n = static_cast<int>(std::min<long>(bound, g.order()));
  // Horner: f_N + g(f_{N-1} + g(...)).
  TruncSeries<R> gn = g.truncated(std::min(g.order(), n));
  TruncSeries<R> acc = TruncSeries<R>::constant(f[f.order()], n);
  for (int k = f.order() - 1; k >= 0; --k) {
    acc = acc * gn;
    acc = acc.order() > n ? acc.truncated(n) : acc;
    acc.at(0) += f[k];
  }
  return acc.order() > n ? acc.truncated(n) : acc;
}

template <class R>
TruncSeries<R> exp(const TruncSeries<R>& f) {
  if (!is_zero(f[0])) throw std::domain_error("exp: series has a nonzero constant term");
  const int n = f.order();
  std::vector<R> e(static_cast<std::size_t>(n) + 1);
  e[0] = R(Rational(1));
  for (int m = 1; m <= n; ++m) {
    R acc;
    for (int k = 1; k <= m; ++k) acc += f[k] * e[static_cast<std::size_t>(m - k)] * Rational(k);
    e[static_cast<std::size_t>(m)] = acc * Rational(1, m);
  }
  return TruncSeries<R>(std::move(e), n);
}

template <class R>
TruncSeries<R> log(const TruncSeries<R>& f) {
  if (f[0] != R(Rational(1))) throw std::domain_error("log: constant term must be 1");
  const int n = f.order();
  std::vector<R> l(static_cast<std::size_t>(n) + 1);
  for (int m = 1; m <= n; ++m) {
    R acc = f[m] * Rational(m);
    for (int k = 1; k < m; ++k) acc -= l[static_cast<std::size_t>(k)] * f[m - k] * Rational(k);
    l[static_cast<std::size_t>(m)] = acc * Rational(1, m);
  }
  return TruncSeries<R>(std::move(l), n);
}

/// 1/f for f with invertible constant term.
template <class R>
TruncSeries<R> reciprocal(const TruncSeries<R>& f) {
  const R inv0 = ring_inverse(f[0]);
  const int n = f.order();
  std::vector<R> r(static_cast<std::size_t>(n) + 1);
  r[0] = inv0;
  for (int m = 1; m <= n; ++m) {
    R acc;
    for (int k = 1; k <= m; ++k) acc += f[k] * r[static_cast<std::size_t>(m - k)];
    r[static_cast<std::size_t>(m)] = -(inv0 * acc);
  }
  return TruncSeries<R>(std::move(r), n);
}

/// Square root with constant term 1 (f(0) must be 1).
template <class R>
TruncSeries<R> sqrt_unit(const TruncSeries<R>& f) {
  if (f[0] != R(Rational(1))) throw std::domain_error("sqrt: constant term must be 1");
  const int n = f.order();
  std::vector<R> s(static_cast<std::size_t>(n) + 1);
  s[0] = R(Rational(1));
  for (int m = 1; m <= n; ++m) {
    R acc = f[m];
    for (int k = 1; k < m; ++k) acc -= s[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(m - k)];
    s[static_cast<std::size_t>(m)] = acc * Rational(1, 2);
  }
  return TruncSeries<R>(std::move(s), n);
}

/// f^a = exp(a log f) for f(0) = 1 and rational a.
template <class R>
TruncSeries<R> pow_unit(const TruncSeries<R>& f, const Rational& a) {
  return exp(log(f) * a);
}

/// Compositional inverse of f with f(0) = 0 and f'(0) invertible.
template <class R>
TruncSeries<R> reverse(const TruncSeries<R>& f) {
  if (f.order() < 1 || !is_zero(f[0])) throw std::domain_error("reverse: need f(0) = 0");
  const R inv1 = ring_inverse(f[1]);
  const int n = f.order();
  TruncSeries<R> g = TruncSeries<R>::monomial(1, inv1, n);
  for (int k = 2; k <= n; ++k) {
    // Coefficient of z^k in f(g) is f1*g_k plus terms fixed by lower g_j.
    const TruncSeries<R> fg = compose(f.truncated(k), g.truncated(k));
    g.at(k) -= inv1 * fg[k];
  }
  return g;
}

// ---------------------------------------------------------------------------

/// z^low * body(z): a Laurent series with finite principal part. The validity
/// order refers to absolute exponents: coefficients of z^k, k <= order(), are
/// known.
template <class R>
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int low, TruncSeries<R> body) : low_(low), body_(std::move(body)) {}
  LaurentSeries(const TruncSeries<R>& s) : low_(0), body_(s) {}  // NOLINT

  static LaurentSeries monomial(int k, const R& c, int order) {
    if (order < k) throw std::invalid_argument("order below the monomial exponent");
    return LaurentSeries(k, TruncSeries<R>::monomial(0, c, order - k));
  }

  int low() const { return low_; }
  int order() const { return low_ + body_.order(); }
  const TruncSeries<R>& body() const { return body_; }

  R coefficient(int k) const {
    if (k > order()) throw std::out_of_range("Laurent coefficient beyond validity order");
    if (k < low_) return R();
    return body_[k - low_];
  }
  R residue() const { return coefficient(-1); }

  /// Lowest exponent with a nonzero known coefficient (order()+1 if none).
  int valuation() const { return low_ + body_.valuation(); }

  /// Rewrites with low() equal to the valuation (when known to be nonzero).
  LaurentSeries normalized() const {
    const int v = body_.valuation();
    if (v == 0 || v > body_.order()) return *this;
    std::vector<R> c(body_.coefficients().begin() + v, body_.coefficients().end());
    return LaurentSeries(low_ + v, TruncSeries<R>(std::move(c), body_.order() - v));
  }

  LaurentSeries with_low(int new_low) const {
    if (new_low > valuation()) throw std::invalid_argument("with_low would drop nonzero terms");
    if (new_low >= low_) {
      std::vector<R> c(body_.coefficients().begin() + (new_low - low_), body_.coefficients().end());
      return LaurentSeries(new_low, TruncSeries<R>(std::move(c), order() - new_low));
    }
    return LaurentSeries(new_low, body_.shifted(low_ - new_low));
  }

  LaurentSeries truncated(int new_order) const {
    if (new_order < low_) return LaurentSeries(new_order, TruncSeries<R>(0));
    return LaurentSeries(low_, body_.truncated(new_order - low_));
  }

  /// Power-series part (exponents >= 0); requires no principal part.
  TruncSeries<R> to_power_series() const {
    if (valuation() < 0) throw std::domain_error("series has a principal part");
    return with_low(0).body_;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const int lo = std::min(a.low_, b.low_);
    const int n = std::min(a.order(), b.order());
    if (n < lo) return LaurentSeries(n, TruncSeries<R>(0));
    TruncSeries<R> s(n - lo);
    for (int k = lo; k <= n; ++k) s.at(k - lo) = a.coefficient(k) + b.coefficient(k);
    return LaurentSeries(lo, std::move(s));
  }
  LaurentSeries operator-() const { return LaurentSeries(low_, -body_); }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }
  LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
  LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    return LaurentSeries(a.low_ + b.low_, a.body_ * b.body_);
  }
  LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }
  friend LaurentSeries operator*(LaurentSeries a, const Rational& c) {
    a.body_ = a.body_ * c;
    return a;
  }
  friend LaurentSeries operator*(const Rational& c, LaurentSeries a) { return std::move(a) * c; }
  LaurentSeries scaled(const R& c) const { return LaurentSeries(low_, body_.scaled(c)); }

  /// z^k * f for any integer k.
  LaurentSeries shifted(int k) const { return LaurentSeries(low_ + k, body_); }

  LaurentSeries derivative() const {
    const int n = order();
    if (n - 1 < low_ - 1) return LaurentSeries(low_ - 1, TruncSeries<R>(0));
    TruncSeries<R> s(n - low_);
    for (int k = low_; k <= n; ++k) s.at(k - low_) = body_[k - low_] * Rational(k);
    return LaurentSeries(low_ - 1, std::move(s));
  }

  /// f(c z).
  LaurentSeries rescaled(const Rational& c) const {
    const Rational lead = low_ >= 0 ? hurwitzlab::pow(c, static_cast<unsigned>(low_))
                                    : Rational(1) / hurwitzlab::pow(c, static_cast<unsigned>(-low_));
    return LaurentSeries(low_, body_.rescaled(c)) * lead;
  }

  LaurentSeries pow(unsigned e) const { return LaurentSeries(low_ * static_cast<int>(e), body_.pow(e)); }

  bool agrees_with(const LaurentSeries& o) const {
    const int lo = std::min(low_, o.low_);
    const int n = std::min(order(), o.order());
    for (int k = lo; k <= n; ++k)
      if (coefficient(k) != o.coefficient(k)) return false;
    return true;
  }

 private:
  int low_ = 0;
  TruncSeries<R> body_;
};

/// 1/f for a Laurent series whose lowest known nonzero coefficient is invertible.
template <class R>
LaurentSeries<R> reciprocal(const LaurentSeries<R>& f) {
  const LaurentSeries<R> n = f.normalized();
  if (n.valuation() > n.order()) throw std::domain_error("reciprocal of a series with no known nonzero term");
  return LaurentSeries<R>(-n.low(), reciprocal(n.body()));
}

template <class R>
R residue(const LaurentSeries<R>& f) {
  return f.residue();
}

// ---------------------------------------------------------------------------
// Frequently used Rational series.

using QSeries = TruncSeries<Rational>;
using QLaurent = LaurentSeries<Rational>;

/// e^{z/2} - e^{-z/2}.
QSeries zeta_series(int order);
/// e^z.
QSeries exp_series(int order);
/// log(1+z).
QSeries log1p_series(int order);

}  // namespace hurwitzlab
