#include "hurwitzlab/lambert.hpp"

#include <map>
#include <stdexcept>

namespace hurwitzlab {

PSeries lift(const QSeries& s) {
  std::vector<MultiPoly> c;
  c.reserve(s.coefficients().size());
  for (const Rational& x : s.coefficients()) c.emplace_back(x);
  return PSeries(std::move(c), s.order());
}

PLaurent lift(const QLaurent& s) { return PLaurent(s.low(), lift(s.body())); }

MultiPoly d_operator(const MultiPoly& p, int var) {
  const MultiPoly t = MultiPoly::variable(var);
  return t * t * (t + MultiPoly(1)) * p.derivative(var);
}

MultiPoly rho_poly(int k, int var) {
  if (k < 0) throw std::invalid_argument("rho_poly: k must be nonnegative");
  MultiPoly r = -MultiPoly(1) - MultiPoly::variable(var);
  for (int i = 0; i < k; ++i) r = d_operator(r, var);
  return r;
}

namespace {

QSeries sigma_series_uncached(int order) {
  // phi(s) = log(1+s) - s = -s^2/2 (1 + ...); psi(s) = s sqrt(-2 phi(s)/s^2)
  // satisfies psi^2 = -2 phi, so phi(sigma) = phi(z) on the branch
  // psi(sigma) = -psi(z).
  const int n = order + 1;
  const QSeries phi = log1p_series(n + 2) - QSeries::variable(n + 2);
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) q[static_cast<std::size_t>(k)] = phi[k + 2] * Rational(-2);
  const QSeries psi = sqrt_unit(QSeries(std::move(q), n)).shifted(1).truncated(n);
  const QSeries sigma = compose(reverse(psi), -psi);
  return sigma.truncated(order);
}

}  // namespace

QSeries sigma_series(int order) {
  if (order < 1) throw std::invalid_argument("sigma_series: order must be positive");
  thread_local QSeries cached = sigma_series_uncached(8);
  if (cached.order() < order) cached = sigma_series_uncached(std::max(order, cached.order() + 16));
  return cached.truncated(order);
}

QLaurent sigma_t_series(int order) {
  const QSeries s = sigma_series(order + 2);
  return reciprocal(QLaurent(s)).truncated(order);
}

QSeries eta_series(int order) { return sigma_series(order) - QSeries::variable(order); }

QLaurent inverse_z(int order) { return QLaurent::monomial(-1, Rational(1), order); }

PLaurent substitute_t(const MultiPoly& p, int var, const QLaurent& s) {
  const int deg = p.degree_in(var);
  PLaurent acc = lift(QLaurent(QSeries::constant(Rational(1), std::max(s.order(), 0) + 1)))
                     .scaled(p.coefficient_of(var, 0));
  QLaurent pw = s;
  for (int k = 1; k <= deg; ++k) {
    if (k > 1) pw = pw * s;
    const MultiPoly c = p.coefficient_of(var, k);
    if (c.is_zero()) continue;
    acc += lift(pw).scaled(c);
  }
  return acc;
}

PLaurent compose_sigma(const PLaurent& f, const QSeries& sigma) {
  // sigma = z u(z) with u(0) = -1.
  const int n = sigma.order() - 1;
  std::vector<Rational> uc(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) uc[static_cast<std::size_t>(k)] = sigma[k + 1];
  const QSeries u(std::move(uc), n);
  const int low = f.low();
  const QSeries ulow = low >= 0 ? u.pow(static_cast<unsigned>(low)) : reciprocal(u.pow(static_cast<unsigned>(-low)));
  const PSeries body = compose(f.body(), lift(sigma));
  return PLaurent(low, lift(ulow) * body);
}

MultiPoly odd_projection(const PLaurent& f, int t1_var) {
  const int n = f.order() - f.low() + 4;
  const QSeries sigma = sigma_series(n);
  const QSeries eta = sigma - QSeries::variable(n);
  const QLaurent inv_two_eta = reciprocal(QLaurent(eta)) * Rational(1, 2);
  const PLaurent g = (f + compose_sigma(f, sigma)) * lift(inv_two_eta);
  if (g.order() < -2) throw std::domain_error("odd_projection: validity order too low");
  MultiPoly out;
  const MultiPoly t = MultiPoly::variable(t1_var);
  for (int i = 2; -i >= g.low(); ++i) {
    const MultiPoly c = g.coefficient(-i);
    if (!c.is_zero()) out += c * t.pow(static_cast<unsigned>(i));
  }
  return out;
}

PSeries kernel_K(int order, int t1_var) {
  const MultiPoly t = MultiPoly::variable(t1_var);
  const PSeries sigma = lift(sigma_series(order));
  PSeries a(order), b(order);
  PSeries sp = PSeries::constant(MultiPoly(1), order);
  for (int k = 0; k <= order; ++k) {
    a.at(k) = t.pow(static_cast<unsigned>(k));
    if (k > 0) sp = sp * sigma;
    b += sp.scaled(t.pow(static_cast<unsigned>(k)));
  }
  PSeries c(order);  // z/(1+z)
  for (int k = 1; k <= order; ++k) c.at(k) = MultiPoly(k % 2 == 1 ? 1 : -1);
  return (a * b * c).scaled(t * t * (t + MultiPoly(1)) * Rational(1, 2));
}

PSeries kernel_K_difference_form(int order, int t1_var) {
  const int n = order + 2;
  const MultiPoly t = MultiPoly::variable(t1_var);
  const QSeries sigma_q = sigma_series(n);
  const PSeries sigma = lift(sigma_q);
  PSeries geo_z(n), geo_s(n);
  PSeries sp = PSeries::constant(MultiPoly(1), n);
  for (int k = 0; k <= n; ++k) {
    geo_z.at(k) = t.pow(static_cast<unsigned>(k));
    if (k > 0) sp = sp * sigma;
    geo_s += sp.scaled(t.pow(static_cast<unsigned>(k)));
  }
  PSeries c(n);  // z/(1+z)
  for (int k = 1; k <= n; ++k) c.at(k) = MultiPoly(k % 2 == 1 ? 1 : -1);
  const PSeries first = (geo_z * lift(QSeries::variable(n))).scaled(t * t);
  const PSeries second = (geo_s * (PSeries::constant(MultiPoly(1), n) + sigma) * c).scaled(t * t);
  const QSeries eta = sigma_q - QSeries::variable(n);
  const QLaurent inv = reciprocal(QLaurent(eta)) * Rational(1, 2);
  const PLaurent k = PLaurent(first - second) * lift(inv);
  return k.to_power_series().truncated(order);
}

MultiPoly kernel_residue(const PLaurent& f, int t1_var) {
  if (f.order() < -2) throw std::domain_error("kernel_residue: validity order too low");
  const int need = std::max(1, -1 - f.low());
  thread_local std::map<int, PSeries> cache;  // t1_var -> kernel
  auto it = cache.find(t1_var);
  if (it == cache.end() || it->second.order() < need)
    it = cache.insert_or_assign(t1_var, kernel_K(std::max(need, it == cache.end() ? 0 : it->second.order() + 8), t1_var)).first;
  const PLaurent prod = f * PLaurent(it->second.truncated(need));
  return -prod.coefficient(-1);
}

QSeries lambert_y(int x_order) {
  // x = y e^{-y}
  const QSeries f = exp_series(x_order).rescaled(Rational(-1)).shifted(1).truncated(x_order);
  return reverse(f);
}

QSeries t_of_x(int x_order) {
  const QSeries y = lambert_y(x_order);
  return reciprocal(y - QSeries::constant(Rational(1), x_order));
}

QSeries x_expand(const MultiPoly& p, int x_order, int var) {
  const QSeries t = t_of_x(x_order);
  QSeries acc(x_order);
  for (int k = p.degree_in(var); k >= 0; --k) {
    const auto c = p.coefficient_of(var, k).constant_value();
    if (!c) throw std::invalid_argument("x_expand: polynomial must be univariate");
    acc = acc * t + QSeries::constant(*c, x_order);
  }
  return acc;
}

namespace {

// Dense coefficients of x_i^{m_i} (1 <= m_i <= X) for variables i..n-1,
// row-major with variable i slowest.
std::vector<Rational> expand_dense(const MultiPoly& p, int i, int n, int X, const std::vector<QSeries>& tpow) {
  if (i == n) {
    const auto c = p.constant_value();
    return {c ? *c : Rational(0)};
  }
  std::size_t rest = 1;
  for (int k = i + 1; k < n; ++k) rest *= static_cast<std::size_t>(X);
  std::vector<Rational> out(rest * static_cast<std::size_t>(X));
  if (p.is_zero()) return out;
  for (int e = 0; e <= p.degree_in(i); ++e) {
    const MultiPoly c = p.coefficient_of(i, e);
    if (c.is_zero()) continue;
    const std::vector<Rational> sub = expand_dense(c, i + 1, n, X, tpow);
    const QSeries& te = tpow[static_cast<std::size_t>(e)];
    for (int m = 1; m <= X; ++m) {
      const Rational& a = te[m];
      if (is_zero(a)) continue;
      for (std::size_t r = 0; r < rest; ++r)
        if (!is_zero(sub[r])) out[static_cast<std::size_t>(m - 1) * rest + r] += a * sub[r];
    }
  }
  return out;
}

}  // namespace

std::map<std::vector<int>, Rational> x_expand_multi(const MultiPoly& p, int n, int x_order) {
  const QSeries t = t_of_x(x_order);
  int deg = 0;
  for (int i = 0; i < n; ++i) deg = std::max(deg, p.degree_in(i));
  std::vector<QSeries> tpow{QSeries::constant(Rational(1), x_order)};
  for (int e = 1; e <= deg; ++e) tpow.push_back(tpow.back() * t);
  const std::vector<Rational> dense = expand_dense(p, 0, n, x_order, tpow);
  std::map<std::vector<int>, Rational> out;
  std::vector<int> idx(static_cast<std::size_t>(n), 1);
  for (const Rational& v : dense) {
    out.emplace(idx, v);
    for (int k = n - 1; k >= 0; --k) {
      if (++idx[static_cast<std::size_t>(k)] <= x_order) break;
      idx[static_cast<std::size_t>(k)] = 1;
    }
  }
  return out;
}

RhoPairReport rho_pair_check(int k_max, int order) {
  RhoPairReport rep;
  std::vector<std::vector<RhoPairRow>> runs;
  for (int ord : {order, order + 4}) {
    std::vector<RhoPairRow> rows;
    const QLaurent inv_sigma = sigma_t_series(ord);
    const QLaurent inv_z = inverse_z(ord);
    for (int k = 0; k <= k_max; ++k) {
      const MultiPoly r = rho_poly(k);
      const PLaurent f = substitute_t(r, 0, inv_z) + substitute_t(r, 0, inv_sigma);
      bool ok = f.order() >= 0;
      for (int j = f.low(); j < 0 && ok; ++j) ok = f.coefficient(j).is_zero();
      const auto c0 = f.order() >= 0 ? f.coefficient(0).constant_value() : std::nullopt;
      rows.push_back({k, ok, c0 ? *c0 : Rational(0)});
    }
    runs.push_back(std::move(rows));
  }
  rep.rows = runs[0];
  for (std::size_t i = 0; i < runs[0].size(); ++i)
    rep.stable = rep.stable && runs[0][i].holomorphic == runs[1][i].holomorphic &&
                 runs[0][i].constant_term == runs[1][i].constant_term;
  return rep;
}

}  // namespace hurwitzlab
