#include "hurwitzlab/bm.hpp"

#include "hurwitzlab/hurwitz.hpp"
#include "hurwitzlab/partitions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hurwitzlab {

std::string form_name(ResidueForm f) {
  switch (f) {
    case ResidueForm::diagonal: return "diagonal";
    case ResidueForm::mixed: return "mixed";
    case ResidueForm::conjugate: return "conjugate";
    case ResidueForm::odd_projection: return "odd_projection";
  }
  return "?";
}

namespace {

MultiPoly tvar(int i) { return MultiPoly::variable(i); }

MultiPoly cubic(int i) { return tvar(i) * tvar(i) * (tvar(i) + 1); }

bool stable(int g, int n) { return 2 * g - 2 + n > 0 && n >= 1; }

int degree_bound(int g, int n) { return 6 * g + 2 * n - 3; }

// Argument 1/w of W with w = z or w = sigma(z), both through z^order.
struct Arg {
  bool sigma = false;
  QSeries w;
  QLaurent inv;
};

Arg make_arg(bool sigma, int order) {
  Arg a;
  a.sigma = sigma;
  a.w = sigma ? sigma_series(order) : QSeries::variable(order);
  a.inv = sigma ? sigma_t_series(order) : inverse_z(order);
  return a;
}

// W_{0,2}(1/w, t_var) = (1+w)/w * t^2 (t+1) * sum (k+1) t^k w^k.
PLaurent w02_one_argument(const Arg& a, int var) {
  const int n = a.w.order();
  const MultiPoly t = tvar(var);
  const PSeries w = lift(a.w);
  PSeries geo(n);
  PSeries wp = PSeries::constant(MultiPoly(1), n);
  MultiPoly tp(1);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      wp = wp * w;
      tp *= t;
    }
    geo += wp.scaled(tp * Rational(k + 1));
  }
  const QLaurent pref = a.inv + QLaurent(QSeries::constant(Rational(1), n));
  return (lift(pref) * PLaurent(geo)).scaled(cubic(var));
}

// W_{0,2}(1/z, 1/sigma) = (1+z)(1+sigma) / (z sigma (z - sigma)^2).
PLaurent w02_mixed(int order) {
  const QSeries z = QSeries::variable(order);
  const QSeries s = sigma_series(order);
  const QSeries one = QSeries::constant(Rational(1), order);
  const QSeries num = (one + z) * (one + s);
  const QSeries d = z - s;
  const QSeries den = z * s * d * d;
  return lift(QLaurent(num) * reciprocal(QLaurent(den)));
}

// p with variable u_var -> 1/w_u and v_var -> 1/w_v.
PLaurent substitute_two(const MultiPoly& p, int u_var, const Arg& u, int v_var, const Arg& v) {
  PLaurent acc;
  bool first = true;
  QLaurent vp;
  for (int k = 0; k <= p.degree_in(v_var); ++k) {
    vp = k == 0 ? QLaurent(QSeries::constant(Rational(1), v.inv.order() + 1)) : vp * v.inv;
    const MultiPoly c = p.coefficient_of(v_var, k);
    if (c.is_zero()) continue;
    const PLaurent term = substitute_t(c, u_var, u.inv) * lift(vp);
    acc = first ? term : acc + term;
    first = false;
  }
  if (first) return lift(QLaurent(QSeries(std::max(u.inv.order(), 0))));
  return acc;
}

MultiPoly rename_to(const MultiPoly& p, const std::vector<int>& mapping) { return p.rename(mapping); }

void subsets(const std::vector<int>& items, std::vector<std::vector<int>>& out) {
  const std::size_t m = items.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> s;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(items[i]);
    out.push_back(std::move(s));
  }
}

std::vector<int> complement(const std::vector<int>& all, const std::vector<int>& a) {
  std::vector<int> r;
  for (int x : all)
    if (std::find(a.begin(), a.end(), x) == a.end()) r.push_back(x);
  return r;
}

}  // namespace

MultiPoly w02_numerator(int a, int b) { return cubic(a) * cubic(b); }

MultiPoly w02_regular_diagonal(int var) {
  const MultiPoly t = tvar(var);
  return (t + 1) * (t + 1) * (t * t * 3 - t * 2 + 1) * Rational(1, 12);
}

std::vector<WTildeTerm> w_tilde_terms(int g, int n) {
  std::vector<WTildeTerm> out;
  if (g >= 1) {
    WTildeTerm t;
    t.genus_drop = true;
    t.g1 = g - 1;
    out.push_back(t);
  }
  std::vector<int> rest;
  for (int i = 1; i < n; ++i) rest.push_back(i);
  std::vector<std::vector<int>> parts;
  subsets(rest, parts);
  for (int g1 = 0; g1 <= g; ++g1)
    for (const auto& A : parts) {
      WTildeTerm t;
      t.g1 = g1;
      t.A = A;
      t.g2 = g - g1;
      t.B = complement(rest, A);
      t.vanishes = (t.g1 == 0 && t.A.empty()) || (t.g2 == 0 && t.B.empty());
      out.push_back(std::move(t));
    }
  return out;
}

const MultiPoly& WTable::get(int g, int n) {
  if (!stable(g, n)) throw std::invalid_argument("WTable::get: unstable (g,n)");
  auto it = w_.find({g, n});
  if (it != w_.end()) return it->second;
  MultiPoly w = step(g, n, ResidueForm::mixed);
  return w_.emplace(std::make_pair(g, n), std::move(w)).first->second;
}

PLaurent WTable::w_tilde_expansion(int g, int n, bool u_sigma, bool v_sigma, int extra_order) {
  if (!stable(g, n)) throw std::invalid_argument("w_tilde_expansion: unstable (g,n)");
  const int order = 2 * degree_bound(g, n) + 8 + extra_order;
  const Arg u = make_arg(u_sigma, order);
  const Arg v = make_arg(v_sigma, order);
  PLaurent acc;
  bool first = true;
  auto add = [&](const PLaurent& p) {
    acc = first ? p : acc + p;
    first = false;
  };
  for (const WTildeTerm& term : w_tilde_terms(g, n)) {
    if (term.vanishes) continue;
    if (term.genus_drop) {
      if (g - 1 == 0 && n + 1 == 2) {
        if (u_sigma == v_sigma)
          add(substitute_t(w02_regular_diagonal(0), 0, u.inv));
        else
          add(w02_mixed(order));
        continue;
      }
      // W_{g-1,n+1}(u, v, t_2..t_n): u in slot 0, v in slot n.
      std::vector<int> map{0, n};
      for (int i = 1; i < n; ++i) map.push_back(i);
      const MultiPoly p = rename_to(get(g - 1, n + 1), map);
      add(substitute_two(p, 0, u, n, v));
      continue;
    }
    auto factor = [&](int gi, const std::vector<int>& S, const Arg& a) {
      if (gi == 0 && S.size() == 1) return w02_one_argument(a, S[0]);
      std::vector<int> map{0};
      map.insert(map.end(), S.begin(), S.end());
      const MultiPoly p = rename_to(get(gi, static_cast<int>(S.size()) + 1), map);
      return substitute_t(p, 0, a.inv);
    };
    add(factor(term.g1, term.A, u) * factor(term.g2, term.B, v));
  }
  if (first) throw std::logic_error("w_tilde_expansion: no summands");
  return acc;
}

MultiPoly WTable::step(int g, int n, ResidueForm form, int extra_order) {
  switch (form) {
    case ResidueForm::diagonal:
      return kernel_residue(w_tilde_expansion(g, n, false, false, extra_order), 0);
    case ResidueForm::mixed:
      return -kernel_residue(w_tilde_expansion(g, n, false, true, extra_order), 0);
    case ResidueForm::conjugate:
      return kernel_residue(w_tilde_expansion(g, n, true, true, extra_order), 0);
    case ResidueForm::odd_projection:
      return hurwitzlab::odd_projection(w_tilde_expansion(g, n, false, false, extra_order), 0);
  }
  throw std::logic_error("unknown residue form");
}

BmStepReport WTable::step_report(int g, int n) {
  BmStepReport rep;
  rep.g = g;
  rep.n = n;
  rep.forms_agree = true;
  rep.stable = true;
  const MultiPoly* ref = nullptr;
  for (ResidueForm f : {ResidueForm::mixed, ResidueForm::diagonal, ResidueForm::conjugate, ResidueForm::odd_projection}) {
    const MultiPoly a = step(g, n, f);
    const MultiPoly b = step(g, n, f, 4);
    rep.stable = rep.stable && a == b;
    auto [it, ok] = rep.by_form.emplace(f, a);
    if (ref == nullptr)
      ref = &it->second;
    else
      rep.forms_agree = rep.forms_agree && *ref == a;
  }
  return rep;
}

MultiPoly rho_expansion(const MultiPoly& P, int n, int shift) {
  std::map<std::pair<int, int>, MultiPoly> rho;
  auto r = [&](int k, int var) -> const MultiPoly& {
    auto it = rho.find({k, var});
    if (it == rho.end()) it = rho.emplace(std::make_pair(k, var), rho_poly(k, var)).first;
    return it->second;
  };
  MultiPoly out;
  for (const auto& [exps, c] : P.terms()) {
    if (static_cast<int>(exps.size()) > n) throw std::invalid_argument("rho_expansion: too many variables");
    MultiPoly term(c);
    for (int i = 0; i < n; ++i) {
      const int k = i < static_cast<int>(exps.size()) ? exps[static_cast<std::size_t>(i)] : 0;
      term = term * r(k + shift, i);
    }
    out += term;
  }
  return out;
}

ShapeReport w_shape(const MultiPoly& w, int g, int n) {
  ShapeReport s;
  s.symmetric = w.is_symmetric(n);
  s.degree_ok = true;
  s.divisible = true;
  for (int i = 0; i < n; ++i) {
    s.degree_ok = s.degree_ok && w.degree_in(i) <= degree_bound(g, n);
    s.divisible = s.divisible && w.min_degree_in(i) >= 2;
  }
  const int m = 2 + w.degree_in(0);
  const PLaurent f = substitute_t(w, 0, inverse_z(m)) + substitute_t(w, 0, sigma_t_series(m));
  s.odd_pole = f.order() >= 0;
  for (int j = f.low(); j < 0 && s.odd_pole; ++j) s.odd_pole = f.coefficient(j).is_zero();
  return s;
}

// ---------------------------------------------------------------------------

namespace {

const MultiPoly& fitted_h(int g, int n) {
  thread_local std::map<std::pair<int, int>, MultiPoly> cache;
  auto it = cache.find({g, n});
  if (it != cache.end()) return it->second;
  const PolyFit fit = fit_P_polynomial(g, n, default_grid_side(g, n), 2);
  return cache.emplace(std::make_pair(g, n), rho_expansion(fit.P, n, 0)).first->second;
}

MultiPoly d_op(const MultiPoly& p, int var) { return d_operator(p, var); }

// Vandermonde-type product prod_{a<b} (t_a - t_b) divided by prod (t_k - t_j)
// over the listed ordered pairs (each unordered pair at most once).
MultiPoly delta_over(int n, const std::vector<std::pair<int, int>>& removed) {
  MultiPoly d(1);
  int sign = 1;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      bool skip = false;
      for (auto [k, j] : removed)
        if ((k == a && j == b) || (k == b && j == a)) {
          skip = true;
          if (k > j) sign = -sign;
        }
      if (!skip) d = d * (tvar(a) - tvar(b));
    }
  return sign == 1 ? d : -d;
}

// c_kj = t_k^2 (1 + t_j) / (t_k - t_j), numerator only.
MultiPoly c_numerator(int k, int j) { return tvar(k) * tvar(k) * (tvar(j) + 1); }

}  // namespace

CutJoinReport cutjoin_t_check(int g, int n) {
  if (!stable(g, n)) throw std::invalid_argument("cutjoin_t_check: unstable (g,n)");
  CutJoinReport rep;
  rep.g = g;
  rep.n = n;
  const MultiPoly delta = delta_over(n, {});
  const MultiPoly& H = fitted_h(g, n);

  MultiPoly lhs = H * Rational(2 * g - 2 + n);
  for (int k = 0; k < n; ++k) lhs -= tvar(k) * (tvar(k) + 1) * H.derivative(k);
  lhs = lhs * delta;

  MultiPoly rhs;
  if (g == 0 && n == 3) {
    // Recombined cut term: sum_k c_kj c_ki - 1.
    for (int k = 0; k < 3; ++k) {
      const int j = (k + 1) % 3, i = (k + 2) % 3;
      rhs += c_numerator(k, j) * c_numerator(k, i) * delta_over(3, {{k, j}, {k, i}});
    }
    rhs -= delta;
  } else if (n >= 2) {
    const MultiPoly& Hc = fitted_h(g, n - 1);
    for (int j = 0; j < n; ++j) {
      std::vector<int> map;
      for (int a = 0; a < n; ++a)
        if (a != j) map.push_back(a);
      const MultiPoly Hj = Hc.rename(map);
      for (int k = 0; k < n; ++k) {
        if (k == j) continue;
        rhs += c_numerator(k, j) * d_op(Hj, k) * delta_over(n, {{k, j}});
      }
    }
  }

  MultiPoly join;
  for (int k = 0; k < n; ++k) {
    if (g >= 1) {
      if (g == 1 && n == 1) {
        join += w02_regular_diagonal(k);
      } else {
        const MultiPoly& Hd = fitted_h(g - 1, n + 1);
        join += d_op(d_op(Hd, k), n).substitute(n, tvar(k));
      }
    }
    std::vector<int> rest;
    for (int a = 0; a < n; ++a)
      if (a != k) rest.push_back(a);
    std::vector<std::vector<int>> parts;
    subsets(rest, parts);
    for (int g1 = 0; g1 <= g; ++g1)
      for (const auto& A : parts) {
        const auto B = complement(rest, A);
        const int n1 = static_cast<int>(A.size()) + 1, n2 = static_cast<int>(B.size()) + 1;
        if (!stable(g1, n1) || !stable(g - g1, n2)) continue;
        std::vector<int> ma{k}, mb{k};
        ma.insert(ma.end(), A.begin(), A.end());
        mb.insert(mb.end(), B.begin(), B.end());
        join += d_op(fitted_h(g1, n1).rename(ma), k) * d_op(fitted_h(g - g1, n2).rename(mb), k);
      }
  }
  rhs += join * delta * Rational(1, 2);

  rep.holds = lhs == rhs;
  rep.lhs_degree = lhs.total_degree();
  const int top = std::max(lhs.total_degree(), rhs.total_degree());
  rep.top_degree_holds = lhs.homogeneous_part(top) == rhs.homogeneous_part(top);
  if (!rep.holds) {
    const MultiPoly diff = lhs - rhs;
    rep.detail = "difference has " + std::to_string(diff.size()) + " terms, total degree " +
                 std::to_string(diff.total_degree());
  }
  return rep;
}

BmHurwitzReport bm_vs_hurwitz(const MultiPoly& w, int g, int n, int x_order) {
  BmHurwitzReport rep;
  rep.g = g;
  rep.n = n;
  rep.x_order = x_order;
  const auto coeffs = x_expand_multi(w, n, x_order);
  std::map<Partition, Rational> h_cache;
  for (const auto& [mu, c] : coeffs) {
    const Partition p(mu);
    auto it = h_cache.find(p);
    if (it == h_cache.end()) it = h_cache.emplace(p, h_connected(g, p)).first;
    Rational expected = it->second;
    for (int m : mu) expected *= Rational(m);
    expected /= Rational(factorial(branch_count(g, p)));
    ++rep.coefficients_checked;
    if (expected != c) {
      if (rep.mismatches == 0) {
        std::ostringstream os;
        os << "mu = " << p.to_string() << ": series " << c << ", Hurwitz " << expected;
        rep.first_mismatch = os.str();
      }
      ++rep.mismatches;
    }
  }
  return rep;
}

bool w02_x_check(int x_order) {
  // Bivariate series truncated to the box [0..X]^2: coefficient (a, b) is exact.
  const int X = x_order;
  using Box = std::vector<std::vector<Rational>>;
  auto zero = [&] { return Box(static_cast<std::size_t>(X) + 1, std::vector<Rational>(static_cast<std::size_t>(X) + 1)); };
  auto mul = [&](const Box& a, const Box& b) {
    Box r = zero();
    for (int i = 0; i <= X; ++i)
      for (int j = 0; j <= X; ++j) {
        if (is_zero(a[i][j])) continue;
        for (int k = 0; i + k <= X; ++k)
          for (int l = 0; j + l <= X; ++l) r[i + k][j + l] += a[i][j] * b[k][l];
      }
    return r;
  };
  auto add = [&](Box a, const Box& b, const Rational& s) {
    for (int i = 0; i <= X; ++i)
      for (int j = 0; j <= X; ++j) a[i][j] += b[i][j] * s;
    return a;
  };
  const QSeries t = t_of_x(X);
  Box t1 = zero(), t2 = zero(), x1 = zero(), x2 = zero(), one = zero();
  for (int k = 0; k <= X; ++k) {
    t1[k][0] = t[k];
    t2[0][k] = t[k];
  }
  x1[1][0] = 1;
  x2[0][1] = 1;
  one[0][0] = 1;
  const Box dt = add(t2, t1, Rational(-1));
  const Box dx = add(x1, x2, Rational(-1));
  const Box dt2 = mul(dt, dt), dx2 = mul(dx, dx);
  const Box c1 = mul(mul(t1, t1), add(t1, one, Rational(1)));
  const Box c2 = mul(mul(t2, t2), add(t2, one, Rational(1)));
  // (t2-t1)^2 (x1-x2)^2 S = c1 c2 (x1-x2)^2 - x1 x2 (t2-t1)^2
  const Box rhs = add(mul(mul(c1, c2), dx2), mul(mul(x1, x2), dt2), Rational(-1));
  Box S = zero();
  for (int a = 1; a <= X; ++a)
    for (int b = 1; b <= X; ++b) {
      Rational v = Rational(1);
      for (int i = 0; i < a; ++i) v *= Rational(a);
      for (int i = 0; i < b; ++i) v *= Rational(b);
      S[a][b] = v / Rational(factorial(a)) / Rational(factorial(b)) * Rational(a * b) / Rational(a + b);
    }
  const Box lhs = mul(mul(dt2, dx2), S);
  return lhs == rhs;
}

}  // namespace hurwitzlab
