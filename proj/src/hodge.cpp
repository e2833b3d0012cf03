#include "hurwitzlab/hodge.hpp"

#include "hurwitzlab/hurwitz.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace hurwitzlab {

namespace {

using Multiset = std::vector<int>;  // sorted ascending

int count_of(const Multiset& s, int v) { return static_cast<int>(std::count(s.begin(), s.end(), v)); }

Multiset without(const Multiset& s, int v) {
  Multiset r = s;
  r.erase(std::find(r.begin(), r.end(), v));
  return r;
}

Multiset with(Multiset s, int v) {
  s.insert(std::upper_bound(s.begin(), s.end(), v), v);
  return s;
}

Multiset merged(const Multiset& a, const Multiset& b) {
  Multiset r;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

int sum_of(const Multiset& s) { return std::accumulate(s.begin(), s.end(), 0); }

Rational dfact(int n) { return Rational(double_factorial(n)); }

// All sub-multisets of s as (I, J) with I + J = s, each listed once.
void split_multiset(const Multiset& s, std::vector<std::pair<Multiset, Multiset>>& out) {
  std::vector<std::pair<int, int>> groups;  // value, multiplicity
  for (int v : s) {
    if (!groups.empty() && groups.back().first == v)
      ++groups.back().second;
    else
      groups.emplace_back(v, 1);
  }
  std::vector<int> take(groups.size(), 0);
  while (true) {
    Multiset I, J;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      I.insert(I.end(), static_cast<std::size_t>(take[i]), groups[i].first);
      J.insert(J.end(), static_cast<std::size_t>(groups[i].second - take[i]), groups[i].first);
    }
    out.emplace_back(std::move(I), std::move(J));
    std::size_t i = 0;
    while (i < groups.size() && take[i] == groups[i].second) take[i++] = 0;
    if (i == groups.size()) break;
    ++take[i];
  }
}

// Number of ways to choose positions for I inside I + J.
Rational position_count(const Multiset& I, const Multiset& T) {
  Rational c(1);
  for (std::size_t i = 0; i < I.size();) {
    const int v = I[i];
    const int k = count_of(I, v);
    c *= Rational(binomial(count_of(T, v), k));
    i += static_cast<std::size_t>(k);
  }
  return c;
}

Rational wk_sorted(int g, const Multiset& d);

Rational wk_uncached(int g, const Multiset& d) {
  const int n = static_cast<int>(d.size());
  if (g < 0 || 2 * g - 2 + n <= 0) return Rational(0);
  if (!d.empty() && d.front() < 0) return Rational(0);
  if (sum_of(d) != 3 * g - 3 + n) return Rational(0);
  if (g == 0 && n == 3) return Rational(1);
  if (g == 1 && n == 1) return Rational(1, 24);
  if (d.front() == 0) {
    // String equation.
    const Multiset rest = without(d, 0);
    Rational acc(0);
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == 0) continue;
      Multiset r = rest;
      --r[j];
      std::sort(r.begin(), r.end());
      acc += wk_sorted(g, r);
    }
    return acc;
  }
  if (d.front() == 1) return Rational(2 * g - 2 + n - 1) * wk_sorted(g, without(d, 1));
  // DVV with tau_{k+1}, k + 1 = d.back() >= 2.
  const int k = d.back() - 1;
  const Multiset S = without(d, d.back());
  Rational acc(0);
  for (std::size_t j = 0; j < S.size(); ++j) {
    Multiset r = S;
    r[j] += k;
    std::sort(r.begin(), r.end());
    acc += dfact(2 * k + 2 * S[j] + 1) / dfact(2 * S[j] - 1) * wk_sorted(g, r);
  }
  std::vector<std::pair<Multiset, Multiset>> splits;
  split_multiset(S, splits);
  for (int a = 0; a <= k - 1; ++a) {
    const int b = k - 1 - a;
    const Rational w = dfact(2 * a + 1) * dfact(2 * b + 1) * Rational(1, 2);
    acc += w * wk_sorted(g - 1, with(with(S, a), b));
    for (int g1 = 0; g1 <= g; ++g1)
      for (const auto& [I, J] : splits) {
        const Rational x = wk_sorted(g1, with(I, a));
        if (is_zero(x)) continue;
        acc += w * position_count(I, S) * x * wk_sorted(g - g1, with(J, b));
      }
  }
  return acc / dfact(2 * k + 3);
}

Rational wk_sorted(int g, const Multiset& d) {
  thread_local std::map<std::pair<int, Multiset>, Rational> memo;
  const auto key = std::make_pair(g, d);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const Rational v = wk_uncached(g, d);
  memo.emplace(key, v);
  return v;
}

// Nondecreasing sequences of length n with entries >= 0 and sum s.
void multisets_with_sum(int n, int s, int min_part, Multiset& cur, std::vector<Multiset>& out) {
  if (n == 0) {
    if (s == 0) out.push_back(cur);
    return;
  }
  for (int v = min_part; v * n <= s; ++v) {
    cur.push_back(v);
    multisets_with_sum(n - 1, s - v, v, cur, out);
    cur.pop_back();
  }
}

using Terms = std::map<Potential::Key, Rational>;

void add_to(Terms& t, const Potential::Key& k, const Rational& v) {
  if (is_zero(v)) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, v);
    return;
  }
  it->second += v;
  if (is_zero(it->second)) t.erase(it);
}

}  // namespace

Rational wk_correlator(int g, std::vector<int> d) {
  std::sort(d.begin(), d.end());
  return wk_sorted(g, d);
}

Rational Potential::coefficient(int g, std::vector<int> k) const {
  std::sort(k.begin(), k.end());
  auto it = c.find({g, k});
  return it == c.end() ? Rational(0) : it->second;
}

MultiPoly Potential::genus_part(int g, int n) const {
  MultiPoly out;
  for (const auto& [key, v] : c) {
    if (key.first != g || static_cast<int>(key.second.size()) != n) continue;
    // Distinct orderings of the multiset: n!/prod mult!; times 1/n!.
    Rational w = v;
    for (std::size_t i = 0; i < key.second.size();) {
      const int m = count_of(key.second, key.second[i]);
      w /= Rational(factorial(m));
      i += static_cast<std::size_t>(m);
    }
    Exponents e;
    for (int k : key.second) {
      if (static_cast<int>(e.size()) <= k) e.resize(static_cast<std::size_t>(k) + 1, 0);
      ++e[static_cast<std::size_t>(k)];
    }
    out += MultiPoly::monomial(e, w);
  }
  return out;
}

Potential kw_potential(int G, int M) {
  if (G < 0 || M < 1) throw std::invalid_argument("kw_potential: caps must be G >= 0, M >= 1");
  Potential p;
  p.max_genus = G;
  p.max_points = M;
  for (int g = 0; g <= G; ++g)
    for (int n = 1; n <= M; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      std::vector<Multiset> ms;
      Multiset cur;
      multisets_with_sum(n, 3 * g - 3 + n, 0, cur, ms);
      for (const auto& d : ms) {
        const Rational v = wk_sorted(g, d);
        if (!is_zero(v)) p.c.emplace(std::make_pair(g, d), v);
      }
    }
  return p;
}

Potential givental_apply(const Potential& F, const QSeries& R, GiventalConvention conv) {
  const int G = F.max_genus;
  const int N = F.max_points;
  const int kmax = 3 * G - 3 + N + 1;
  const int need = 2 * kmax + 2;
  if (R.order() < need) throw std::invalid_argument("givental_apply: R order too low for the caps");
  const QSeries r = log(R.truncated(need));
  for (int k = 0; k <= need; k += 2)
    if (!is_zero(r[k])) throw std::invalid_argument("givental_apply: R(z)R(-z) != 1");

  auto in_caps = [&](int g, std::size_t n) {
    return g <= G && n >= 1 && static_cast<int>(n) <= N && 2 * g - 2 + static_cast<int>(n) > 0;
  };

  std::vector<Terms> layers{F.c};
  for (int m = 0;; ++m) {
    Terms next;
    const Terms& cur = layers.back();
    for (int l = 1; 2 * l - 1 <= need - 1; ++l) {
      const int odd = 2 * l - 1;
      const Rational a = r[odd];
      if (is_zero(a)) continue;
      const Rational lin = a * Rational(conv.operator_sign);
      const Rational quad = a * Rational(conv.quadratic_sign, 2);
      for (const auto& [key, v] : cur) {
        const auto& [g, S] = key;
        // -d/dt_{2l}
        if (count_of(S, 2 * l) > 0) {
          Multiset T = without(S, 2 * l);
          if (in_caps(g, T.size())) add_to(next, {g, T}, -lin * v);
        }
        // sum t_i d/dt_{i + odd}
        for (std::size_t j = 0; j < S.size(); ++j) {
          if (S[j] < odd || (j > 0 && S[j] == S[j - 1])) continue;
          Multiset T = without(S, S[j]);
          T = with(T, S[j] - odd);
          add_to(next, {g, T}, lin * v * Rational(count_of(T, S[j] - odd)));
        }
        // (hbar/2) sum (-1)^i d_i d_j, i + j = 2l - 2
        for (int i = 0; i <= 2 * l - 2; ++i) {
          const int jj = 2 * l - 2 - i;
          if (count_of(S, i) == 0) continue;
          const Multiset S1 = without(S, i);
          if (count_of(S1, jj) == 0) continue;
          const Multiset T = without(S1, jj);
          if (!in_caps(g + 1, T.size())) continue;
          add_to(next, {g + 1, T}, quad * v * Rational(i % 2 == 0 ? 1 : -1));
        }
      }
      // (1/2) sum (-1)^i d_iF d_jF, bilinear over earlier layers.
      for (int p = 0; p <= m; ++p) {
        const Terms& A = layers[static_cast<std::size_t>(p)];
        const Terms& B = layers[static_cast<std::size_t>(m - p)];
        for (const auto& [ka, va] : A)
          for (int i = 0; i <= 2 * l - 2; ++i) {
            if (count_of(ka.second, i) == 0) continue;
            const Multiset I = without(ka.second, i);
            const int jj = 2 * l - 2 - i;
            for (const auto& [kb, vb] : B) {
              if (ka.first + kb.first > G) continue;
              if (count_of(kb.second, jj) == 0) continue;
              const Multiset J = without(kb.second, jj);
              const Multiset T = merged(I, J);
              if (!in_caps(ka.first + kb.first, T.size())) continue;
              add_to(next, {ka.first + kb.first, T},
                     quad * va * vb * position_count(I, T) * Rational(i % 2 == 0 ? 1 : -1));
            }
          }
      }
    }
    if (next.empty()) break;
    for (auto& [k, v] : next) v /= Rational(m + 1);
    layers.push_back(std::move(next));
  }

  Potential out;
  out.max_genus = G;
  out.max_points = (N - 4 * G + 3) / 2;
  for (const Terms& t : layers)
    for (const auto& [k, v] : t) {
      const int n = static_cast<int>(k.second.size());
      if (2 * n + 4 * k.first - 3 > N) continue;
      add_to(out.c, k, v);
    }
  return out;
}

QSeries r_hodge(int order) {
  QSeries e(order);
  for (int n = 1; 2 * n - 1 <= order; ++n)
    e.at(2 * n - 1) = bernoulli(2 * n) / Rational(2 * n * (2 * n - 1));
  return exp(e);
}

QSeries r_from_curve(int order) {
  const int n = 2 * order + 2;
  // 2(y - log(1+y)) = y^2 q(y), q(0) = 1.
  const QSeries l = log1p_series(n + 2);
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) q[static_cast<std::size_t>(k)] = -Rational(2) * l[k + 2];
  const QSeries s = sqrt_unit(QSeries(std::move(q), n)).shifted(1).truncated(n);
  const QSeries y = reverse(s);
  QSeries R(order);
  R.at(0) = Rational(1);
  for (int k = 1; k <= order; ++k) R.at(k) = Rational(2 * k + 1) * y[2 * k + 1] * dfact(2 * k - 1);
  return R;
}

namespace {

const Potential& hodge_potential(int G, int N, GiventalConvention conv) {
  thread_local std::map<std::tuple<int, int, int, int>, Potential> cache;
  const auto key = std::make_tuple(G, N, conv.operator_sign, conv.quadratic_sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const Potential kw = kw_potential(G, N);
  const int need = 2 * (3 * G - 3 + N + 1) + 2;
  return cache.emplace(key, givental_apply(kw, r_hodge(need), conv)).first->second;
}

}  // namespace

Rational hodge_integral(int g, const std::vector<int>& k, GiventalConvention conv) {
  const int n = static_cast<int>(k.size());
  if (g < 0 || n < 1 || 2 * g - 2 + n <= 0) return Rational(0);
  for (int x : k)
    if (x < 0) return Rational(0);
  if (std::accumulate(k.begin(), k.end(), 0) > 3 * g - 3 + n) return Rational(0);
  const int N = std::max({2 * n + 4 * g - 3, n, 3});
  return hodge_potential(g, N, conv).coefficient(g, k);
}

MultiPoly elsv_polynomial(int g, int n, GiventalConvention conv) {
  const int D = 3 * g - 3 + n;
  MultiPoly P;
  for (int s = 0; s <= D; ++s) {
    // all k in N^n with sum s
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (i == n - 1) {
        k[static_cast<std::size_t>(i)] = left;
        const Rational v = hodge_integral(g, k, conv);
        if (!is_zero(v)) P += MultiPoly::monomial(k, v);
        return;
      }
      for (int x = 0; x <= left; ++x) {
        k[static_cast<std::size_t>(i)] = x;
        rec(i + 1, left - x);
      }
    };
    rec(0, s);
  }
  return P;
}

ElsvReport elsv_check(int g, int n) {
  ElsvReport rep;
  rep.g = g;
  rep.n = n;
  const PolyFit fit = fit_P_polynomial(g, n, default_grid_side(g, n), 2);
  const MultiPoly H = elsv_polynomial(g, n);
  const int D = 3 * g - 3 + n;
  std::vector<int> k(static_cast<std::size_t>(n), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      if (std::accumulate(k.begin(), k.end(), 0) > D) return;
      Exponents e = k;
      while (!e.empty() && e.back() == 0) e.pop_back();
      const Rational a = fit.P.coefficient(e);
      const Rational b = H.coefficient(e);
      ++rep.coefficients_checked;
      if (a != b) {
        if (rep.mismatches == 0) {
          std::ostringstream os;
          os << "k = (";
          for (std::size_t j = 0; j < k.size(); ++j) os << (j ? "," : "") << k[j];
          os << "): fit " << a << ", Hodge " << b;
          rep.first_mismatch = os.str();
        }
        ++rep.mismatches;
      }
      return;
    }
    for (int x = 0; x <= D; ++x) {
      k[static_cast<std::size_t>(i)] = x;
      rec(i + 1);
    }
  };
  rec(0);
  // Monomials of the fit outside the dimension range must be absent.
  for (const auto& [e, c] : fit.P.terms())
    if (std::accumulate(e.begin(), e.end(), 0) > D) ++rep.mismatches;
  return rep;
}

// ---------------------------------------------------------------------------

namespace {

struct Frac {
  MultiPoly num;
  MultiPoly den;
};

Frac derivative(const Frac& f, int var) {
  return {f.num.derivative(var) * f.den - f.num * f.den.derivative(var), f.den * f.den};
}

Frac operator+(const Frac& a, const Frac& b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }

bool same(const Frac& a, const Frac& b) { return a.num * b.den == b.num * a.den; }

Frac substitute(const Frac& f, int var, const MultiPoly& v) { return {f.num.substitute(var, v), f.den.substitute(var, v)}; }

}  // namespace

BergmanReport bergman_compat_check() {
  const MultiPoly y1 = MultiPoly::variable(0), y2 = MultiPoly::variable(1);
  const MultiPoly d2 = (y1 - y2) * (y1 - y2);
  // D acting on f dy: d((1+y)/y * f).
  const Frac a = derivative({y1 + 1, y1 * d2}, 0);
  const Frac b = derivative({y2 + 1, y2 * d2}, 1);
  const Frac lhs = a + b;
  const Frac rhs{MultiPoly(-1), y1 * y1 * y2 * y2};
  BergmanReport rep;
  rep.identity_holds = same(lhs, rhs);
  const std::array<int, 2> swap{1, 0};
  rep.symmetric = same(lhs, {lhs.num.rename(swap), lhs.den.rename(swap)});
  rep.specialization_holds = same(substitute(lhs, 1, y1 * 2), substitute(rhs, 1, y1 * 2));
  return rep;
}

}  // namespace hurwitzlab
