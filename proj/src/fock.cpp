#include "hurwitzlab/fock.hpp"

#include "hurwitzlab/connected.hpp"
#include "hurwitzlab/hurwitz.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hurwitzlab {

// ---------------------------------------------------------------------------
// UPoly

void UPoly::add(int e, const Rational& c) {
  if (hurwitzlab::is_zero(c)) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (hurwitzlab::is_zero(it->second)) terms_.erase(it);
}

Rational UPoly::coefficient(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  for (const auto& [e, c] : o.terms_) add(e, -c);
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add(ea + eb, ca * cb);
  return r;
}

UPoly operator*(UPoly a, const Rational& c) {
  if (hurwitzlab::is_zero(c)) return UPoly();
  for (auto& [e, x] : a.terms_) x *= c;
  return a;
}

UPoly UPoly::operator-() const { return *this * Rational(-1); }

std::string UPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << hurwitzlab::to_string(c) << ")";
    if (e != 0) os << "*" << var << "^" << e;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Maya diagrams and fermion moves

std::vector<int> maya_positions(const Partition& lambda, int depth) {
  std::vector<int> m(static_cast<std::size_t>(depth));
  for (int i = 1; i <= depth; ++i) m[static_cast<std::size_t>(i - 1)] = lambda.part(i) - i;
  return m;
}

std::string maya_string(const Partition& lambda, int window) {
  const int depth = std::max(lambda.length(), 0) + window + 1;
  const std::vector<int> occ = maya_positions(lambda, depth);
  const std::set<int> s(occ.begin(), occ.end());
  std::string out;
  for (int m = -window; m < window; ++m) {
    if (m == 0) out += "|";
    out += s.count(m) ? "●" : "○";
  }
  return out;
}

namespace {

Partition from_positions(std::vector<int> occ) {
  std::sort(occ.begin(), occ.end(), std::greater<>());
  std::vector<int> parts;
  for (std::size_t i = 0; i < occ.size(); ++i) parts.push_back(occ[i] + static_cast<int>(i) + 1);
  return Partition(parts);
}

}  // namespace

std::vector<FermionMove> fermion_moves(const Partition& lambda, int n) {
  if (n == 0) throw std::invalid_argument("fermion_moves: use diagonal_levels for n = 0");
  const int depth = lambda.length() + std::abs(n) + 1;
  const std::vector<int> occ = maya_positions(lambda, depth);
  const std::set<int> s(occ.begin(), occ.end());
  std::vector<FermionMove> out;
  for (std::size_t i = 0; i < occ.size(); ++i) {
    const int from = occ[i], to = from - n;
    if (to < -depth || s.count(to)) continue;
    const int lo = std::min(from, to), hi = std::max(from, to);
    int between = 0;
    for (int x : occ)
      if (x > lo && x < hi) ++between;
    std::vector<int> moved = occ;
    moved[i] = to;
    out.push_back({from_positions(moved), between % 2 == 0 ? 1 : -1, from});
  }
  return out;
}

std::vector<std::pair<int, int>> diagonal_levels(const Partition& lambda) {
  const int depth = lambda.length() + 1;
  const std::vector<int> occ = maya_positions(lambda, depth);
  const std::set<int> s(occ.begin(), occ.end());
  std::vector<std::pair<int, int>> out;
  for (int m : occ)
    if (m >= 0) out.emplace_back(m, 1);
  for (int m = -depth; m < 0; ++m)
    if (!s.count(m)) out.emplace_back(m, -1);
  return out;
}

Rational f2_eigenvalue(const Partition& lambda) {
  Rational sum(0);
  for (const auto& [m, w] : diagonal_levels(lambda)) {
    const Rational k = make_rational(2 * m + 1, 2);
    sum += k * k * w;
  }
  return sum / 2;
}

// ---------------------------------------------------------------------------
// Rational operators

namespace {

// Coefficients of 1/zeta(z) = z^{-1}(1 - z^2/24 + ...).
Rational inverse_zeta_coefficient(int j) {
  if (j < -1) return Rational(0);
  const QLaurent inv = reciprocal(QLaurent(zeta_series(j + 3)));
  return inv.coefficient(j);
}

}  // namespace

QFock alpha_apply(int m, const QFock& v) {
  QFock out;
  out.cutoff = v.cutoff;
  out.truncated = v.truncated;
  if (m == 0) return out;  // charge zero
  for (const auto& [lambda, c] : v.terms)
    for (const auto& mv : fermion_moves(lambda, m)) out.add(mv.target, c * mv.sign);
  return out;
}

QFock f2_apply(const QFock& v) {
  QFock out;
  out.cutoff = v.cutoff;
  out.truncated = v.truncated;
  for (const auto& [lambda, c] : v.terms) out.add(lambda, c * f2_eigenvalue(lambda));
  return out;
}

QFock e_operator_apply(int n, int j, const QFock& v) {
  QFock out;
  out.cutoff = v.cutoff;
  out.truncated = v.truncated;
  if (j < -1 || (j == -1 && n != 0)) return out;
  const Rational inv_fact = j >= 0 ? Rational(1) / Rational(factorial(j)) : Rational(0);
  for (const auto& [lambda, c] : v.terms) {
    if (n != 0) {
      for (const auto& mv : fermion_moves(lambda, n)) {
        const Rational k = make_rational(2 * mv.from + 1 - n, 2);
        out.add(mv.target, c * pow(k, static_cast<unsigned>(j)) * inv_fact * mv.sign);
      }
    } else {
      Rational diag(0);
      if (j >= 0)
        for (const auto& [m, w] : diagonal_levels(lambda)) diag += pow(make_rational(2 * m + 1, 2), static_cast<unsigned>(j)) * w;
      out.add(lambda, c * (diag * inv_fact + inverse_zeta_coefficient(j)));
    }
  }
  return out;
}

Rational vev_hurwitz(int g, const Partition& mu, int cutoff) {
  if (cutoff < mu.size()) throw std::invalid_argument("vev_hurwitz: cutoff below |mu|");
  const int b = branch_count(g, mu);
  if (b < 0) return Rational(0);
  QFock v = QFock::vacuum(cutoff, Rational(1));
  for (int part : mu.parts()) {
    v = alpha_apply(-part, v);
    for (auto& [l, c] : v.terms) c /= part;
  }
  QFock w = QFock::vacuum(cutoff, Rational(1));
  for (int i = 0; i < mu.size(); ++i) w = alpha_apply(-1, w);
  Rational total(0);
  for (const auto& [lambda, c] : v.terms)
    total += c * pow(f2_eigenvalue(lambda), static_cast<unsigned>(b)) * w.coefficient(lambda);
  return total / Rational(factorial(mu.size()));
}

// ---------------------------------------------------------------------------
// A(m, um) at integer m

namespace {

// S(w) = zeta(w)/w through w^order.
QSeries s_series(int order) {
  const QSeries z = zeta_series(order + 1);
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) c[static_cast<std::size_t>(k)] = z[k + 1];
  return QSeries(std::move(c), order);
}

// L(w) = log S(w).
QSeries l_series(int order) { return log(s_series(order)); }

}  // namespace

LFock a_integer_apply(int m, const LFock& v, int order) {
  if (m < 1) throw std::invalid_argument("a_integer_apply: m must be positive");
  const int body_max = order + m + 1;
  const QSeries s_um = s_series(body_max).rescaled(Rational(m));
  const QSeries l_um = log(s_um);
  std::map<int, QSeries> s_pow;  // S(um)^p
  auto spow = [&](int p) -> const QSeries& {
    auto it = s_pow.find(p);
    if (it == s_pow.end()) it = s_pow.emplace(p, exp(l_um * Rational(p))).first;
    return it->second;
  };
  std::map<Rational, QSeries> e_pow;  // e^{u m c}
  auto epow = [&](const Rational& c) -> const QSeries& {
    auto it = e_pow.find(c);
    if (it == e_pow.end()) it = e_pow.emplace(c, exp_series(body_max).rescaled(c * m)).first;
    return it->second;
  };
  // Operator coefficient for a move of size kp from level `from` (Laurent in u).
  auto coefficient = [&](int kp, const Rational& c) {
    const int body_order = order - kp;
    const Rational pre = (kp >= 0 ? pow(Rational(m), static_cast<unsigned>(kp))
                                  : Rational(1) / pow(Rational(m), static_cast<unsigned>(-kp))) /
                         pochhammer(m, kp);
    const QSeries body = (spow(m + kp).truncated(body_order) * epow(c).truncated(body_order)) * pre;
    return QLaurent(kp, body);
  };

  LFock out;
  out.cutoff = v.cutoff;
  out.truncated = v.truncated;
  const QLaurent scalar(-1, spow(m - 1).truncated(order + 1) * Rational(1, m));
  for (const auto& [lambda, x] : v.terms) {
    for (int kp = -m; kp <= std::min(lambda.size(), order); ++kp) {
      if (kp == 0) {
        QLaurent diag = scalar;
        for (const auto& [lev, w] : diagonal_levels(lambda)) {
          const QLaurent term = coefficient(0, make_rational(2 * lev + 1, 2));
          diag += w > 0 ? term : -term;
        }
        out.add(lambda, diag * x);
        continue;
      }
      for (const auto& mv : fermion_moves(lambda, kp)) {
        const QLaurent term = coefficient(kp, make_rational(2 * mv.from + 1 - kp, 2));
        out.add(mv.target, (mv.sign > 0 ? term : -term) * x);
      }
    }
  }
  return out;
}

QLaurent a_correlator(const std::vector<int>& mu, int u_order, int cutoff) {
  int total = 0;
  for (int part : mu) total += part;
  const int op_order = u_order + total + 1;
  LFock v = LFock::vacuum(cutoff, QLaurent(QSeries::constant(Rational(1), op_order)));
  for (auto it = mu.rbegin(); it != mu.rend(); ++it) v = a_integer_apply(*it, v, op_order);
  auto vac = v.terms.find(Partition());
  if (vac == v.terms.end()) return QLaurent(-static_cast<int>(mu.size()), QSeries(u_order + static_cast<int>(mu.size())));
  if (vac->second.order() < u_order) throw std::logic_error("a_correlator: validity order below request");
  return vac->second.truncated(u_order);
}

StableCorrelator a_correlator_stable(const std::vector<int>& mu, int u_order, int slack) {
  int total = 0;
  for (int part : mu) total += part;
  StableCorrelator r;
  r.cutoff_low = total + u_order + slack;
  r.cutoff_high = r.cutoff_low + 2;
  const QLaurent lo = a_correlator(mu, u_order, r.cutoff_low);
  const QLaurent hi = a_correlator(mu, u_order, r.cutoff_high);
  r.stable = lo.agrees_with(hi);
  r.value = lo;
  return r;
}

namespace {

struct CorrelatorCache {
  std::vector<int> mu;
  int u_order;
  int slack;
  std::map<unsigned, QLaurent> by_mask;

  const QLaurent& get(unsigned mask) {
    auto it = by_mask.find(mask);
    if (it != by_mask.end()) return it->second;
    std::vector<int> sub;
    for (std::size_t i = 0; i < mu.size(); ++i)
      if (mask & (1U << i)) sub.push_back(mu[i]);
    const StableCorrelator s = a_correlator_stable(sub, u_order, slack);
    if (!s.stable) throw std::runtime_error("A-correlator unstable between cutoffs");
    return by_mask.emplace(mask, s.value).first->second;
  }
};

}  // namespace

Rational a_connected_correlator(const std::vector<int>& mu, int k, int slack) {
  const int n = static_cast<int>(mu.size());
  CorrelatorCache cache{mu, k + n, slack, {}};
  ConnectedInverter inv(
      n, [](int size) { return size - 2; },
      [&cache](unsigned mask, int kk) {
        const QLaurent& c = cache.get(mask);
        return kk > c.order() ? throw std::logic_error("correlator order too low") : c.coefficient(kk);
      });
  return inv.connected_full(k);
}

Rational hurwitz_from_correlator(int g, const std::vector<int>& mu, int slack) {
  const int n = static_cast<int>(mu.size());
  int total = 0;
  for (int part : mu) total += part;
  const int b = 2 * g - 2 + total + n;
  if (b < 0) return Rational(0);
  Rational pref = Rational(factorial(b));
  for (int part : mu)
    pref *= Rational(ipow(part, static_cast<unsigned>(part - 1))) / Rational(factorial(part));
  return pref * a_connected_correlator(mu, 2 * g - 2 + n, slack);
}

// ---------------------------------------------------------------------------
// Symbolic A(z, uz)

namespace {

// q[n][a] = [w^n z^a] exp(z L(w)) S(w)^kp for n <= order.
std::vector<std::vector<Rational>> q_table(int kp, int order) {
  std::vector<std::vector<Rational>> q(static_cast<std::size_t>(order) + 1,
                                       std::vector<Rational>(static_cast<std::size_t>(order) + 1));
  if (order < 0) return q;
  const QSeries L = l_series(order);
  const QSeries spow = exp(L * Rational(kp));
  QSeries lpow = QSeries::constant(Rational(1), order);  // L^a / a!
  for (int a = 0; 2 * a <= order; ++a) {
    if (a > 0) lpow = lpow * L * Rational(1, a);
    const QSeries term = lpow * spow;
    for (int n = 0; n <= order; ++n) q[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)] = term[n];
  }
  return q;
}

// z-coefficients of 1/(z+1)_kp through z^order.
std::vector<Rational> p_coefficients(int kp, int order) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(order, 0)) + 1);
  if (kp >= 0) {
    QSeries prod = QSeries::constant(Rational(1), std::max(order, 0));
    for (int i = 1; i <= kp; ++i) prod = prod * QSeries(std::vector<Rational>{Rational(i), Rational(1)}, std::max(order, 0));
    const QSeries r = reciprocal(prod);
    for (int j = 0; j <= order; ++j) out[static_cast<std::size_t>(j)] = r[j];
    return out;
  }
  std::vector<Rational> poly{Rational(1)};  // z (z-1) ... (z+kp+1)
  for (int i = 0; i < -kp; ++i) {
    std::vector<Rational> next(poly.size() + 1);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d + 1] += poly[d];
      next[d] -= poly[d] * i;
    }
    poly = std::move(next);
  }
  for (int j = 0; j <= order && j < static_cast<int>(poly.size()); ++j) out[static_cast<std::size_t>(j)] = poly[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace

const std::vector<std::vector<Rational>>& SymbolicA::table(int l, int kp) {
  const auto key = std::make_pair(l, kp);
  auto it = tables_.find(key);
  if (it != tables_.end()) return it->second;
  const int order = l - kp;
  std::vector<std::vector<Rational>> t;
  if (order >= 0) {
    const auto q = q_table(kp, order);
    const auto p = p_coefficients(kp, order);
    t.assign(static_cast<std::size_t>(order) + 1, std::vector<Rational>(static_cast<std::size_t>(order) + 1));
    for (int n = 0; n <= order; ++n)
      for (int j = 0; j + n <= order; ++j) {
        Rational s(0);
        for (int a = 0; a <= j; ++a) s += p[static_cast<std::size_t>(j - a)] * q[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)];
        t[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)] = s;
      }
  }
  return tables_.emplace(key, std::move(t)).first->second;
}

const std::vector<std::vector<Rational>>& SymbolicA::scalar_table(int l) {
  auto it = scalar_tables_.find(l);
  if (it != scalar_tables_.end()) return it->second;
  return scalar_tables_.emplace(l, q_table(-1, l + 1)).first->second;
}

UFock SymbolicA::apply(int l, const UFock& v) {
  UFock out;
  out.cutoff = v.cutoff;
  out.truncated = v.truncated;

  // u-polynomial of one matrix element: sum_b u^b sum_{n'} c^{n'}/n'! T[b-kp-n'][l-b].
  auto element = [&](int kp, const Rational& c) {
    UPoly r;
    const auto& t = table(l, kp);
    if (t.empty()) return r;
    for (int b = kp; b <= l; ++b) {
      Rational s(0);
      Rational cp(1);
      for (int np = 0; np <= b - kp; ++np) {
        if (np > 0) cp = cp * c / np;
        s += cp * t[static_cast<std::size_t>(b - kp - np)][static_cast<std::size_t>(l - b)];
      }
      r.add(b, s);
    }
    return r;
  };

  UPoly scalar;
  if (l >= -1) {
    const auto& q = scalar_table(l);
    for (int b = -1; b <= l; ++b) scalar.add(b, q[static_cast<std::size_t>(b + 1)][static_cast<std::size_t>(l - b)]);
  }

  for (const auto& [lambda, x] : v.terms) {
    const int e = lambda.size();
    for (int kp = e - v.cutoff; kp <= std::min(e, std::max(l, 0)); ++kp) {
      if (kp == 0) {
        UPoly diag = scalar;
        for (const auto& [lev, w] : diagonal_levels(lambda)) {
          const UPoly term = element(0, make_rational(2 * lev + 1, 2));
          diag += w > 0 ? term : -term;
        }
        out.add(lambda, diag * x);
        continue;
      }
      if (kp > l || (kp < 0 && kp > l - 1)) continue;
      for (const auto& mv : fermion_moves(lambda, kp)) {
        const UPoly term = element(kp, make_rational(2 * mv.from + 1 - kp, 2));
        out.add(mv.target, (mv.sign > 0 ? term : -term) * x);
      }
    }
  }
  return out;
}

std::map<std::pair<int, int>, Rational> a_one_point_symbolic(int u_order) {
  // <A(z,uz)> = exp((z-1) L(w)) / w with w = uz.
  const int order = u_order + 1;
  const QSeries L = l_series(order);
  std::map<std::pair<int, int>, Rational> out;
  QSeries lpow = QSeries::constant(Rational(1), order);
  for (int a = 0; 2 * a <= order; ++a) {
    if (a > 0) lpow = lpow * L * Rational(1, a);
    for (int n = 0; n <= order; ++n) {
      if (is_zero(lpow[n])) continue;
      // (z-1)^a = sum_i C(a,i) z^i (-1)^{a-i}
      for (int i = 0; i <= a; ++i) {
        const Rational c = lpow[n] * Rational(binomial(a, i)) * ((a - i) % 2 == 0 ? 1 : -1);
        auto& slot = out[{n - 1 + i, n - 1}];
        slot += c;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();) it = is_zero(it->second) ? out.erase(it) : std::next(it);
  return out;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CommutatorReport a_commutator_check(int k, int l, int test_energy, int cutoff) {
  CommutatorReport rep;
  rep.k = k;
  rep.l = l;
  const int reach = std::max({k, l, 0});
  if (test_energy > cutoff - reach) throw std::invalid_argument("a_commutator_check: cutoff too small for test energy");
  const Rational expected = (k + l == 1) ? Rational(l % 2 == 0 ? 1 : -1) : Rational(0);

  std::vector<bool> ok;
  std::vector<std::map<Partition, UFock>> results;
  SymbolicA A;
  for (int c : {cutoff, cutoff + 2}) {
    rep.cutoffs.push_back(c);
    bool all = true;
    std::map<Partition, UFock> res;
    for (int e = 0; e <= test_energy; ++e) {
      for (const Partition& lambda : enumerate_partitions(e)) {
        UFock v;
        v.cutoff = c;
        v.terms.emplace(lambda, UPoly(Rational(1)));
        const UFock ak = A.apply(k, v);
        if (c == cutoff)
          for (const auto& [t, p] : ak.terms)
            if (p.terms().size() > 1) rep.operators_u_dependent = true;
        UFock diff = A.apply(k, A.apply(l, v));
        const UFock other = A.apply(l, ak);
        for (const auto& [t, p] : other.terms) diff.add(t, -p);
        diff = diff.restricted(cutoff - reach);
        diff.add(lambda, UPoly(-expected));
        all = all && diff.terms.empty();
        res.emplace(lambda, diff);
        if (c == cutoff) ++rep.states_checked;
      }
    }
    ok.push_back(all);
    results.push_back(std::move(res));
  }
  bool same = true;
  for (const auto& [lambda, d] : results[0]) same = same && results[1].at(lambda).terms == d.terms;
  if (ok[0] && ok[1])
    rep.status = CheckStatus::pass;
  else if (same)
    rep.status = CheckStatus::fail;
  else
    rep.status = CheckStatus::inconclusive;
  std::ostringstream os;
  os << "[A_" << k << ", A_" << l << "] on " << rep.states_checked << " states, cutoffs " << cutoff << "/" << cutoff + 2;
  rep.detail = os.str();
  return rep;
}

bool e_commutator_check(int a, int b, const Rational& c, int order, const QFock& v0) {
  if (c == -1) throw std::invalid_argument("e_commutator_check: c = -1");
  int emax = 0;
  for (const auto& [lambda, x] : v0.terms) emax = std::max(emax, lambda.size());
  QFock v = v0;
  v.cutoff = emax + std::abs(a) + std::abs(b) + 1;

  const Rational s = Rational(a) * c - b;
  const QSeries zeta = zeta_series(order + 2).rescaled(s);
  const Rational one_c = Rational(1) + c;
  for (int j = 0; j <= order; ++j) {
    QFock lhs;
    lhs.cutoff = v.cutoff;
    for (int r = 0; r <= j; ++r) {
      const int t = j - r;
      const Rational ct = pow(c, static_cast<unsigned>(t));
      const QFock x1 = e_operator_apply(a, r, e_operator_apply(b, t, v));
      const QFock x2 = e_operator_apply(b, t, e_operator_apply(a, r, v));
      for (const auto& [l, x] : x1.terms) lhs.add(l, x * ct);
      for (const auto& [l, x] : x2.terms) lhs.add(l, -x * ct);
    }
    QFock rhs;
    rhs.cutoff = v.cutoff;
    for (int q = -1; q <= j; ++q) {
      const int p = j - q;
      if (is_zero(zeta[p])) continue;
      const Rational scale = zeta[p] * (q >= 0 ? pow(one_c, static_cast<unsigned>(q)) : Rational(1) / one_c);
      for (const auto& [l, x] : e_operator_apply(a + b, q, v).terms) rhs.add(l, x * scale);
    }
    for (const auto& [l, x] : rhs.terms) lhs.add(l, -x);
    if (!lhs.terms.empty()) return false;
  }
  return true;
}

}  // namespace hurwitzlab
