#include "hurwitzlab/hurwitz.hpp"

#include "hurwitzlab/connected.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace hurwitzlab {

int branch_count(int g, const Partition& mu) { return 2 * g + mu.size() + mu.length() - 2; }

std::optional<int> genus_from_b(int b, const Partition& mu) {
  const int twice = b - mu.size() - mu.length() + 2;
  if (twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

Rational h_disconnected_char_b(int b, const Partition& mu) {
  if (b < 0) return 0;
  struct Column {
    std::vector<Integer> weight;  // dim(lambda) * chi^lambda(mu)
    std::vector<Rational> f2;
  };
  thread_local std::map<Partition, Column> columns;
  thread_local std::map<std::pair<int, Partition>, Rational> memo;
  const auto key = std::make_pair(b, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  auto cit = columns.find(mu);
  if (cit == columns.end()) {
    Column c;
    for (const auto& [lambda, chi] : character_column(mu)) {
      c.weight.push_back(dim_hook(lambda) * chi);
      c.f2.push_back(central_character_f2(lambda));
    }
    cit = columns.emplace(mu, std::move(c)).first;
  }
  Rational sum = 0;
  const Column& c = cit->second;
  for (std::size_t i = 0; i < c.weight.size(); ++i)
    sum += Rational(c.weight[i]) * pow(c.f2[i], static_cast<unsigned>(b));
  Integer denom = factorial(mu.size());
  for (int p : mu.parts()) denom *= p;
  sum /= Rational(denom);
  memo.emplace(key, sum);
  return sum;
}

Rational h_disconnected_char(int g, const Partition& mu) { return h_disconnected_char_b(branch_count(g, mu), mu); }

Rational connected_from_disconnected(int g, const std::vector<int>& mu,
                                     const std::function<Rational(int, const Partition&)>& disc) {
  const int n = static_cast<int>(mu.size());
  if (n == 0) throw std::invalid_argument("connected Hurwitz number needs a nonempty profile");
  auto sub = [&mu](unsigned mask) {
    std::vector<int> parts;
    for (std::size_t i = 0; i < mu.size(); ++i)
      if (mask & (1U << i)) parts.push_back(mu[i]);
    return Partition(std::move(parts));
  };
  // Grading k = 2g - 2 per connected component; values are normalized by 1/b!
  // so that the grading is additive without binomial factors.
  ConnectedInverter inv(
      n, [](int) { return -2; },
      [&](unsigned mask, int k) -> Rational {
        const Partition p = sub(mask);
        const int b = k + p.size() + p.length();
        if (b < 0) return 0;
        return disc(b, p) / Rational(factorial(b));
      });
  const int b = 2 * g + std::accumulate(mu.begin(), mu.end(), 0) + n - 2;
  if (b < 0) return 0;
  return inv.connected_full(2 * g - 2) * Rational(factorial(b));
}

Rational h_connected(int g, const Partition& mu) {
  thread_local std::map<std::pair<int, Partition>, Rational> memo;
  const auto key = std::make_pair(g, mu);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const Rational v = connected_from_disconnected(g, mu.parts(), h_disconnected_char_b);
  memo.emplace(key, v);
  return v;
}

// ---------------------------------------------------------------------------
// Brute force: dynamic programming over (product permutation, partition of the
// sheets into connected components of the transposition graph).

namespace {

constexpr int kMaxBruteDegree = 7;
constexpr int kMaxBruteB = 8;

using State = std::uint64_t;

State pack(const std::array<int, 8>& perm, const std::array<int, 8>& block, int d) {
  State s = 0;
  for (int i = 0; i < d; ++i) {
    s |= static_cast<State>(perm[static_cast<std::size_t>(i)]) << (4 * i);
    s |= static_cast<State>(block[static_cast<std::size_t>(i)]) << (32 + 4 * i);
  }
  return s;
}

void unpack(State s, std::array<int, 8>& perm, std::array<int, 8>& block, int d) {
  for (int i = 0; i < d; ++i) {
    perm[static_cast<std::size_t>(i)] = static_cast<int>((s >> (4 * i)) & 0xF);
    block[static_cast<std::size_t>(i)] = static_cast<int>((s >> (32 + 4 * i)) & 0xF);
  }
}

// Relabel blocks in order of first appearance.
void canonical_blocks(std::array<int, 8>& block, int d) {
  std::array<int, 16> relabel;
  relabel.fill(-1);
  int next = 0;
  for (int i = 0; i < d; ++i) {
    auto& r = relabel[static_cast<std::size_t>(block[static_cast<std::size_t>(i)])];
    if (r < 0) r = next++;
    block[static_cast<std::size_t>(i)] = r;
  }
}

Partition cycle_type(const std::array<int, 8>& perm, int d) {
  std::array<bool, 8> seen{};
  std::vector<int> parts;
  for (int i = 0; i < d; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

struct BruteCache {
  int d = 0;
  int b_done = -1;
  std::unordered_map<State, std::uint64_t> frontier;
  // per b: cycle type -> (all tuples, transitive tuples)
  std::vector<std::map<Partition, std::pair<std::uint64_t, std::uint64_t>>> totals;

  void record() {
    std::map<Partition, std::pair<std::uint64_t, std::uint64_t>> t;
    std::array<int, 8> perm{}, block{};
    for (const auto& [s, count] : frontier) {
      unpack(s, perm, block, d);
      auto& slot = t[cycle_type(perm, d)];
      slot.first += count;
      const bool transitive = std::all_of(block.begin(), block.begin() + d, [](int x) { return x == 0; });
      if (transitive) slot.second += count;
    }
    totals.push_back(std::move(t));
  }

  void advance_to(int b) {
    if (b_done < 0) {
      std::array<int, 8> perm{}, block{};
      for (int i = 0; i < d; ++i) {
        perm[static_cast<std::size_t>(i)] = i;
        block[static_cast<std::size_t>(i)] = i;
      }
      frontier.clear();
      frontier[pack(perm, block, d)] = 1;
      b_done = 0;
      record();
    }
    while (b_done < b) {
      std::unordered_map<State, std::uint64_t> next;
      next.reserve(frontier.size() * 2);
      std::array<int, 8> perm{}, block{};
      for (const auto& [s, count] : frontier) {
        unpack(s, perm, block, d);
        for (int i = 0; i < d; ++i) {
          for (int j = i + 1; j < d; ++j) {
            std::array<int, 8> np = perm, nb = block;
            // Left multiplication by (i j): relabel the images i <-> j.
            for (int k = 0; k < d; ++k) {
              int& v = np[static_cast<std::size_t>(k)];
              if (v == i) v = j;
              else if (v == j) v = i;
            }
            const int bi = nb[static_cast<std::size_t>(i)], bj = nb[static_cast<std::size_t>(j)];
            if (bi != bj)
              for (int k = 0; k < d; ++k)
                if (nb[static_cast<std::size_t>(k)] == bj) nb[static_cast<std::size_t>(k)] = bi;
            canonical_blocks(nb, d);
            next[pack(np, nb, d)] += count;
          }
        }
      }
      frontier = std::move(next);
      ++b_done;
      record();
    }
  }
};

}  // namespace

BruteForceCounts h_bruteforce_both(int g, const Partition& mu) {
  const int d = mu.size();
  const int b = branch_count(g, mu);
  if (d < 1 || d > kMaxBruteDegree) throw std::out_of_range("brute force: |mu| outside 1..7");
  if (b < 0 || b > kMaxBruteB) throw std::out_of_range("brute force: b outside 0..8");
  thread_local std::map<int, BruteCache> caches;
  BruteCache& cache = caches[d];
  cache.d = d;
  cache.advance_to(b);
  const auto& t = cache.totals[static_cast<std::size_t>(b)];
  std::uint64_t all = 0, transitive = 0;
  if (auto it = t.find(mu); it != t.end()) {
    all = it->second.first;
    transitive = it->second.second;
  }
  const Rational scale = Rational(z_aut(mu).aut) / Rational(factorial(d));
  return {Rational(Integer(std::to_string(all))) * scale, Rational(Integer(std::to_string(transitive))) * scale};
}

Rational h_bruteforce(int g, const Partition& mu) { return h_bruteforce_both(g, mu).connected; }

// ---------------------------------------------------------------------------

CutJoinTable::CutJoinTable(int d_max, int b_max) : d_max_(d_max), b_max_(b_max) {
  if (d_max < 1 || d_max > 10) throw std::out_of_range("cut-and-join: d_max outside 1..10");
  if (b_max < 0 || b_max > 16) throw std::out_of_range("cut-and-join: b_max outside 0..16");
  std::map<Partition, Rational> step;
  for (int d = 1; d <= d_max; ++d)
    step[Partition(std::vector<int>(static_cast<std::size_t>(d), 1))] = Rational(1) / Rational(factorial(d));
  steps_.push_back(step);
  for (int b = 1; b <= b_max; ++b) {
    std::map<Partition, Rational> next;
    for (const auto& [mu, c] : steps_.back()) {
      const auto& parts = mu.parts();
      // Distinct part values with multiplicities.
      std::map<int, int> mult;
      for (int p : parts) ++mult[p];
      auto replace = [&](std::vector<int> remove, std::vector<int> add) {
        std::vector<int> v = parts;
        for (int r : remove) v.erase(std::find(v.begin(), v.end(), r));
        v.insert(v.end(), add.begin(), add.end());
        return Partition(std::move(v));
      };
      // Cut: p_m -> (m/2) sum_a p_a p_{m-a}.
      for (const auto& [m, k] : mult)
        for (int a = 1; a < m; ++a) next[replace({m}, {a, m - a})] += c * make_rational(static_cast<long>(m) * k, 2);
      // Join: p_a p_b -> a b p_{a+b}.
      for (auto it = mult.begin(); it != mult.end(); ++it) {
        const auto [a, ka] = *it;
        if (ka >= 2) next[replace({a, a}, {2 * a})] += c * make_rational(static_cast<long>(a) * a * ka * (ka - 1), 2);
        for (auto jt = std::next(it); jt != mult.end(); ++jt) {
          const auto [bb, kb] = *jt;
          next[replace({a, bb}, {a + bb})] += c * Rational(a * bb * ka * kb);
        }
      }
    }
    std::erase_if(next, [](const auto& kv) { return is_zero(kv.second); });
    steps_.push_back(std::move(next));
  }
}

Rational CutJoinTable::value(int b, const Partition& mu) const {
  if (b < 0) return 0;
  if (b > b_max_ || mu.size() > d_max_) throw std::out_of_range("cut-and-join table bounds exceeded");
  const auto& step = steps_[static_cast<std::size_t>(b)];
  auto it = step.find(mu);
  if (it == step.end()) return 0;
  return it->second * Rational(z_aut(mu).aut);
}

CutJoinTable cut_and_join_evolve(int d_max, int b_max) { return CutJoinTable(d_max, b_max); }

// ---------------------------------------------------------------------------

std::string route_name(Route r) {
  switch (r) {
    case Route::character: return "character";
    case Route::cut_join: return "cut-join";
    case Route::brute: return "brute";
    case Route::fock: return "fock";
  }
  return "unknown";
}

Route parse_route(const std::string& s) {
  if (s == "character") return Route::character;
  if (s == "cut-join") return Route::cut_join;
  if (s == "brute") return Route::brute;
  if (s == "fock") return Route::fock;
  throw std::invalid_argument("unknown route '" + s + "'");
}

bool HurwitzTable::insert(const HurwitzEntry& e) {
  Key key{e.g, e.mu, e.connected};
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(std::move(key), Stored{e.value, {e.route}});
    return true;
  }
  if (it->second.value != e.value)
    throw ConflictError("conflicting Hurwitz value for g=" + std::to_string(e.g) + " mu=" + e.mu.to_string() + ": " +
                        to_string(it->second.value) + " vs " + to_string(e.value) + " (route " + route_name(e.route) +
                        ")");
  auto& routes = it->second.routes;
  if (std::find(routes.begin(), routes.end(), e.route) == routes.end()) routes.push_back(e.route);
  return false;
}

std::optional<Rational> HurwitzTable::find(int g, const Partition& mu, bool connected) const {
  auto it = entries_.find(Key{g, mu, connected});
  if (it == entries_.end()) return std::nullopt;
  return it->second.value;
}

bool operator==(const HurwitzTable& a, const HurwitzTable& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (auto ia = a.entries_.begin(), ib = b.entries_.begin(); ia != a.entries_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second.value != ib->second.value || ia->second.routes != ib->second.routes)
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

Rational elsv_prefactor(int g, const std::vector<int>& mu) {
  const int b = branch_count(g, Partition(mu));
  if (b < 0) throw std::domain_error("elsv_prefactor: negative b");
  Rational r(factorial(b));
  for (int m : mu) r *= Rational(ipow(m, static_cast<unsigned>(m))) / Rational(factorial(m));
  return r;
}

std::vector<MultiPoly> lagrange_basis(int m, int var) {
  std::vector<MultiPoly> basis;
  const MultiPoly x = MultiPoly::variable(var);
  for (int j = 1; j <= m; ++j) {
    MultiPoly l(1);
    for (int i = 1; i <= m; ++i) {
      if (i == j) continue;
      l *= (x - MultiPoly(i)) * make_rational(1, j - i);
    }
    basis.push_back(std::move(l));
  }
  return basis;
}

int default_grid_side(int g, int n) { return 3 * g - 2 + n + 1; }

PolyFit fit_P_polynomial(int g, int n, int grid_side, int holdout) {
  if (g < 0 || n < 1 || (g == 0 && n <= 2)) throw std::invalid_argument("fit_P_polynomial: unstable (g, n)");
  const int D = 3 * g - 3 + n;
  const int m = D + 1;
  if (grid_side < m) throw std::invalid_argument("fit_P_polynomial: grid_side must be at least 3g-2+n");
  if (holdout < 0) throw std::invalid_argument("fit_P_polynomial: negative holdout");

  std::map<std::vector<int>, Rational> memo;
  auto value = [&](std::vector<int> mu) {
    std::sort(mu.begin(), mu.end(), std::greater<>());
    if (auto it = memo.find(mu); it != memo.end()) return it->second;
    const Rational v = h_connected(g, Partition(mu)) / elsv_prefactor(g, mu);
    memo.emplace(mu, v);
    return v;
  };

  std::vector<std::vector<MultiPoly>> basis;
  for (int k = 0; k < n; ++k) basis.push_back(lagrange_basis(m, k));

  // Odometer over {1..side}^n.
  auto for_grid = [n](int side, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> pt(static_cast<std::size_t>(n), 1);
    while (true) {
      fn(pt);
      int k = 0;
      while (k < n && pt[static_cast<std::size_t>(k)] == side) pt[static_cast<std::size_t>(k++)] = 1;
      if (k == n) break;
      ++pt[static_cast<std::size_t>(k)];
    }
  };

  PolyFit fit;
  fit.g = g;
  fit.n = n;
  fit.degree_bound = D;
  fit.grid_side = grid_side;
  fit.holdout = holdout;
  for_grid(m, [&](const std::vector<int>& pt) {
    MultiPoly term(value(pt));
    for (int k = 0; k < n; ++k) term *= basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(pt[static_cast<std::size_t>(k)] - 1)];
    fit.P += term;
  });

  auto check = [&](const std::vector<int>& pt) {
    std::vector<Rational> x(pt.begin(), pt.end());
    const Rational got = fit.P.evaluate(x);
    const Rational want = value(pt);
    ++fit.points_checked;
    if (got != want) {
      std::ostringstream os;
      os << "P_{" << g << "," << n << "} interpolation mismatch at (";
      for (std::size_t i = 0; i < pt.size(); ++i) os << (i ? "," : "") << pt[i];
      os << "): fitted " << to_string(got) << ", computed " << to_string(want);
      throw InterpolationError(os.str());
    }
  };
  for_grid(grid_side, [&](const std::vector<int>& pt) {
    const bool node = std::all_of(pt.begin(), pt.end(), [m](int v) { return v <= m; });
    if (!node) check(pt);
  });
  for (int j = 1; j <= holdout; ++j) {
    std::vector<int> pt;
    for (int k = 0; k < n; ++k) pt.push_back(grid_side + j + k);
    fit.holdout_points.push_back(pt);
    check(pt);
  }
  fit.symmetric = fit.P.is_symmetric(n);
  fit.degree_ok = fit.P.total_degree() <= D;
  return fit;
}

}  // namespace hurwitzlab
