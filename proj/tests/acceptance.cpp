// Acceptance suite: one line per criterion, exact comparisons, wall-clock bounds.

#include "hurwitzlab/bm.hpp"
#include "hurwitzlab/campaigns.hpp"
#include "hurwitzlab/fock.hpp"
#include "hurwitzlab/hodge.hpp"
#include "hurwitzlab/hurwitz.hpp"
#include "hurwitzlab/lambert.hpp"
#include "hurwitzlab/partitions.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using namespace hurwitzlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

const std::vector<std::pair<int, int>>& pairs() { return default_pairs(); }

std::string label(int g, int n) { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }

Outcome criterion1() {
  Outcome o;
  const QSeries s = sigma_series(6);
  const std::vector<Rational> sig{-1, Rational(2, 3), Rational(-4, 9), Rational(44, 135), Rational(-104, 405),
                                  Rational(40, 189)};
  for (int k = 1; k <= 6; ++k) o.require(s[k] == sig[static_cast<std::size_t>(k - 1)], "sigma z^" + std::to_string(k));
  const QLaurent st = sigma_t_series(4);
  o.require(st.coefficient(-1) == -1 && st.coefficient(0) == Rational(-2, 3) && st.coefficient(1) == 0 &&
                st.coefficient(2) == Rational(-4, 135) && st.coefficient(3) == Rational(8, 405) &&
                st.coefficient(4) == Rational(-8, 567),
            "sigma~ terms");
  o.detail = o.ok ? "6 sigma coefficients, 6 sigma~ terms" : o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  const QSeries a = r_hodge(8), b = r_from_curve(8);
  for (int k = 0; k <= 8; ++k) o.require(a[k] == b[k], "z^" + std::to_string(k));
  o.require(a[1] == Rational(1, 12) && a[2] == Rational(1, 288) && a[3] == Rational(-139, 51840), "printed values");
  o.detail = o.ok ? "R equal through z^8; 1/12, 1/288, -139/51840" : o.detail;
  return o;
}

Outcome criterion3() {
  Outcome o;
  const CutJoinTable cj = cut_and_join_evolve(6, 8);
  int compared = 0;
  for (int d = 1; d <= 6; ++d)
    for (const Partition& mu : enumerate_partitions(d))
      for (int b = 0; b <= 8; ++b) {
        const auto g = genus_from_b(b, mu);
        if (!g) continue;
        const Rational ch = h_disconnected_char_b(b, mu);
        const BruteForceCounts bf = h_bruteforce_both(*g, mu);
        o.require(ch == cj.value(b, mu) && ch == bf.disconnected, "disconnected " + mu.to_string());
        if (*g >= 0) {
          auto disc = [&cj](int bb, const Partition& m) { return cj.value(bb, m); };
          const Rational cc = h_connected(*g, mu);
          o.require(cc == bf.connected && cc == connected_from_disconnected(*g, mu.parts(), disc),
                    "connected " + mu.to_string());
        }
        ++compared;
      }
  o.require(h_connected(1, Partition{2}) == Rational(1, 2), "h[1;(2)]");
  o.require(h_connected(0, Partition{1, 1, 1}) == 24, "h[0;(1,1,1)]");
  for (int a = 1; a <= 6; ++a) {
    Rational expect(1);
    for (int i = 0; i < std::abs(a - 3); ++i) expect *= Rational(a);
    if (a < 3) expect = Rational(1) / expect;
    o.require(h_connected(0, Partition{a}) == expect, "h[0;(a)]");
  }
  if (o.ok) o.detail = std::to_string(compared) + " (b, mu) cells, 3 routes; spot values";
  return o;
}

Outcome criterion4() {
  Outcome o;
  int cells = 0;
  for (int d = 1; d <= 6; ++d)
    for (const Partition& mu : enumerate_partitions(d))
      for (int b = 0; b <= 6; ++b) {
        const auto g = genus_from_b(b, mu);
        if (!g) continue;
        o.require(vev_hurwitz(*g, mu, d) == h_disconnected_char_b(b, mu), "vev " + mu.to_string());
        ++cells;
      }
  for (int z = 1; z <= 6; ++z) {
    const StableCorrelator s = a_correlator_stable({z}, 1);
    o.require(s.stable, "one-point stability");
    o.require(s.value.coefficient(-1) == Rational(1, z) && s.value.coefficient(0) == 0 &&
                  s.value.coefficient(1) == make_rational(z * (z - 1), 24),
              "one-point z=" + std::to_string(z));
  }
  int comm = 0;
  for (int k = -3; k <= 3; ++k)
    for (int l = -3; l <= 3; ++l) {
      const CommutatorReport c = a_commutator_check(k, l, 2, 6);
      o.require(c.status == CheckStatus::pass && c.cutoffs.size() == 2,
                "[A_" + std::to_string(k) + ",A_" + std::to_string(l) + "]");
      ++comm;
    }
  if (o.ok)
    o.detail = std::to_string(cells) + " vev cells, one-point z=1..6, " + std::to_string(comm) +
               " commutators at cutoffs 6,8";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (auto [g, n] : pairs()) {
    try {
      const PolyFit f = fit_P_polynomial(g, n, default_grid_side(g, n), 2);
      o.require(f.symmetric && f.degree_ok && f.holdout_points.size() == 2, "fit " + label(g, n));
    } catch (const InterpolationError& e) {
      o.require(false, "fit " + label(g, n) + ": " + e.what());
    }
  }
  if (o.ok) o.detail = "8 fits, holdout verified";
  return o;
}

Outcome criterion6() {
  Outcome o;
  WTable T;
  int coefficients = 0;
  for (auto [g, n] : pairs()) {
    const BmStepReport s = T.step_report(g, n);
    o.require(s.forms_agree && s.stable, "residue forms " + label(g, n));
    const ShapeReport sh = w_shape(T.get(g, n), g, n);
    o.require(sh.symmetric && sh.degree_ok && sh.divisible && sh.odd_pole, "shape " + label(g, n));
    const BmHurwitzReport hx = bm_vs_hurwitz(T.get(g, n), g, n, 6);
    o.require(hx.passed(), "x-expansion " + label(g, n) + " " + hx.first_mismatch);
    coefficients += hx.coefficients_checked;
  }
  const MultiPoly t = MultiPoly::variable(0);
  o.require(T.get(1, 1) == (t.pow(5) * -3 - t.pow(4) * 5 - t.pow(3) + t.pow(2)) * Rational(1, 24), "W(1,1)");
  MultiPoly w03(-1);
  for (int i = 0; i < 3; ++i) {
    const MultiPoly ti = MultiPoly::variable(i);
    w03 = w03 * ti * ti * (ti + 1);
  }
  o.require(T.get(0, 3) == w03, "W(0,3)");
  if (o.ok) o.detail = "8 pairs, 4 residue forms, " + std::to_string(coefficients) + " x-coefficients";
  return o;
}

Outcome criterion7() {
  Outcome o;
  for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}}) {
    const CutJoinReport r = cutjoin_t_check(g, n);
    o.require(r.holds, "cut-and-join " + label(g, n) + " " + r.detail);
  }
  if (o.ok) o.detail = "(0,3), (0,4), (1,1), (1,2)";
  return o;
}

Outcome criterion8() {
  Outcome o;
  int coefficients = 0;
  for (auto [g, n] : pairs()) {
    const ElsvReport r = elsv_check(g, n);
    o.require(r.passed(), "ELSV " + label(g, n) + " " + r.first_mismatch);
    coefficients += r.coefficients_checked;
  }
  if (o.ok) o.detail = std::to_string(coefficients) + " coefficients equal";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const BergmanReport b = bergman_compat_check();
  o.require(b.identity_holds && b.symmetric && b.specialization_holds, "Bergman identity");
  if (o.ok) o.detail = "polynomial identity, symmetric, y2 = 2 y1";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double bound_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "deck involution expansions", 1, criterion1},
      {2, "R-matrix from the curve", 1, criterion2},
      {3, "three-route Hurwitz equality", 60, criterion3},
      {4, "Fock route", 300, criterion4},
      {5, "polynomiality fits", 600, criterion5},
      {6, "recursion on the Lambert curve", 600, criterion6},
      {7, "cut-and-join in t coordinates", 300, criterion7},
      {8, "ELSV, all coefficients", 600, criterion8},
      {9, "Bergman compatibility", 1, criterion9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.bound_s;
    const bool pass = o.ok && in_time;
    failures += pass ? 0 : 1;
    std::ostringstream line;
    line << "criterion " << c.id << ": " << (pass ? "PASS" : "FAIL") << "  " << c.name << "  [" << std::fixed
         << std::setprecision(2) << secs << " s < " << std::setprecision(0) << c.bound_s << " s"
         << (in_time ? "" : " EXCEEDED") << "]  " << o.detail;
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all 9 criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
