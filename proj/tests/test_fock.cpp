#include "doctest.h"
#include "test_support.hpp"

#include "hurwitzlab/fock.hpp"
#include "hurwitzlab/hurwitz.hpp"

#include <algorithm>

using namespace hurwitzlab;
using testsupport::Q;

namespace {

QFock basis(const Partition& p, int cutoff) {
  QFock v;
  v.cutoff = cutoff;
  v.terms.emplace(p, Rational(1));
  return v;
}

QFock random_state(int max_energy, int cutoff) {
  QFock v;
  v.cutoff = cutoff;
  std::uniform_int_distribution<int> e(0, max_energy);
  for (int i = 0; i < 4; ++i) {
    const auto parts = enumerate_partitions(e(testsupport::rng()));
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    v.add(parts[pick(testsupport::rng())], testsupport::random_rational());
  }
  return v;
}

bool equal(const QFock& a, const QFock& b) { return a.terms == b.terms; }

// Oracle: 1/zeta(z) by long division of z^{-1} by the odd series
// sum_k 2 (1/2)^{2k+1} z^{2k} / (2k+1)!.
std::vector<Rational> inverse_zeta_oracle(int n) {
  std::vector<Rational> d(static_cast<std::size_t>(n) + 1), r(static_cast<std::size_t>(n) + 1);
  for (int k = 0; 2 * k <= n; ++k) {
    Rational t(2);
    for (int i = 0; i < 2 * k + 1; ++i) t /= 2;
    d[static_cast<std::size_t>(2 * k)] = t / Rational(factorial(2 * k + 1));
  }
  for (int m = 0; m <= n; ++m) {
    Rational acc = m == 0 ? Rational(1) : Rational(0);
    for (int j = 1; j <= m; ++j) acc -= d[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(m - j)];
    r[static_cast<std::size_t>(m)] = acc / d[0];
  }
  return r;  // coefficient of z^{m-1} is r[m]
}

}  // namespace

TEST_CASE("Maya diagram and basic fermion moves") {
  CHECK(maya_string(Partition(), 3) == "●●●|○○○");
  CHECK(maya_string(Partition{1}, 3) == "●●○|●○○");
  CHECK(maya_positions(Partition{2, 1}, 3) == std::vector<int>{1, -1, -3});
  const QFock a2 = alpha_apply(-2, QFock::vacuum(4, Rational(1)));
  QFock expected;
  expected.cutoff = 4;
  expected.add(Partition{2}, Rational(1));
  expected.add(Partition{1, 1}, Rational(-1));
  CHECK(equal(a2, expected));
  CHECK(alpha_apply(2, QFock::vacuum(4, Rational(1))).terms.empty());
  CHECK_THROWS_AS(fermion_moves(Partition{1}, 0), std::invalid_argument);
}

TEST_CASE("power sums act through characters") {
  // prod alpha_{-mu_i} |0> = sum_lambda chi^lambda(mu) v_lambda.
  for (int d = 1; d <= 6; ++d) {
    for (const auto& mu : enumerate_partitions(d)) {
      QFock v = QFock::vacuum(d, Rational(1));
      for (int p : mu.parts()) v = alpha_apply(-p, v);
      for (const auto& lambda : enumerate_partitions(d)) CHECK(v.coefficient(lambda) == Rational(mn_character(lambda, mu)));
    }
  }
}

TEST_CASE("property: Heisenberg relations") {
  for (int trial = 0; trial < 20; ++trial) {
    const QFock v = random_state(4, 14);
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n) {
        if (m == 0 || n == 0) continue;
        QFock lhs = alpha_apply(m, alpha_apply(n, v));
        for (const auto& [l, c] : alpha_apply(n, alpha_apply(m, v)).terms) lhs.add(l, -c);
        QFock rhs;
        rhs.cutoff = 14;
        if (m + n == 0)
          for (const auto& [l, c] : v.terms) rhs.add(l, c * m);
        CHECK(equal(lhs, rhs));
      }
  }
}

TEST_CASE("F2 eigenvalues match central characters") {
  for (int n = 0; n <= 8; ++n)
    for (const auto& l : enumerate_partitions(n)) CHECK(f2_eigenvalue(l) == central_character_f2(l));
  const QFock v = f2_apply(basis(Partition{3, 1}, 5));
  CHECK(v.coefficient(Partition{3, 1}) == 2);
}

TEST_CASE("E_0(z) on the vacuum is 1/zeta(z)") {
  const auto oracle = inverse_zeta_oracle(9);
  const QFock vac = QFock::vacuum(3, Rational(1));
  for (int j = -1; j <= 8; ++j) {
    const QFock e = e_operator_apply(0, j, vac);
    CHECK(e.coefficient(Partition()) == oracle[static_cast<std::size_t>(j + 1)]);
    CHECK(e.terms.size() <= 1);
  }
  CHECK(e_operator_apply(0, 1, vac).coefficient(Partition()) == Q("-1/24"));
  // E_n at z^0 is alpha_n.
  const QFock v = random_state(4, 10);
  for (int n : {-2, -1, 1, 3}) CHECK(equal(e_operator_apply(n, 0, v), alpha_apply(n, v)));
  // 2 F2 = E^{(2)}_0, i.e. z^2 coefficient of E_0 minus the scalar part.
  const QFock w = e_operator_apply(0, 2, basis(Partition{2, 2}, 5));
  CHECK(w.coefficient(Partition{2, 2}) * 2 == 2 * f2_eigenvalue(Partition{2, 2}) + oracle[3] * 2);
}

TEST_CASE("property: E-operator commutation relation") {
  for (int trial = 0; trial < 4; ++trial) {
    const QFock v = random_state(3, 10);
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b)
        for (const Rational& c : {Rational(2), Q("1/3"), Q("-3/2")}) CHECK(e_commutator_check(a, b, c, 4, v));
  }
  const QFock v = basis(Partition{2, 1}, 10);
  CHECK(e_commutator_check(1, -1, Rational(2), 3, v));
}

TEST_CASE("vacuum expectation reproduces the character route") {
  for (int d = 1; d <= 6; ++d)
    for (const auto& mu : enumerate_partitions(d))
      for (int g = -2; g <= 3; ++g) {
        const int b = branch_count(g, mu);
        if (b < 0 || b > 6) continue;
        CHECK(vev_hurwitz(g, mu, d) == h_disconnected_char_b(b, mu));
        CHECK(vev_hurwitz(g, mu, d + 2) == vev_hurwitz(g, mu, d));
      }
  CHECK(vev_hurwitz(0, Partition{1, 1, 1}, 3) == 27);
  CHECK_THROWS_AS(vev_hurwitz(0, Partition{2, 1}, 2), std::invalid_argument);
}

TEST_CASE("one-point A-correlator") {
  for (int z = 1; z <= 6; ++z) {
    const StableCorrelator s = a_correlator_stable({z}, 2);
    CHECK(s.stable);
    CHECK(s.value.coefficient(-1) == Rational(1, z));
    CHECK(s.value.coefficient(0) == 0);
    CHECK(s.value.coefficient(1) == make_rational(z * (z - 1), 24));
    CHECK(s.value.coefficient(-2) == 0);
  }
  const auto sym = a_one_point_symbolic(3);
  CHECK(sym.at({-1, -1}) == 1);
  CHECK(sym.at({2, 1}) == Q("1/24"));
  CHECK(sym.at({1, 1}) == Q("-1/24"));
  // Integer evaluation of the symbolic series.
  for (int z = 1; z <= 5; ++z) {
    const QLaurent c = a_correlator({z}, 3, z + 4);
    for (int b = -1; b <= 3; ++b) {
      Rational s(0);
      for (const auto& [key, val] : sym)
        if (key.second == b) s += val * (key.first >= 0 ? pow(Rational(z), static_cast<unsigned>(key.first)) : Rational(1, z));
      CHECK(c.coefficient(b) == s);
    }
  }
}

TEST_CASE("symbolic A_l on the vacuum") {
  const auto sym = a_one_point_symbolic(6);
  SymbolicA A;
  for (int l = -2; l <= 5; ++l) {
    UFock vac;
    vac.cutoff = 8;
    vac.terms.emplace(Partition(), UPoly(Rational(1)));
    const UPoly got = A.apply(l, vac).coefficient(Partition());
    UPoly expected;
    for (const auto& [key, val] : sym)
      if (key.first == l) expected.add(key.second, val);
    INFO(l, " ", got.to_string(), " vs ", expected.to_string());
    CHECK(got == expected);
  }
}

TEST_CASE("two-point connected correlator in genus zero") {
  CHECK(a_connected_correlator({1, 3}, 0) == Q("3/4"));
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) CHECK(a_connected_correlator({a, b}, 0) == make_rational(a * b, a + b));
}

TEST_CASE("correlators are symmetric in the insertions") {
  const QLaurent x = a_correlator({1, 2, 3}, 2, 10);
  const QLaurent y = a_correlator({3, 1, 2}, 2, 10);
  const QLaurent z = a_correlator({2, 3, 1}, 2, 10);
  CHECK(x.agrees_with(y));
  CHECK(x.agrees_with(z));
}

TEST_CASE("conjugated vacuum pairing") {
  // u^{-|mu|-l} sum_b u^b h(b,mu)/b! == u^{-n} prod(m^{m-1}/m!) <prod A(m, um)>.
  for (const auto& mu : std::vector<Partition>{{2}, {1, 1}, {2, 1}, {3, 1}, {2, 2}, {1, 1, 1}}) {
    const int shift = mu.size() + mu.length();
    const int n = mu.length();
    Rational pref(1);
    for (int m : mu.parts()) pref *= Rational(ipow(m, static_cast<unsigned>(m - 1))) / Rational(factorial(m));
    const QLaurent corr = a_correlator(mu.parts(), 5, mu.size() + 2);
    for (int b = 0; b <= 5 + n - shift + n; ++b) {
      if (b - shift + n > 5) break;
      const Rational lhs = h_disconnected_char_b(b, mu) / Rational(factorial(b));
      CHECK(lhs == pref * corr.coefficient(b - shift + n));
    }
  }
}

TEST_CASE("Hurwitz numbers from connected A-correlators") {
  for (const auto& [g, mu] : std::vector<std::pair<int, Partition>>{
           {0, {1, 3}}, {1, {2}}, {0, {1, 1, 1}}, {1, {1, 1}}, {2, {1}}, {0, {2, 2, 1}}, {1, {2, 1}}, {2, {2}}})
    CHECK(hurwitz_from_correlator(g, mu.parts()) == h_connected(g, mu));
  CHECK(hurwitz_from_correlator(0, {1, 3}) == 27);
}

TEST_CASE("connected correlators are polynomial in the insertions") {
  // <<A(m_1)..A(m_n)>>_{2g-2+n} / prod m_i equals the ELSV polynomial.
  const PolyFit f12 = fit_P_polynomial(1, 2, default_grid_side(1, 2), 1);
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b) {
      const Rational c = a_connected_correlator({a, b}, 2) / Rational(a * b);
      std::vector<Rational> pt{Rational(a), Rational(b)};
      CHECK(c == f12.P.evaluate(pt));
    }
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 2; ++c) CHECK(a_connected_correlator({a, b, c}, 1) == Rational(a * b * c));
}

TEST_CASE("A-operator commutators") {
  for (const auto& [k, l] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}, {2, -1}, {1, 1}, {-1, 2}, {0, 0}, {-1, -1}}) {
    const CommutatorReport r = a_commutator_check(k, l, 2, 6);
    INFO(r.detail);
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.states_checked == 4);
  }
  CHECK_THROWS_AS(a_commutator_check(3, 0, 4, 5), std::invalid_argument);
}
