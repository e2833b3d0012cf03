#include "doctest.h"
#include "test_support.hpp"

#include "hurwitzlab/series.hpp"

using namespace hurwitzlab;
using testsupport::Q;
using testsupport::series_of;

namespace {

// Oracle: Taylor coefficients of e^{az} summed directly.
Rational exp_coeff(const Rational& a, int k) { return pow(a, static_cast<unsigned>(k)) / Rational(factorial(k)); }

}  // namespace

TEST_CASE("zeta series") {
  const QSeries z3 = zeta_series(3);
  CHECK(z3.order() == 3);
  CHECK(z3 == series_of({0, 1, 0, Q("1/24")}, 3));
  CHECK(zeta_series(1) == series_of({0, 1}, 1));
  // Oracle: e^{z/2} - e^{-z/2} from the exponential coefficients.
  const QSeries z9 = zeta_series(9);
  for (int k = 0; k <= 9; ++k) CHECK(z9[k] == exp_coeff(Q("1/2"), k) - exp_coeff(Q("-1/2"), k));
  const QLaurent r = reciprocal(QLaurent(zeta_series(3)));
  CHECK(r.low() == -1);
  CHECK(r.order() == 1);
  CHECK(r.coefficient(-1) == 1);
  CHECK(r.coefficient(0) == 0);
  CHECK(r.coefficient(1) == Q("-1/24"));
  CHECK(residue(reciprocal(QLaurent(zeta_series(8)))) == 1);
}

TEST_CASE("composition") {
  const QSeries z2 = series_of({0, 0, 1}, 4);
  const QSeries twoz = series_of({0, 2}, 4);
  CHECK(compose(z2, twoz) == series_of({0, 0, 4, 0, 0}, 4));
  CHECK(compose(exp_series(6), log1p_series(6)) == series_of({1, 1, 0, 0, 0, 0, 0}, 6));
  const QSeries zc = compose(zeta_series(3), twoz.truncated(3));
  CHECK(zc == series_of({0, 2, 0, Q("1/3")}, 3));
  CHECK_THROWS_AS(compose(z2, exp_series(3)), std::domain_error);
}

TEST_CASE("reverse") {
  // y e^{-y}
  QSeries f(5);
  for (int k = 1; k <= 5; ++k) f.at(k) = (k % 2 == 1 ? Rational(1) : Rational(-1)) / Rational(factorial(k - 1));
  const QSeries g = reverse(f);
  CHECK(g == series_of({0, 1, 1, Q("3/2"), Q("8/3"), Q("125/24")}, 5));
  // Oracle: mu^{mu-1}/mu!.
  for (int m = 1; m <= 5; ++m) CHECK(g[m] == Rational(ipow(m, static_cast<unsigned>(m - 1))) / Rational(factorial(m)));
  CHECK(reverse(QSeries::variable(6)) == QSeries::variable(6));
  QSeries geo(7);
  for (int k = 1; k <= 7; ++k) geo.at(k) = 1;
  QSeries inv(7);
  for (int k = 1; k <= 7; ++k) inv.at(k) = k % 2 == 1 ? 1 : -1;
  CHECK(reverse(geo) == inv);
  CHECK_THROWS_AS(reverse(series_of({1, 1}, 3)), std::domain_error);
  CHECK_THROWS_AS(reverse(series_of({0, 0, 1}, 3)), std::domain_error);
}

TEST_CASE("exp and log") {
  CHECK(exp(QSeries::variable(4)) == series_of({1, 1, Q("1/2"), Q("1/6"), Q("1/24")}, 4));
  CHECK(log(series_of({1, 1}, 3)) == series_of({0, 1, Q("-1/2"), Q("1/3")}, 3));
  QSeries s(3);
  for (int n = 1; 2 * n - 1 <= 3; ++n) s.at(2 * n - 1) = bernoulli(2 * n) / Rational(2 * n * (2 * n - 1));
  CHECK(exp(s) == series_of({1, Q("1/12"), Q("1/288"), Q("-139/51840")}, 3));
  CHECK_THROWS_AS(exp(series_of({1}, 2)), std::domain_error);
  CHECK_THROWS_AS(log(series_of({2}, 2)), std::domain_error);
}

TEST_CASE("residue") {
  CHECK(QLaurent::monomial(-1, 1, 3).residue() == 1);
  // z^{-2}(1+z)^2
  const QLaurent f(-2, series_of({1, 2, 1}, 4));
  CHECK(residue(f) == 2);
  CHECK(f.coefficient(-5) == 0);
  CHECK_THROWS_AS(f.coefficient(3), std::out_of_range);
}

TEST_CASE("sqrt, reciprocal, power") {
  const QSeries f = series_of({1, 3, Q("-2/5"), 7, 0, 1}, 5);
  const QSeries r = sqrt_unit(f);
  CHECK(r * r == f);
  CHECK(reciprocal(f) * f == QSeries::constant(1, 5));
  CHECK(pow_unit(f, Q("1/2")) == r);
  CHECK(pow_unit(f, Rational(3)) == f.pow(3));
}

TEST_CASE("property: reverse is an involution and inverts composition") {
  for (int i = 0; i < 25; ++i) {
    QSeries f = testsupport::random_series(7, true);
    if (is_zero(f[1])) f.at(1) = 1;
    const QSeries g = reverse(f);
    CHECK(g.order() == 7);
    CHECK(reverse(g) == f);
    CHECK(compose(f, g) == QSeries::variable(7));
    CHECK(compose(g, f) == QSeries::variable(7));
  }
}

TEST_CASE("property: exp and log are inverse") {
  for (int i = 0; i < 25; ++i) {
    const QSeries g = testsupport::random_series(8, true);
    CHECK(log(exp(g)) == g);
    QSeries f = testsupport::random_series(8, false);
    f.at(0) = 1;
    CHECK(exp(log(f)) == f);
    CHECK(exp(g + g) == exp(g) * exp(g));
  }
}

TEST_CASE("property: residue is linear and vanishes on derivatives") {
  for (int i = 0; i < 40; ++i) {
    const QLaurent a(-4, testsupport::random_series(8, false));
    const QLaurent b(-3, testsupport::random_series(8, false));
    const Rational c = testsupport::random_rational();
    CHECK(residue(a + b * c) == residue(a) + c * residue(b));
    CHECK(residue(a.derivative()) == 0);
  }
}

TEST_CASE("order bookkeeping") {
  QSeries a = testsupport::random_series(6, false);
  QSeries b = testsupport::random_series(4, false);
  a.at(0) = 1;
  b.at(0) = 2;
  CHECK((a + b).order() == 4);
  const QSeries z3 = QSeries::monomial(3, 1, 5);
  // z^3 known to order 5 times a (order 6): known to order min(6+3, 5+0) = 5.
  CHECK((z3 * a).order() == 5);
  CHECK((a * b).order() == 4);
  CHECK(a.derivative().order() == 5);
  CHECK(a.integral().order() == 7);
  // compose: f order N with inner valuation v keeps order min((N+1)v-1, order(g)).
  QSeries inner = QSeries::monomial(2, 1, 10);
  CHECK(compose(a, inner).order() == 10);
  CHECK(compose(b, inner).order() == 9);
  CHECK_THROWS_AS(a.truncated(7), std::invalid_argument);
  CHECK_THROWS_AS(a[7], std::out_of_range);
  const QLaurent l(-2, a);
  CHECK(l.order() == 4);
  CHECK(reciprocal(QLaurent(-2, series_of({0, 2, 1}, 6))).low() == 1);
}

TEST_CASE("series over polynomials") {
  using PSeries = TruncSeries<MultiPoly>;
  const MultiPoly t = MultiPoly::variable(0);
  // 1/(1 - z t) = sum z^k t^k
  PSeries f = PSeries::constant(MultiPoly(1), 6);
  f.at(1) = -t;
  const PSeries r = reciprocal(f);
  for (int k = 0; k <= 6; ++k) CHECK(r[k] == t.pow(static_cast<unsigned>(k)));
  const PSeries e = exp(PSeries::monomial(1, t, 5));
  CHECK(e[3] == t.pow(3) * Q("1/6"));
  CHECK(log(e) == PSeries::monomial(1, t, 5));
}
