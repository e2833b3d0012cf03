#include "doctest.h"
#include "test_support.hpp"

#include "hurwitzlab/rational.hpp"

#include <stdexcept>

using namespace hurwitzlab;
using testsupport::Q;

TEST_CASE("rational canonical form and string round trip") {
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK(parse_rational("-0/3") == 0);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("property: serialized form round-trips exactly") {
  for (int i = 0; i < 500; ++i) {
    const Rational q = testsupport::random_rational(100000, 100000) * testsupport::random_rational(1000, 1000);
    const std::string s = to_string(q);
    CHECK(parse_rational(s) == q);
    CHECK(to_string(parse_rational(s)) == s);
  }
}

TEST_CASE("factorials and double factorials") {
  FactorialTable t;
  CHECK(t.factorial(0) == 1);
  CHECK(t.factorial(10) == 3628800);
  CHECK(t.double_factorial(-1) == 1);
  CHECK(t.double_factorial(0) == 1);
  CHECK(t.double_factorial(7) == 105);
  CHECK(t.double_factorial(8) == 384);
  CHECK(t.binomial(6, 2) == 15);
  CHECK(binomial(6, 7) == 0);
  CHECK(factorial(20) == Integer("2432902008176640000"));
  // Independent tables agree.
  FactorialTable u;
  for (int n = 0; n < 25; ++n) CHECK(u.factorial(n) == factorial(n));
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Q("-1/2"));
  CHECK(bernoulli(2) == Q("1/6"));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Q("-1/30"));
  CHECK(bernoulli(6) == Q("1/42"));
  CHECK(bernoulli(12) == Q("-691/2730"));
  // B_2/(2*1) is the first Hodge R-matrix coefficient.
  CHECK(bernoulli(2) / 2 == Q("1/12"));
}

TEST_CASE("property: odd bernoulli numbers vanish and the defining sum is zero") {
  for (int n = 1; n <= 20; ++n) {
    if (n >= 3 && n % 2 == 1) CHECK(bernoulli(n) == 0);
    Rational s = 0;
    for (int k = 0; k <= n; ++k) s += Rational(binomial(n + 1, k)) * bernoulli(k);
    CHECK(s == 0);
  }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3, -1) == Q("1/3"));
  CHECK(pochhammer(0, 5) == 120);
  CHECK(pochhammer(2, 2) == 12);
  CHECK(pochhammer(5, 0) == 1);
  CHECK(pochhammer(-3, 2) == 2);  // (-2)(-1)
  CHECK_THROWS_AS(pochhammer(2, -3), std::domain_error);
}

TEST_CASE("property: pochhammer(a,k) * pochhammer(a+k,-k) = 1") {
  std::uniform_int_distribution<int> ad(-12, 12), kd(-8, 8);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const long a = ad(testsupport::rng()), k = kd(testsupport::rng());
    Rational p, q;
    try {
      p = pochhammer(a, k);
      q = pochhammer(a + k, -k);
    } catch (const std::domain_error&) {
      continue;
    }
    CHECK(p * q == 1);
    ++checked;
  }
  CHECK(checked > 100);
}
