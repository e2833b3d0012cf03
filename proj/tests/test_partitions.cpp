#include "doctest.h"
#include "test_support.hpp"

#include "hurwitzlab/partitions.hpp"

#include <map>
#include <set>

using namespace hurwitzlab;
using testsupport::Q;

namespace {

// Oracle: Euler's pentagonal recurrence for p(n).
long partition_count(int n) {
  std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int m = 1; m <= n; ++m) {
    long s = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > m) break;
      const long sign = (k % 2 == 1) ? 1 : -1;
      s += sign * p[static_cast<std::size_t>(m - g1)];
      if (g2 <= m) s += sign * p[static_cast<std::size_t>(m - g2)];
    }
    p[static_cast<std::size_t>(m)] = s;
  }
  return p[static_cast<std::size_t>(n)];
}

// Oracle: standard Young tableaux counted by removing the box holding n.
long syt_count(std::vector<int> shape) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (shape.empty()) return 1;
  long total = 0;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const bool corner = (i + 1 == shape.size()) || shape[i + 1] < shape[i];
    if (!corner) continue;
    std::vector<int> s = shape;
    --s[i];
    total += syt_count(s);
  }
  return total;
}

// Oracle: Frobenius formula. chi^lambda(mu) is the coefficient of
// x^{lambda + delta} in a_delta(x) * p_mu(x), with N = |lambda| variables.
std::map<Partition, Integer> frobenius_characters(const Partition& mu) {
  const int n = mu.size();
  const int N = n;
  MultiPoly a_delta;
  {
    std::vector<int> perm(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) perm[static_cast<std::size_t>(i)] = i;
    do {
      int inversions = 0;
      for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j)
          if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
      Exponents e(static_cast<std::size_t>(N));
      for (int i = 0; i < N; ++i) e[static_cast<std::size_t>(i)] = N - 1 - perm[static_cast<std::size_t>(i)];
      a_delta += MultiPoly::monomial(e, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  MultiPoly prod = a_delta;
  for (int m : mu.parts()) {
    MultiPoly pm;
    for (int i = 0; i < N; ++i) pm += MultiPoly::variable(i).pow(static_cast<unsigned>(m));
    prod *= pm;
  }
  std::map<Partition, Integer> out;
  for (const Partition& lambda : enumerate_partitions(n)) {
    Exponents e(static_cast<std::size_t>(N));
    for (int i = 1; i <= N; ++i) e[static_cast<std::size_t>(i - 1)] = lambda.part(i) + N - i;
    out[lambda] = prod.coefficient(e).get_num();
  }
  return out;
}

}  // namespace

TEST_CASE("partition type") {
  const Partition p{1, 3, 0, 2, 1};
  CHECK(p.parts() == std::vector<int>{3, 2, 1, 1});
  CHECK(p.size() == 7);
  CHECK(p.length() == 4);
  CHECK(p.multiplicity(1) == 2);
  CHECK(p.conjugate() == Partition{4, 2, 1});
  CHECK(p.to_string() == "(3,2,1,1)");
  CHECK(Partition().empty());
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("enumerate partitions") {
  CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
  const auto p4 = enumerate_partitions(4);
  CHECK(p4.size() == 5);
  CHECK(p4 == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK(enumerate_partitions(8).size() == 22);
  for (int n = 0; n <= 20; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(static_cast<long>(all.size()) == partition_count(n));
    std::set<Partition> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
    // Reverse-lexicographic: strictly decreasing in lexicographic order.
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i] < all[i - 1]);
  }
}

TEST_CASE("hook length dimensions") {
  CHECK(dim_hook(Partition{5}) == 1);
  CHECK(dim_hook(Partition{2, 1}) == 2);
  CHECK(dim_hook(Partition{3, 2}) == 5);
  for (int n = 1; n <= 8; ++n) {
    Integer sum = 0;
    for (const auto& l : enumerate_partitions(n)) {
      CHECK(dim_hook(l) == syt_count(l.parts()));
      sum += dim_hook(l) * dim_hook(l);
    }
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("Murnaghan-Nakayama characters") {
  CHECK(mn_character(Partition{3}, Partition{2, 1}) == 1);
  CHECK(mn_character(Partition{2, 1}, Partition{3}) == -1);
  CHECK(mn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
  CHECK(mn_character(Partition{2, 1}, Partition{2, 1}) == 0);
  CHECK(mn_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
  CHECK(mn_character(Partition(), Partition()) == 1);
  CHECK_THROWS_AS(mn_character(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("characters agree with the Frobenius formula") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& mu : enumerate_partitions(n)) {
      const auto table = frobenius_characters(mu);
      for (const auto& [lambda, chi] : table) CHECK(mn_character(lambda, mu) == chi);
    }
  }
}

TEST_CASE("property: column and row orthogonality") {
  for (int n = 1; n <= 8; ++n) {
    const auto parts = enumerate_partitions(n);
    for (const auto& mu : parts) {
      // Sign character.
      CHECK(mn_character(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), mu) ==
            ((n - mu.length()) % 2 == 0 ? 1 : -1));
      for (const auto& nu : parts) {
        Integer s = 0;
        for (const auto& l : parts) s += mn_character(l, mu) * mn_character(l, nu);
        CHECK(s == (mu == nu ? z_aut(mu).z : Integer(0)));
      }
    }
    for (const auto& l : parts) {
      Rational s = 0;
      for (const auto& mu : parts) s += Rational(mn_character(l, mu) * mn_character(l, mu)) / Rational(z_aut(mu).z);
      CHECK(s == 1);
      CHECK(mn_character(l, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == dim_hook(l));
    }
  }
}

TEST_CASE("central character f2") {
  CHECK(central_character_f2(Partition{2}) == 1);
  CHECK(central_character_f2(Partition{1, 1}) == -1);
  CHECK(central_character_f2(Partition{2, 1}) == 0);
  CHECK(central_character_f2(Partition()) == 0);
  for (int n = 2; n <= 8; ++n) {
    std::vector<int> t(static_cast<std::size_t>(n - 2), 1);
    t.insert(t.begin(), 2);
    const Partition transposition(t);
    for (const auto& l : enumerate_partitions(n)) {
      const Rational via_chars = Rational(mn_character(l, transposition) * binomial(n, 2)) / Rational(dim_hook(l));
      CHECK(central_character_f2(l) == via_chars);
      CHECK(central_character_f2(l.conjugate()) == -central_character_f2(l));
      // Content sum: sum over boxes of (column - row).
      long contents = 0;
      for (int i = 1; i <= l.length(); ++i)
        for (int j = 1; j <= l.part(i); ++j) contents += j - i;
      CHECK(central_character_f2(l) == contents);
    }
  }
}

TEST_CASE("automorphism data") {
  CHECK(z_aut(Partition{1, 1, 1}).z == 6);
  CHECK(z_aut(Partition{1, 1, 1}).aut == 6);
  CHECK(z_aut(Partition{2, 1}).z == 2);
  CHECK(z_aut(Partition{2, 1}).aut == 1);
  CHECK(z_aut(Partition{3, 3, 2}).z == 36);
  CHECK(z_aut(Partition{3, 3, 2}).aut == 2);
  // Class sizes n!/z_mu add up to n!.
  for (int n = 1; n <= 9; ++n) {
    Rational total = 0;
    for (const auto& mu : enumerate_partitions(n)) total += Rational(factorial(n)) / Rational(z_aut(mu).z);
    CHECK(total == Rational(factorial(n)));
  }
}

TEST_CASE("character columns agree with pointwise characters") {
  for (int n = 0; n <= 7; ++n)
    for (const auto& mu : enumerate_partitions(n)) {
      const auto col = character_column(mu);
      for (const auto& lambda : enumerate_partitions(n)) {
        auto it = col.find(lambda);
        CHECK((it == col.end() ? Integer(0) : it->second) == mn_character(lambda, mu));
      }
    }
}
