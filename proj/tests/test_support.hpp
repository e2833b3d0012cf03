#pragma once

#include "hurwitzlab/multipoly.hpp"
#include "hurwitzlab/rational.hpp"
#include "hurwitzlab/series.hpp"

#include <random>
#include <string>
#include <vector>

namespace testsupport {

using hurwitzlab::MultiPoly;
using hurwitzlab::Rational;

inline Rational Q(const char* s) { return hurwitzlab::parse_rational(s); }

inline std::mt19937& rng() {
  static std::mt19937 gen(20240607u);
  return gen;
}

inline Rational random_rational(int num_bound = 20, int den_bound = 9) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  return hurwitzlab::make_rational(num(rng()), den(rng()));
}

inline MultiPoly random_poly(int nvars, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  MultiPoly p;
  for (int t = 0; t < terms; ++t) {
    hurwitzlab::Exponents e;
    for (int v = 0; v < nvars; ++v) e.push_back(deg(rng()));
    p += MultiPoly::monomial(e, random_rational());
  }
  return p;
}

inline hurwitzlab::QSeries random_series(int order, bool zero_constant) {
  hurwitzlab::QSeries s(order);
  for (int k = zero_constant ? 1 : 0; k <= order; ++k) s.at(k) = random_rational();
  return s;
}

inline hurwitzlab::QSeries series_of(std::vector<Rational> c, int order) {
  return hurwitzlab::QSeries(std::move(c), order);
}

}  // namespace testsupport
