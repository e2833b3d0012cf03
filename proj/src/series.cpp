#include "hurwitzlab/series.hpp"

namespace hurwitzlab {

QSeries zeta_series(int order) {
  QSeries s(order);
  // (z/2)^k/k! - (-z/2)^k/k! = 2 (z/2)^k/k! for odd k.
  Rational term(1);
  for (int k = 1; k <= order; ++k) {
    term *= Rational(1, 2 * k);
    if (k % 2 == 1) s.at(k) = 2 * term;
  }
  return s;
}

QSeries exp_series(int order) {
  QSeries s(order);
  Rational term(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) term /= k;
    s.at(k) = term;
  }
  return s;
}

QSeries log1p_series(int order) {
  QSeries s(order);
  for (int k = 1; k <= order; ++k) s.at(k) = Rational(k % 2 == 1 ? 1 : -1, k);
  return s;
}

}  // namespace hurwitzlab
