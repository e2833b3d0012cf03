#pragma once

// The Lambert curve x = y e^{-y} with coordinates y = 1 + z = 1 + 1/t.
// Residues at the branch point P (z = 0) are taken in the z-chart; a function
// of t_1 is handed around as its Laurent expansion in z = 1/t_1.

#include "hurwitzlab/multipoly.hpp"
#include "hurwitzlab/series.hpp"

#include <map>
#include <vector>

namespace hurwitzlab {

using PSeries = TruncSeries<MultiPoly>;
using PLaurent = LaurentSeries<MultiPoly>;

PSeries lift(const QSeries& s);
PLaurent lift(const QLaurent& s);

/// rho_0 = -1 - t, rho_{k+1} = t^2 (t+1) d/dt rho_k, in variable `var`.
MultiPoly rho_poly(int k, int var = 0);

/// D = t^2 (t+1) d/dt in variable `var`.
MultiPoly d_operator(const MultiPoly& p, int var);

/// Deck involution sigma(z) through z^order (branch sigma = -z + ...).
QSeries sigma_series(int order);
/// 1/sigma(z) = t-chart sigma~(t), as a Laurent series in z = 1/t.
QLaurent sigma_t_series(int order);
/// eta = sigma(z) - z, as a series in z = 1/t_1.
QSeries eta_series(int order);

/// p with t_var replaced by the Laurent series s (for instance 1/z or
/// 1/sigma(z)); the remaining variables stay in the coefficients.
PLaurent substitute_t(const MultiPoly& p, int var, const QLaurent& s);
/// 1/z through z^order.
QLaurent inverse_z(int order);

/// f(sigma(z)) for a Laurent series f in z.
PLaurent compose_sigma(const PLaurent& f, const QSeries& sigma);

/// Odd residueless principal part: writes (f + f o sigma~)/(2 eta) in t_1 and
/// keeps the t_1^i terms with i >= 2. `f` is the expansion in z = 1/t_1;
/// coefficients above z^{-2} are discarded. Throws std::domain_error when the
/// validity order of f cannot determine all kept terms.
MultiPoly odd_projection(const PLaurent& f, int t1_var);

/// K(z, t_1)/dz = t_1^2 (1+t_1) / (2 (1 - z t_1)(1 - sigma(z) t_1)) * z/(1+z).
PSeries kernel_K(int order, int t1_var = 0);
/// (1/(2 eta)) (t_1^2 z/(1 - t_1 z) - t_1^2 sigma/(1 - t_1 sigma) * z/(1+z) * (1+sigma)/sigma),
/// expanded literally. Equals -kernel_K.
PSeries kernel_K_difference_form(int order, int t1_var = 0);
/// -res_{z=0} K(z, t_1) f(z) for f the expansion of a function of t_1 in z = 1/t_1.
/// Agrees with odd_projection(f). Throws std::domain_error if f is too short.
MultiPoly kernel_residue(const PLaurent& f, int t1_var);

/// y(x) = sum mu^{mu-1}/mu! x^mu.
QSeries lambert_y(int x_order);
/// t(x) = 1/(y(x) - 1).
QSeries t_of_x(int x_order);
/// p(t(x)) for a univariate polynomial in variable `var`.
QSeries x_expand(const MultiPoly& p, int x_order, int var = 0);
/// Coefficients of x_1^{m_1}...x_n^{m_n}, 1 <= m_i <= x_order, of p(t_1(x_1), ..., t_n(x_n)).
std::map<std::vector<int>, Rational> x_expand_multi(const MultiPoly& p, int n, int x_order);

struct RhoPairRow {
  int k;
  bool holomorphic;  ///< no positive powers of t in rho_k(t) + rho_k(sigma~(t))
  Rational constant_term;
};
/// Checks each k <= k_max at orders `order` and `order + 4`; `stable` records
/// agreement of the two runs.
struct RhoPairReport {
  std::vector<RhoPairRow> rows;
  bool stable = true;
};
RhoPairReport rho_pair_check(int k_max, int order);

}  // namespace hurwitzlab
