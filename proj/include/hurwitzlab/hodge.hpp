#pragma once

// Intersection numbers on moduli of curves, the scalar Givental action, and
// the Hodge potential.

#include "hurwitzlab/multipoly.hpp"
#include "hurwitzlab/rational.hpp"
#include "hurwitzlab/series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hurwitzlab {

/// <tau_{d_1} ... tau_{d_n}>_g; zero unless sum d_i = 3g - 3 + n and 2g - 2 + n > 0.
Rational wk_correlator(int g, std::vector<int> d);

/// Correlators <tau_k>_g of a genus expansion F = sum hbar^g/n! <...>_g t_k...,
/// keyed by (g, sorted k). Only stable entries with n >= 1 are stored.
struct Potential {
  using Key = std::pair<int, std::vector<int>>;
  int max_genus = 0;
  int max_points = 0;
  std::map<Key, Rational> c;

  Rational coefficient(int g, std::vector<int> k) const;
  /// Polynomial sum_k <tau_k>_g prod t_{k_i}/n! restricted to n points, in
  /// variables t_0, t_1, ... (MultiPoly index = k).
  MultiPoly genus_part(int g, int n) const;
};

/// All nonzero correlators with g <= G and 1 <= n <= M.
Potential kw_potential(int G, int M);

/// Sign choices of the quantized operator z^{2l-1}^:
///   operator_sign * ( -d/dt_{2l} + sum t_i d/dt_{i+2l-1} ) + quadratic_sign * (hbar/2) sum (-1)^i d_i d_j.
struct GiventalConvention {
  int operator_sign = 1;
  int quadratic_sign = -1;
};

/// exp(sum r_{2l-1} z^{2l-1}^) e^{F/hbar} with R = exp(r). R must satisfy
/// R(z) R(-z) = 1 (r odd); throws std::invalid_argument otherwise. Entries
/// (g, n) of the result are exact when 2n + 4g - 3 <= F.max_points; the
/// result's max_points is the largest such n at genus F.max_genus, and
/// entries beyond it are dropped.
Potential givental_apply(const Potential& F, const QSeries& R, GiventalConvention conv = {});

/// exp(sum B_{2n}/(2n(2n-1)) z^{2n-1}) through z^order.
QSeries r_hodge(int order);
/// R_k from the odd part of y~(s) on the Lambert curve, s^2 = 2(y~ - log(1+y~)).
QSeries r_from_curve(int order);

/// int Lambda_g psi^k with Lambda_g = 1 - lambda_1 + ... + (-1)^g lambda_g.
Rational hodge_integral(int g, const std::vector<int>& k, GiventalConvention conv = {});

/// sum_k <Lambda_g psi^k> prod mu_i^{k_i}, in variables mu_1..mu_n (indices 0..n-1).
MultiPoly elsv_polynomial(int g, int n, GiventalConvention conv = {});

struct ElsvReport {
  int g = 0;
  int n = 0;
  int coefficients_checked = 0;
  int mismatches = 0;
  std::string first_mismatch;
  bool passed() const { return mismatches == 0 && coefficients_checked > 0; }
};
/// Every coefficient of the fitted P_{g,n} against the Hodge integral.
ElsvReport elsv_check(int g, int n);

struct BergmanReport {
  bool identity_holds = false;     ///< cleared-denominator identity
  bool symmetric = false;          ///< invariant under y1 <-> y2
  bool specialization_holds = false;  ///< at y2 = 2 y1
};
/// (D_1 + D_2) dy1 dy2/(y1 - y2)^2 = -dy1 dy2/(y1^2 y2^2), where D acts on
/// a 1-form f dy by d((1+y)/y f).
BergmanReport bergman_compat_check();

}  // namespace hurwitzlab
