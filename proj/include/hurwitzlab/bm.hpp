#pragma once

// Recursion for the polynomials W_{g,n}(t_1, ..., t_n) on the Lambert curve.
// Variables t_1..t_n are MultiPoly indices 0..n-1.

#include "hurwitzlab/lambert.hpp"
#include "hurwitzlab/multipoly.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hurwitzlab {

/// Residue forms: arguments of W~ substituted before -res K (or +res K for mixed).
enum class ResidueForm {
  diagonal,        ///< W~(1/z, 1/z), sign -
  mixed,           ///< W~(1/z, 1/sigma), sign +
  conjugate,       ///< W~(1/sigma, 1/sigma), sign -
  odd_projection,  ///< [W~(t_1, t_1) / eta]_odd computed directly
};
std::string form_name(ResidueForm f);

/// Numerator t_a^2 (t_a+1) t_b^2 (t_b+1) of W_{0,2}; the denominator is (t_b - t_a)^2.
MultiPoly w02_numerator(int a, int b);
/// Value of D_1 D_2 H_{0,2} on the diagonal t_1 = t_2 = t: (t+1)^2 (3t^2 - 2t + 1)/12.
MultiPoly w02_regular_diagonal(int var = 0);

/// One summand of W~_{g,n}(u, v; t_2..t_n). For the genus-reducing term
/// `genus_drop` is set and only g1 is meaningful (g1 = g - 1).
struct WTildeTerm {
  bool genus_drop = false;
  int g1 = 0;
  std::vector<int> A;  ///< indices in 1..n-1 (0-based variables) attached to u
  int g2 = 0;
  std::vector<int> B;  ///< attached to v
  bool vanishes = false;  ///< contains W_{0,1}
};
/// All summands, including those that vanish through W_{0,1} = 0.
std::vector<WTildeTerm> w_tilde_terms(int g, int n);

struct BmStepReport {
  int g = 0;
  int n = 0;
  std::map<ResidueForm, MultiPoly> by_form;
  bool forms_agree = false;
  bool stable = false;  ///< recomputation with 4 more orders gives the same polynomials
};

/// Table of W_{g,n}, filled on demand by the recursion (mixed form).
class WTable {
 public:
  /// W_{g,n} for stable (g,n); computes prerequisites as needed.
  const MultiPoly& get(int g, int n);
  bool contains(int g, int n) const { return w_.count({g, n}) != 0; }
  const std::map<std::pair<int, int>, MultiPoly>& entries() const { return w_; }

  /// -res K W~ (or the sign-adjusted variant) for one residue form. Requires
  /// (g,n) stable; lower entries are taken from the table.
  MultiPoly step(int g, int n, ResidueForm form, int extra_order = 0);
  /// All four forms at two working orders.
  BmStepReport step_report(int g, int n);

  /// W~(u, v; t_{L'}) with u, v replaced by 1/w_u, 1/w_v (w in {z, sigma}),
  /// as a z-Laurent series with coefficients in t_2..t_n. The (1,1) diagonal
  /// uses the regular value of D_1 D_2 H_{0,2}.
  PLaurent w_tilde_expansion(int g, int n, bool u_sigma, bool v_sigma, int extra_order = 0);

 private:
  std::map<std::pair<int, int>, MultiPoly> w_;
};

/// Sum of c_k prod rho_{k_i + shift}(t_i) for P = sum c_k mu^k in variables 0..n-1.
/// shift = 0 gives H_{g,n}, shift = 1 gives W_{g,n}.
MultiPoly rho_expansion(const MultiPoly& P, int n, int shift);

struct ShapeReport {
  bool symmetric = false;
  bool degree_ok = false;   ///< per-variable degree <= 6g + 2n - 3
  bool divisible = false;   ///< divisible by t_i^2 for every i
  bool odd_pole = false;    ///< W(t_1) + W(sigma~(t_1)) regular at P
};
ShapeReport w_shape(const MultiPoly& w, int g, int n);

struct CutJoinReport {
  int g = 0;
  int n = 0;
  bool holds = false;
  bool top_degree_holds = false;  ///< highest total-degree layer alone
  int lhs_degree = 0;
  std::string detail;
};
/// Checks the t-coordinate cut-and-join equation as a polynomial identity
/// (after clearing the (t_k - t_j) denominators), using H polynomials built
/// from fitted P_{g',n'}. For (0,3) the cut term with the unstable H_{0,2}
/// is used in its recombined form sum_k c_kj c_ki - 1.
CutJoinReport cutjoin_t_check(int g, int n);

struct BmHurwitzReport {
  int g = 0;
  int n = 0;
  int x_order = 0;
  int coefficients_checked = 0;
  int mismatches = 0;
  std::string first_mismatch;
  bool passed() const { return mismatches == 0 && coefficients_checked > 0; }
};
/// Matches [x^mu] W_{g,n}(t(x)) with h0_{g;mu} prod mu_i / b! for 1 <= mu_i <= x_order.
BmHurwitzReport bm_vs_hurwitz(const MultiPoly& w, int g, int n, int x_order);

/// W_{0,2} - x_1 x_2/(x_1 - x_2)^2 equals sum a^a b^b/(a! b!) ab/(a+b) x_1^a x_2^b,
/// compared after clearing denominators, for 1 <= a, b <= x_order.
bool w02_x_check(int x_order);

}  // namespace hurwitzlab
