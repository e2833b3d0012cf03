#pragma once

// The charge-zero semi-infinite wedge on a finite energy window.
//
// A basis vector v_lambda has occupied half-integer levels k = lambda_i - i + 1/2.
// Levels are stored as integers m = k - 1/2. Energy is |lambda|; vectors carry
// an energy cutoff and a flag recording whether any heavier state was dropped.

#include "hurwitzlab/partitions.hpp"
#include "hurwitzlab/rational.hpp"
#include "hurwitzlab/series.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hurwitzlab {

/// Finite Laurent polynomial in one variable: exponent -> coefficient.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rational& c) { add(0, c); }  // NOLINT
  static UPoly monomial(int e, const Rational& c) {
    UPoly p;
    p.add(e, c);
    return p;
  }
  void add(int e, const Rational& c);
  Rational coefficient(int e) const;
  const std::map<int, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c);
  UPoly operator-() const;
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.terms_ == b.terms_; }
  std::string to_string(const std::string& var = "u") const;

 private:
  std::map<int, Rational> terms_;
};
inline bool is_zero(const UPoly& p) { return p.is_zero(); }

inline bool fock_coefficient_is_zero(const Rational& c) { return is_zero(c); }
inline bool fock_coefficient_is_zero(const UPoly& c) { return c.is_zero(); }
inline bool fock_coefficient_is_zero(const QLaurent&) { return false; }

template <class C>
struct FockVector {
  std::map<Partition, C> terms;
  int cutoff = 0;
  bool truncated = false;

  static FockVector vacuum(int cutoff, const C& one) {
    FockVector v;
    v.cutoff = cutoff;
    v.terms.emplace(Partition(), one);
    return v;
  }
  /// Adds c * v_lambda, dropping it (and flagging) above the cutoff.
  void add(const Partition& lambda, const C& c) {
    if (lambda.size() > cutoff) {
      truncated = true;
      return;
    }
    auto it = terms.find(lambda);
    if (it == terms.end()) {
      if (!fock_coefficient_is_zero(c)) terms.emplace(lambda, c);
      return;
    }
    it->second += c;
    if (fock_coefficient_is_zero(it->second)) terms.erase(it);
  }
  C coefficient(const Partition& lambda) const {
    auto it = terms.find(lambda);
    return it == terms.end() ? C() : it->second;
  }
  /// Components with energy <= e.
  FockVector restricted(int e) const {
    FockVector r;
    r.cutoff = cutoff;
    r.truncated = truncated;
    for (const auto& [l, c] : terms)
      if (l.size() <= e) r.terms.emplace(l, c);
    return r;
  }
};

/// Occupied levels m_i = lambda_i - i for i = 1..depth; every m < -depth is
/// occupied as well.
std::vector<int> maya_positions(const Partition& lambda, int depth);
/// Debug picture of levels k in (-window, window): filled dots are occupied
/// levels, '|' separates negative from positive k.
std::string maya_string(const Partition& lambda, int window);

struct FermionMove {
  Partition target;
  int sign;  ///< reordering sign of the wedge product
  int from;  ///< source level m (k = m + 1/2); the particle lands on m - n
};

/// All nonzero actions of E_{k-n,k} (n != 0) on v_lambda.
std::vector<FermionMove> fermion_moves(const Partition& lambda, int n);

/// Normally ordered diagonal: pairs (m, w) with w = +1 for occupied m >= 0 and
/// w = -1 for empty m < 0.
std::vector<std::pair<int, int>> diagonal_levels(const Partition& lambda);

/// F2 eigenvalue computed from the Maya diagram.
Rational f2_eigenvalue(const Partition& lambda);

using QFock = FockVector<Rational>;

QFock alpha_apply(int m, const QFock& v);
QFock f2_apply(const QFock& v);
/// Coefficient of z^j in E_n(z) v, including delta_{n,0}/zeta(z).
QFock e_operator_apply(int n, int j, const QFock& v);

/// Disconnected Hurwitz number as a vacuum expectation. Throws
/// std::invalid_argument when cutoff < |mu|.
Rational vev_hurwitz(int g, const Partition& mu, int cutoff);

// ---------------------------------------------------------------------------
// A-operators at integer points: A(m, um) acting on u-Laurent coefficients.

using LFock = FockVector<QLaurent>;

/// Applies A(m, um); every operator coefficient is expanded through u^order.
LFock a_integer_apply(int m, const LFock& v, int order);

/// <A(mu_1, u mu_1) ... A(mu_n, u mu_n)> through u^u_order at a fixed cutoff.
QLaurent a_correlator(const std::vector<int>& mu, int u_order, int cutoff);

struct StableCorrelator {
  QLaurent value;
  int cutoff_low = 0;
  int cutoff_high = 0;
  bool stable = false;
};
/// Two-cutoff protocol: E = |mu| + u_order + slack and E + 2 must agree.
StableCorrelator a_correlator_stable(const std::vector<int>& mu, int u_order, int slack = 4);

/// [u^k] of the connected correlator (inclusion-exclusion over subsets).
Rational a_connected_correlator(const std::vector<int>& mu, int k, int slack = 4);

/// h0_{g;mu} from the connected correlator.
Rational hurwitz_from_correlator(int g, const std::vector<int>& mu, int slack = 4);

// ---------------------------------------------------------------------------
// Symbolic A(z, uz): coefficients A_l of z^l, with finite-Laurent u coefficients.

using UFock = FockVector<UPoly>;

class SymbolicA {
 public:
  /// A_l v. Matrix elements of A_l are finite Laurent polynomials in u.
  UFock apply(int l, const UFock& v);

 private:
  // table[(l, k')][n] = z-polynomial coefficients of P_{k'}(z) Q_{k'}(w, z)
  // at w^n, where Q = exp(z L(w)) S(w)^{k'}.
  const std::vector<std::vector<Rational>>& table(int l, int kp);
  const std::vector<std::vector<Rational>>& scalar_table(int l);
  std::map<std::pair<int, int>, std::vector<std::vector<Rational>>> tables_;
  std::map<int, std::vector<std::vector<Rational>>> scalar_tables_;
};

/// Coefficient (z^a u^b) map of <A(z, uz)> for u-powers up to u_order.
std::map<std::pair<int, int>, Rational> a_one_point_symbolic(int u_order);

enum class CheckStatus { pass, fail, inconclusive };
std::string status_name(CheckStatus s);

struct CommutatorReport {
  int k = 0;
  int l = 0;
  CheckStatus status = CheckStatus::inconclusive;
  std::vector<int> cutoffs;
  int states_checked = 0;
  bool operators_u_dependent = false;  ///< observed: A_k has several u-powers
  std::string detail;
};

/// Verifies [A_k, A_l] = (-1)^l delta_{k+l,1} on all states of energy <=
/// test_energy, at cutoffs `cutoff` and `cutoff + 2`, coefficientwise in u.
CommutatorReport a_commutator_check(int k, int l, int test_energy, int cutoff);

/// [E_a(z), E_b(cz)] = zeta((ac - b) z) E_{a+b}((1 + c) z) through z^order on v.
bool e_commutator_check(int a, int b, const Rational& c, int order, const QFock& v);

}  // namespace hurwitzlab
