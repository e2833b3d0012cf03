#pragma once

// Sparse exact polynomials in variables t_0, t_1, ... over Rational.
// Exponent vectors are stored with trailing zeros trimmed, so a polynomial
// does not need to know how many variables exist; a constant is simply the
// monomial with an empty exponent vector.

#include "hurwitzlab/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hurwitzlab {

using Exponents = std::vector<int>;

class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  MultiPoly() = default;
  MultiPoly(const Rational& c);  // NOLINT: constants convert implicitly
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT

  static MultiPoly variable(int index);
  static MultiPoly monomial(Exponents exps, const Rational& coeff = Rational(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the given monomial (zero if absent).
  Rational coefficient(const Exponents& exps) const;
  std::optional<Rational> constant_value() const;

  /// One more than the highest variable index that occurs.
  int variable_count() const;
  int degree_in(int var) const;
  /// Lowest power of `var` over all terms (0 for the zero polynomial).
  int min_degree_in(int var) const;
  int total_degree() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(MultiPoly a, int c) { return a *= Rational(c); }
  friend MultiPoly operator*(int c, MultiPoly a) { return a *= Rational(c); }
  MultiPoly operator-() const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned e) const;
  MultiPoly derivative(int var) const;
  /// Replaces t_var by the polynomial `value`.
  MultiPoly substitute(int var, const MultiPoly& value) const;
  /// Renames variables: t_i -> t_{mapping[i]}. Variables beyond the mapping are kept.
  MultiPoly rename(std::span<const int> mapping) const;
  /// Divides by t_var^k; throws std::domain_error if not divisible.
  MultiPoly divide_by_power(int var, int k) const;
  /// Homogeneous component of total degree d.
  MultiPoly homogeneous_part(int d) const;
  /// Coefficient of t_var^k, as a polynomial in the remaining variables.
  MultiPoly coefficient_of(int var, int k) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// True when invariant under every transposition of t_0..t_{nvars-1}.
  bool is_symmetric(int nvars) const;

  /// Human-readable form with variables named prefix1, prefix2, ...
  std::string to_string(const std::string& prefix = "t") const;

 private:
  void add_term(Exponents exps, const Rational& c);
  static void trim(Exponents& e);
  Terms terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Univariate polynomial in t_0 from ascending coefficients.
MultiPoly poly_from_coefficients(std::span<const Rational> coeffs, int var = 0);

}  // namespace hurwitzlab
