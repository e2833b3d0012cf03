#pragma once

// Exact scalars. Every coefficient in the library is a Rational; nothing is
// ever rounded.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitzlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical "p/q" form ("p" when q == 1). Round-trips through parse_rational.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q"; the result is canonicalized. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

Rational make_rational(long num, long den = 1);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational pow(const Rational& base, unsigned exponent);
Integer ipow(long base, unsigned exponent);

/// Memoized factorials and double factorials. Tables are owned by the
/// instance; distinct instances share nothing.
class FactorialTable {
 public:
  const Integer& factorial(int n);
  /// n!! with the conventions (-1)!! = 0!! = 1.
  const Integer& double_factorial(int n);
  Integer binomial(int n, int k);

 private:
  std::vector<Integer> fact_{Integer(1)};
  std::map<int, Integer> dfact_;
};

Integer factorial(int n);
Integer double_factorial(int n);
Integer binomial(int n, int k);

/// B_n with B_1 = -1/2 (so that sum_{k<=n} C(n+1,k) B_k = 0 for n >= 1).
Rational bernoulli(int n);

/// (a+1)_k = (a+k)!/a!, i.e. (a+1)(a+2)...(a+k) for k >= 0 and
/// 1/(a(a-1)...(a+k+1)) for k < 0. Throws std::domain_error when the
/// k < 0 product contains a zero factor.
Rational pochhammer(long a, long k);

}  // namespace hurwitzlab
