#include "hurwitzlab/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace hurwitzlab {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_part = text.substr(0, slash);
  const auto den_part = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_part) || !is_integer_literal(den_part) || den_part[0] == '-' || den_part[0] == '+')
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Integer num(std::string(num_part[0] == '+' ? num_part.substr(1) : num_part));
  Integer den{std::string(den_part)};
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

Integer ipow(long base, unsigned exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), exponent);
  return r;
}

const Integer& FactorialTable::factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  while (static_cast<int>(fact_.size()) <= n) {
    const auto k = static_cast<long>(fact_.size());
    fact_.push_back(fact_.back() * k);
  }
  return fact_[static_cast<std::size_t>(n)];
}

const Integer& FactorialTable::double_factorial(int n) {
  if (n < -1) throw std::domain_error("double factorial below -1");
  if (auto it = dfact_.find(n); it != dfact_.end()) return it->second;
  Integer r(1);
  for (int k = n; k > 1; k -= 2) r *= k;
  return dfact_.emplace(n, r).first->second;
}

Integer FactorialTable::binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Integer factorial(int n) { return FactorialTable{}.factorial(n); }
Integer double_factorial(int n) { return FactorialTable{}.double_factorial(n); }
Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational bernoulli(int n) {
  if (n < 0) throw std::domain_error("bernoulli index must be nonnegative");
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc(0);
    for (int k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * b[static_cast<std::size_t>(k)];
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b[static_cast<std::size_t>(n)];
}

Rational pochhammer(long a, long k) {
  Rational r(1);
  if (k >= 0) {
    for (long j = 1; j <= k; ++j) r *= a + j;
    return r;
  }
  for (long j = 0; j < -k; ++j) {
    const long factor = a - j;
    if (factor == 0) throw std::domain_error("pochhammer: zero factor in (a+1)_k with k < 0");
    r *= factor;
  }
  return Rational(1) / r;
}

}  // namespace hurwitzlab
