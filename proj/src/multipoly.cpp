#include "hurwitzlab/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitzlab {

void MultiPoly::trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

void MultiPoly::add_term(Exponents exps, const Rational& c) {
  if (hurwitzlab::is_zero(c)) return;
  trim(exps);
  auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
  if (!inserted) {
    it->second += c;
    if (hurwitzlab::is_zero(it->second)) terms_.erase(it);
  }
}

MultiPoly::MultiPoly(const Rational& c) { add_term({}, c); }

MultiPoly MultiPoly::variable(int index) {
  Exponents e(static_cast<std::size_t>(index) + 1, 0);
  e.back() = 1;
  return monomial(std::move(e));
}

MultiPoly MultiPoly::monomial(Exponents exps, const Rational& coeff) {
  MultiPoly p;
  p.add_term(std::move(exps), coeff);
  return p;
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  Exponents e = exps;
  trim(e);
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<Rational> MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

int MultiPoly::variable_count() const {
  int n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, static_cast<int>(e.size()));
  return n;
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    if (var < static_cast<int>(e.size())) d = std::max(d, e[static_cast<std::size_t>(var)]);
  return d;
}

int MultiPoly::min_degree_in(int var) const {
  if (terms_.empty()) return 0;
  int d = INT32_MAX;
  for (const auto& [e, c] : terms_)
    d = std::min(d, var < static_cast<int>(e.size()) ? e[static_cast<std::size_t>(var)] : 0);
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      r.add_term(std::move(e), ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (hurwitzlab::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly r;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    if (v >= e.size() || e[v] == 0) continue;
    Exponents ne = e;
    ne[v] -= 1;
    r.add_term(std::move(ne), c * e[v]);
  }
  return r;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  const auto v = static_cast<std::size_t>(var);
  std::map<int, MultiPoly> powers;
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    const int k = v < e.size() ? e[v] : 0;
    Exponents rest = e;
    if (v < rest.size()) rest[v] = 0;
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, value.pow(static_cast<unsigned>(k))).first;
    r += monomial(std::move(rest), c) * it->second;
  }
  return r;
}

MultiPoly MultiPoly::rename(std::span<const int> mapping) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const auto target = static_cast<std::size_t>(i < mapping.size() ? mapping[i] : static_cast<int>(i));
      if (ne.size() <= target) ne.resize(target + 1, 0);
      ne[target] += e[i];
    }
    r.add_term(std::move(ne), c);
  }
  return r;
}

MultiPoly MultiPoly::divide_by_power(int var, int k) const {
  MultiPoly r;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    const int have = v < e.size() ? e[v] : 0;
    if (have < k) throw std::domain_error("polynomial not divisible by requested variable power");
    Exponents ne = e;
    if (k > 0) ne[v] -= k;
    r.add_term(std::move(ne), c);
  }
  return r;
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
  MultiPoly r;
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) == d) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::coefficient_of(int var, int k) const {
  MultiPoly r;
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : terms_) {
    const int have = v < e.size() ? e[v] : 0;
    if (have != k) continue;
    Exponents ne = e;
    if (v < ne.size()) ne[v] = 0;
    r.add_term(std::move(ne), c);
  }
  return r;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= point.size()) throw std::out_of_range("evaluation point has too few coordinates");
      term *= hurwitzlab::pow(point[i], static_cast<unsigned>(e[i]));
    }
    total += term;
  }
  return total;
}

bool MultiPoly::is_symmetric(int nvars) const {
  std::vector<int> map(static_cast<std::size_t>(nvars));
  for (int i = 0; i + 1 < nvars; ++i) {
    std::iota(map.begin(), map.end(), 0);
    std::swap(map[static_cast<std::size_t>(i)], map[static_cast<std::size_t>(i) + 1]);
    if (rename(map) != *this) return false;
  }
  return true;
}

std::string MultiPoly::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    const bool bare = e.empty();
    if (bare || a != 1) os << hurwitzlab::to_string(a);
    bool need_star = bare || a != 1;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << prefix << i + 1;
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

MultiPoly poly_from_coefficients(std::span<const Rational> coeffs, int var) {
  MultiPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    Exponents e(static_cast<std::size_t>(var) + 1, 0);
    e.back() = static_cast<int>(k);
    p += MultiPoly::monomial(std::move(e), coeffs[k]);
  }
  return p;
}

}  // namespace hurwitzlab
