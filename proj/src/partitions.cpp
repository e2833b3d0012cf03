#include "hurwitzlab/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace hurwitzlab {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) throw std::invalid_argument("partition parts must be nonnegative");
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts_ = std::move(parts);
  for (int p : parts_) size_ += p;
}

int Partition::multiplicity(int j) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int j = 1; j <= part(1); ++j) {
    int count = 0;
    for (int p : parts_)
      if (p >= j) ++count;
    c.push_back(count);
  }
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void enumerate_into(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    enumerate_into(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

// Beta-set of lambda with L beads: positions lambda_i - i + L, i = 1..L.
std::vector<int> beta_set(const std::vector<int>& parts, int beads) {
  std::vector<int> b;
  for (int i = 1; i <= beads; ++i) {
    const int li = i <= static_cast<int>(parts.size()) ? parts[static_cast<std::size_t>(i - 1)] : 0;
    b.push_back(li - i + beads);
  }
  return b;  // strictly decreasing
}

std::vector<int> from_beta_set(std::vector<int> b) {
  std::sort(b.begin(), b.end(), std::greater<>());
  const int beads = static_cast<int>(b.size());
  std::vector<int> parts;
  for (int i = 1; i <= beads; ++i) {
    const int li = b[static_cast<std::size_t>(i - 1)] + i - beads;
    if (li > 0) parts.push_back(li);
  }
  return parts;
}

using CharKey = std::pair<std::vector<int>, std::vector<int>>;

Integer mn_rec(const std::vector<int>& lambda, const std::vector<int>& mu, std::map<CharKey, Integer>& memo) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  CharKey key{lambda, mu};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int r = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const int beads = static_cast<int>(lambda.size());
  const std::vector<int> b = beta_set(lambda, beads);
  Integer total = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int target = b[i] - r;
    if (target < 0 || std::find(b.begin(), b.end(), target) != b.end()) continue;
    int between = 0;
    for (int x : b)
      if (x > target && x < b[i]) ++between;
    std::vector<int> nb = b;
    nb[i] = target;
    const Integer sub = mn_rec(from_beta_set(std::move(nb)), rest, memo);
    total += (between % 2 == 0) ? sub : Integer(-sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  enumerate_into(n, n, cur, out);
  return out;
}

Integer dim_hook(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) hooks *= lambda.part(i) - j + conj.part(j) - i + 1;
  return factorial(lambda.size()) / hooks;
}

Integer mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("mn_character: |lambda| != |mu|");
  thread_local std::map<CharKey, Integer> memo;
  return mn_rec(lambda.parts(), mu.parts(), memo);
}

std::map<Partition, Integer> character_column(const Partition& mu) {
  std::map<Partition, Integer> col{{Partition(), Integer(1)}};
  for (int r : mu.parts()) {
    std::map<Partition, Integer> next;
    for (const auto& [lambda, chi] : col) {
      const int beads = lambda.length() + r;
      const std::vector<int> b = beta_set(lambda.parts(), beads);
      for (std::size_t i = 0; i < b.size(); ++i) {
        const int target = b[i] + r;
        if (std::find(b.begin(), b.end(), target) != b.end()) continue;
        int between = 0;
        for (int x : b)
          if (x > b[i] && x < target) ++between;
        std::vector<int> nb = b;
        nb[i] = target;
        Integer& slot = next[Partition(from_beta_set(std::move(nb)))];
        if (between % 2 == 0)
          slot += chi;
        else
          slot -= chi;
      }
    }
    col.clear();
    for (auto& [l, c] : next)
      if (c != 0) col.emplace(l, std::move(c));
  }
  return col;
}

Rational central_character_f2(const Partition& lambda) {
  long twice = 0;
  for (int i = 1; i <= lambda.length(); ++i) twice += static_cast<long>(lambda.part(i)) * (lambda.part(i) - 2 * i + 1);
  return make_rational(twice, 2);
}

AutomorphismData z_aut(const Partition& mu) {
  AutomorphismData d{1, 1};
  for (int p : mu.parts()) d.z *= p;
  const auto& parts = mu.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    d.aut *= factorial(static_cast<int>(j - i));
    i = j;
  }
  d.z *= d.aut;
  return d;
}

}  // namespace hurwitzlab
