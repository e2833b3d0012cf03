#include "hurwitzlab/connected.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hurwitzlab {

ConnectedInverter::ConnectedInverter(int n, Lower conn_low, Disconnected disc)
    : n_(n), conn_low_(std::move(conn_low)), disc_(std::move(disc)) {
  if (n < 0 || n > 20) throw std::invalid_argument("ConnectedInverter: label count out of range");
  disc_low_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int s = 1; s <= n; ++s) {
    int best = conn_low_(s);
    for (int b = 1; b < s; ++b) best = std::min(best, conn_low_(b) + disc_low_[static_cast<std::size_t>(s - b)]);
    disc_low_[static_cast<std::size_t>(s)] = best;
  }
}

int ConnectedInverter::disc_low(int size) const { return disc_low_.at(static_cast<std::size_t>(size)); }

Rational ConnectedInverter::disc_cached(unsigned mask, int k) {
  if (mask == 0) return k == 0 ? Rational(1) : Rational(0);
  if (k < disc_low(std::popcount(mask))) return 0;
  const auto key = std::make_pair(mask, k);
  if (auto it = disc_memo_.find(key); it != disc_memo_.end()) return it->second;
  Rational v = disc_(mask, k);
  disc_memo_.emplace(key, v);
  return v;
}

Rational ConnectedInverter::connected(unsigned mask, int k) {
  if (mask == 0) throw std::invalid_argument("connected value of the empty set");
  const int size = std::popcount(mask);
  if (k < conn_low_(size)) return 0;
  const auto key = std::make_pair(mask, k);
  if (auto it = conn_memo_.find(key); it != conn_memo_.end()) return it->second;

  Rational value = disc_cached(mask, k);
  const unsigned lowest = mask & (~mask + 1U);
  const unsigned others = mask ^ lowest;
  // Blocks B containing the lowest label, B != mask.
  for (unsigned sub = others;; sub = (sub - 1U) & others) {
    const unsigned block = sub | lowest;
    if (block != mask) {
      const unsigned rest = mask ^ block;
      const int lo = conn_low_(std::popcount(block));
      const int hi = k - disc_low(std::popcount(rest));
      for (int k1 = lo; k1 <= hi; ++k1) {
        const Rational d = disc_cached(rest, k - k1);
        if (is_zero(d)) continue;
        const Rational c = connected(block, k1);
        if (!is_zero(c)) value -= c * d;
      }
    }
    if (sub == 0) break;
  }
  conn_memo_.emplace(key, value);
  return value;
}

}  // namespace hurwitzlab
