#pragma once

// Inclusion-exclusion between disconnected and connected quantities indexed
// by subsets of a labeled set and an additive integer grading.
//
//   disc(S, k) = sum over set partitions {B_1..B_r} of S and gradings
//                k_1 + ... + k_r = k of prod conn(B_i, k_i)
//
// Each connected block B has grading at least conn_low(|B|). Subsets are
// bitmasks over at most 20 labels.

#include "hurwitzlab/rational.hpp"

#include <functional>
#include <map>
#include <utility>

namespace hurwitzlab {

class ConnectedInverter {
 public:
  using Disconnected = std::function<Rational(unsigned mask, int k)>;
  using Lower = std::function<int(int block_size)>;

  ConnectedInverter(int n, Lower conn_low, Disconnected disc);

  /// Connected value for the labels in `mask` at grading k.
  Rational connected(unsigned mask, int k);
  Rational connected_full(int k) { return connected(full_mask(), k); }
  unsigned full_mask() const { return (1U << n_) - 1U; }

  /// Smallest grading a disconnected configuration on `size` labels can have.
  int disc_low(int size) const;

 private:
  Rational disc_cached(unsigned mask, int k);

  int n_;
  Lower conn_low_;
  Disconnected disc_;
  std::vector<int> disc_low_;
  std::map<std::pair<unsigned, int>, Rational> conn_memo_;
  std::map<std::pair<unsigned, int>, Rational> disc_memo_;
};

}  // namespace hurwitzlab
