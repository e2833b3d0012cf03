#pragma once

// Integer partitions and symmetric-group characters.

#include "hurwitzlab/rational.hpp"

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <map>
#include <vector>

namespace hurwitzlab {

class Partition {
 public:
  Partition() = default;
  /// Parts in any order; zeros are dropped, negatives rejected.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// lambda_i for 1-based i; 0 beyond the length.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }
  /// Multiplicity of the part value j.
  int multiplicity(int j) const;

  Partition conjugate() const;
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

/// Number of standard Young tableaux (hook-length formula).
Integer dim_hook(const Partition& lambda);

/// chi^lambda(mu) by Murnaghan-Nakayama; memoized per thread.
/// Throws std::invalid_argument when |lambda| != |mu|.
Integer mn_character(const Partition& lambda, const Partition& mu);

/// All nonzero chi^lambda(mu), lambda |- |mu|, built by adding rim hooks of
/// lengths mu_1, mu_2, ... to the empty diagram.
std::map<Partition, Integer> character_column(const Partition& mu);

/// Eigenvalue of F2 on v_lambda: sum_i lambda_i (lambda_i - 2i + 1) / 2.
Rational central_character_f2(const Partition& lambda);

struct AutomorphismData {
  Integer z;    ///< prod mu_i * prod m_j!
  Integer aut;  ///< prod m_j!
};
AutomorphismData z_aut(const Partition& mu);

}  // namespace hurwitzlab
