#pragma once

// Simple Hurwitz numbers. Convention throughout: h_{g;mu} counts covers with
// labeled poles, i.e. |Aut mu| * (number of monodromy tuples) / d!.
// The number of simple branch points is b = 2g + |mu| + l(mu) - 2.

#include "hurwitzlab/multipoly.hpp"
#include "hurwitzlab/partitions.hpp"
#include "hurwitzlab/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hurwitzlab {

/// b(g, mu); may be negative for inadmissible input.
int branch_count(int g, const Partition& mu);
/// Genus recovered from b, or nullopt when the parity does not match.
std::optional<int> genus_from_b(int b, const Partition& mu);

/// Disconnected Hurwitz number from the character sum, indexed by b.
Rational h_disconnected_char_b(int b, const Partition& mu);
/// Same, indexed by genus (zero when b < 0).
Rational h_disconnected_char(int g, const Partition& mu);

/// Connected Hurwitz number by inclusion-exclusion over the character route.
Rational h_connected(int g, const Partition& mu);

/// Connected number via inclusion-exclusion with a caller-supplied
/// disconnected oracle indexed by (b, mu).
Rational connected_from_disconnected(int g, const std::vector<int>& mu,
                                     const std::function<Rational(int, const Partition&)>& disc);

struct BruteForceCounts {
  Rational disconnected;
  Rational connected;
};

/// Monodromy enumeration over S_d. Guards: |mu| <= 7, b <= 8.
BruteForceCounts h_bruteforce_both(int g, const Partition& mu);
Rational h_bruteforce(int g, const Partition& mu);

/// Disconnected values from the cut-and-join evolution, keyed by (b, mu).
class CutJoinTable {
 public:
  CutJoinTable(int d_max, int b_max);
  int d_max() const { return d_max_; }
  int b_max() const { return b_max_; }
  /// Disconnected Hurwitz number; throws std::out_of_range outside the bounds.
  Rational value(int b, const Partition& mu) const;

 private:
  int d_max_;
  int b_max_;
  // steps_[b][mu] = coefficient of p_mu in the b-th evolution step.
  std::vector<std::map<Partition, Rational>> steps_;
};

/// Guards: d_max <= 10, b_max <= 16.
CutJoinTable cut_and_join_evolve(int d_max, int b_max);

// ---------------------------------------------------------------------------

enum class Route { character, cut_join, brute, fock };
std::string route_name(Route r);
Route parse_route(const std::string& s);

struct HurwitzEntry {
  int g = 0;
  Partition mu;
  bool connected = true;
  Rational value;
  Route route = Route::character;
  int b() const { return branch_count(g, mu); }
};

class ConflictError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact Hurwitz values with route provenance. Inserting a value that
/// disagrees with an existing entry for the same index throws ConflictError.
class HurwitzTable {
 public:
  struct Key {
    int g;
    Partition mu;
    bool connected;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  struct Stored {
    Rational value;
    std::vector<Route> routes;
  };

  /// Returns true if the entry is new, false if it confirmed an existing one.
  bool insert(const HurwitzEntry& e);
  std::optional<Rational> find(int g, const Partition& mu, bool connected = true) const;
  std::size_t size() const { return entries_.size(); }
  const std::map<Key, Stored>& entries() const { return entries_; }
  friend bool operator==(const HurwitzTable& a, const HurwitzTable& b);

 private:
  std::map<Key, Stored> entries_;
};

// ---------------------------------------------------------------------------

/// b! * prod mu_i^{mu_i} / mu_i! : the ELSV prefactor.
Rational elsv_prefactor(int g, const std::vector<int>& mu);

class InterpolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PolyFit {
  int g = 0;
  int n = 0;
  int degree_bound = 0;  ///< 3g - 3 + n
  int grid_side = 0;
  int holdout = 0;
  MultiPoly P;  ///< in variables mu_1..mu_n (indices 0..n-1)
  int points_checked = 0;
  bool symmetric = false;
  bool degree_ok = false;
  std::vector<std::vector<int>> holdout_points;
};

/// P_{g,n}(mu) = h0_{g;mu} / elsv_prefactor, interpolated on {1..D+1}^n and
/// verified on the rest of {1..grid_side}^n plus `holdout` extra points.
/// Throws InterpolationError on any mismatch.
PolyFit fit_P_polynomial(int g, int n, int grid_side, int holdout);
int default_grid_side(int g, int n);

/// Univariate Lagrange basis polynomials for nodes 1..m, in variable `var`.
std::vector<MultiPoly> lagrange_basis(int m, int var);

}  // namespace hurwitzlab
