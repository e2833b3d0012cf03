#pragma once

// Campaign reports and the persistent Hurwitz cache.

#include "hurwitzlab/hurwitz.hpp"
#include "hurwitzlab/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hurwitzlab {

enum class Status { pass, fail, inconclusive };
std::string status_string(Status s);

struct Check {
  std::string name;
  std::string ref;  ///< short neutral label of the identity being checked
  Status status = Status::inconclusive;
  std::string lhs;
  std::string rhs;
};

/// Status from an exact comparison; lhs/rhs keep both values.
Check compare(std::string name, std::string ref, const Rational& lhs, const Rational& rhs);
Check boolean_check(std::string name, std::string ref, bool ok, std::string lhs = "true", std::string rhs = "true");

struct Report {
  std::string campaign;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<Check> checks;

  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const Report& other);
  std::size_t count(Status s) const;
  /// fail if any check failed, else inconclusive if any was, else pass.
  /// An empty report is inconclusive.
  Status overall() const;
};

/// 0 pass, 1 fail, 2 inconclusive.
int exit_code(const Report& r);

nlohmann::ordered_json versions();
nlohmann::ordered_json to_json(const Report& r);
/// Pretty-printed JSON with a trailing newline; byte-stable for equal reports.
std::string report_json(const Report& r);
/// Header "name,ref,status,lhs,rhs"; fields quoted when needed.
std::string report_csv(const Report& r);

// ---------------------------------------------------------------------------
// Cache: JSON list of {g, mu, b, connected, value, route}, one row per route.

nlohmann::ordered_json cache_to_json(const HurwitzTable& t);
/// Throws ConflictError on disagreeing rows and std::runtime_error when the
/// document is malformed.
HurwitzTable cache_from_json(const nlohmann::json& j);

/// Missing or empty file gives an empty table.
HurwitzTable load_cache(const std::string& path);
void save_cache(const HurwitzTable& t, const std::string& path);

}  // namespace hurwitzlab
