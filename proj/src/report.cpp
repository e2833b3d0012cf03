#include "hurwitzlab/report.hpp"

#include <gmp.h>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hurwitzlab {

std::string status_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Check compare(std::string name, std::string ref, const Rational& lhs, const Rational& rhs) {
  return {std::move(name), std::move(ref), lhs == rhs ? Status::pass : Status::fail, to_string(lhs), to_string(rhs)};
}

Check boolean_check(std::string name, std::string ref, bool ok, std::string lhs, std::string rhs) {
  return {std::move(name), std::move(ref), ok ? Status::pass : Status::fail, std::move(lhs), std::move(rhs)};
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t Report::count(Status s) const {
  std::size_t c = 0;
  for (const auto& ch : checks) c += ch.status == s ? 1 : 0;
  return c;
}

Status Report::overall() const {
  if (checks.empty()) return Status::inconclusive;
  if (count(Status::fail) > 0) return Status::fail;
  if (count(Status::inconclusive) > 0) return Status::inconclusive;
  return Status::pass;
}

int exit_code(const Report& r) {
  switch (r.overall()) {
    case Status::pass: return 0;
    case Status::fail: return 1;
    case Status::inconclusive: return 2;
  }
  return 2;
}

nlohmann::ordered_json versions() {
  nlohmann::ordered_json v;
  v["hurwitzlab"] = "1.0.0";
  v["gmp"] = gmp_version;
  v["nlohmann_json"] = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) +
                       "." + std::to_string(NLOHMANN_JSON_VERSION_PATCH);
  return v;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["campaign"] = r.campaign;
  j["parameters"] = r.parameters;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json row;
    row["name"] = c.name;
    row["paper_ref"] = c.ref;
    row["status"] = status_string(c.status);
    row["lhs"] = c.lhs;
    row["rhs"] = c.rhs;
    j["checks"].push_back(std::move(row));
  }
  j["versions"] = versions();
  return j;
}

std::string report_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string report_csv(const Report& r) {
  std::ostringstream os;
  os << "name,paper_ref,status,lhs,rhs\n";
  for (const auto& c : r.checks)
    os << csv_field(c.name) << ',' << csv_field(c.ref) << ',' << status_string(c.status) << ',' << csv_field(c.lhs)
       << ',' << csv_field(c.rhs) << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------

nlohmann::ordered_json cache_to_json(const HurwitzTable& t) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& [key, stored] : t.entries())
    for (Route route : stored.routes) {
      nlohmann::ordered_json row;
      row["g"] = key.g;
      row["mu"] = key.mu.parts();
      row["b"] = branch_count(key.g, key.mu);
      row["connected"] = key.connected;
      row["value"] = to_string(stored.value);
      row["route"] = route_name(route);
      rows.push_back(std::move(row));
    }
  return rows;
}

HurwitzTable cache_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::runtime_error("cache: expected a JSON list");
  HurwitzTable t;
  for (const auto& row : j) {
    try {
      HurwitzEntry e;
      e.g = row.at("g").get<int>();
      e.mu = Partition(row.at("mu").get<std::vector<int>>());
      e.connected = row.value("connected", true);
      e.value = parse_rational(row.at("value").get<std::string>());
      e.route = parse_route(row.at("route").get<std::string>());
      if (row.contains("b") && row.at("b").get<int>() != branch_count(e.g, e.mu))
        throw std::runtime_error("cache: b does not match (g, mu)");
      t.insert(e);
    } catch (const ConflictError&) {
      throw;
    } catch (const std::exception& ex) {
      throw std::runtime_error(std::string("cache: malformed row: ") + ex.what());
    }
  }
  return t;
}

HurwitzTable load_cache(const std::string& path) {
  std::ifstream in(path);
  if (!in) return {};
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return {};
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw std::runtime_error(std::string("cache: ") + ex.what());
  }
  return cache_from_json(j);
}

void save_cache(const HurwitzTable& t, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cache: cannot write " + path);
  out << cache_to_json(t).dump(2) << '\n';
}

}  // namespace hurwitzlab
