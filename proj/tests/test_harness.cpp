#include "doctest.h"
#include "test_support.hpp"

#include "hurwitzlab/campaigns.hpp"
#include "hurwitzlab/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace hurwitzlab;
using testsupport::Q;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hurwitzlab_test_" + name)).string();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  out << text;
}

HurwitzTable sample_table() {
  HurwitzTable t;
  t.insert({1, Partition{2}, true, Q("1/2"), Route::character});
  t.insert({1, Partition{2}, true, Q("1/2"), Route::brute});
  t.insert({0, Partition{1, 1, 1}, true, Q("24"), Route::cut_join});
  t.insert({0, Partition{2, 1}, false, Q("3"), Route::fock});
  return t;
}

}  // namespace

TEST_CASE("cache round trip") {
  const HurwitzTable t = sample_table();
  CHECK(cache_from_json(nlohmann::json::parse(cache_to_json(t).dump())) == t);
  const std::string path = temp_path("roundtrip.json");
  save_cache(t, path);
  const HurwitzTable back = load_cache(path);
  CHECK(back == t);
  CHECK(back.entries().at({1, Partition{2}, true}).routes.size() == 2);
  // saving again is byte-identical
  std::ifstream a(path);
  const std::string first((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  save_cache(back, path);
  std::ifstream b(path);
  const std::string second((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(first == second);
  std::remove(path.c_str());
}

TEST_CASE("cache rows carry the documented fields") {
  const auto j = cache_to_json(sample_table());
  REQUIRE(j.is_array());
  for (const auto& row : j) {
    CHECK(row.contains("g"));
    CHECK(row.contains("mu"));
    CHECK(row.contains("b"));
    CHECK(row.at("value").is_string());
    CHECK(row.at("route").is_string());
  }
  CHECK(j[0].at("mu").is_array());
}

TEST_CASE("corrupted cache aborts with a conflict") {
  const std::string path = temp_path("corrupt.json");
  write_file(path, R"([{"g":1,"mu":[2],"b":3,"value":"1/2","route":"character"},
                       {"g":1,"mu":[2],"b":3,"value":"1/3","route":"brute"}])");
  CHECK_THROWS_AS(load_cache(path), ConflictError);
  std::remove(path.c_str());
}

TEST_CASE("empty, missing and malformed cache files") {
  const std::string path = temp_path("empty.json");
  write_file(path, "");
  CHECK(load_cache(path).size() == 0);
  write_file(path, "  \n");
  CHECK(load_cache(path).size() == 0);
  CHECK(load_cache(temp_path("does_not_exist.json")).size() == 0);
  write_file(path, "{not json");
  CHECK_THROWS_AS(load_cache(path), std::runtime_error);
  write_file(path, R"({"g":1})");
  CHECK_THROWS_AS(load_cache(path), std::runtime_error);
  write_file(path, R"([{"g":1,"mu":[2],"value":"x/y","route":"character"}])");
  CHECK_THROWS_AS(load_cache(path), std::runtime_error);
  write_file(path, R"([{"g":1,"mu":[2],"b":5,"value":"1/2","route":"character"}])");
  CHECK_THROWS_AS(load_cache(path), std::runtime_error);
  std::remove(path.c_str());
}

TEST_CASE("report schema and exit status") {
  Report r;
  r.campaign = "demo";
  r.parameters["g"] = 1;
  CHECK(exit_code(r) == 2);  // empty
  r.add(compare("a", "ref", Q("1/3"), Q("1/3")));
  CHECK(exit_code(r) == 0);
  r.add({"trunc", "ref", Status::inconclusive, "order 12", "order 16"});
  CHECK(exit_code(r) == 2);
  r.add(compare("b", "ref", Q("1/3"), Q("2/3")));
  CHECK(exit_code(r) == 1);
  CHECK(r.overall() == Status::fail);

  const auto j = to_json(r);
  CHECK(j.at("campaign") == "demo");
  CHECK(j.at("parameters").at("g") == 1);
  REQUIRE(j.at("checks").size() == 3);
  const auto& row = j.at("checks")[0];
  for (const char* key : {"name", "paper_ref", "status", "lhs", "rhs"}) CHECK(row.contains(key));
  CHECK(row.at("lhs") == "1/3");
  CHECK(j.at("checks")[1].at("status") == "inconclusive");
  CHECK(j.at("checks")[1].at("lhs") == "order 12");
  CHECK(j.at("checks")[1].at("rhs") == "order 16");
  CHECK(j.at("checks")[2].at("status") == "fail");
  CHECK(j.at("versions").contains("gmp"));
}

TEST_CASE("csv quoting") {
  Report r;
  r.add({"P(1,1)", "ref", Status::pass, "a \"b\"", "plain"});
  CHECK(report_csv(r) == "name,paper_ref,status,lhs,rhs\n\"P(1,1)\",ref,pass,\"a \"\"b\"\"\",plain\n");
}

TEST_CASE("ELSV rows carry identical strings and the report is byte-stable") {
  CampaignParams p;
  p.g = 1;
  p.n = 1;
  p.grid = 4;
  const Report a = campaign_elsv(p);
  CHECK(exit_code(a) == 0);
  bool found = false;
  for (const auto& c : a.checks)
    if (c.name == "P(1,1)[k=(0)]") {
      found = true;
      CHECK(c.lhs == "-1/24");
      CHECK(c.lhs == c.rhs);
    }
  CHECK(found);
  CHECK(report_json(a) == report_json(campaign_elsv(p)));
}

TEST_CASE("hurwitz campaign fills the table and detects conflicts") {
  CampaignParams p;
  p.g = 1;
  p.mu = {2};
  HurwitzTable t;
  const Report r = campaign_hurwitz(p, t);
  CHECK(exit_code(r) == 0);
  CHECK(t.find(1, Partition{2}) == Q("1/2"));
  CHECK(t.entries().at({1, Partition{2}, true}).routes.size() == 4);

  HurwitzTable poisoned;
  poisoned.insert({1, Partition{2}, true, Q("1/3"), Route::character});
  CHECK_THROWS_AS(campaign_hurwitz(p, poisoned), ConflictError);
}

TEST_CASE("campaign dispatch") {
  HurwitzTable t;
  CampaignParams p;
  CHECK(campaign_names().size() == 7);
  CHECK_THROWS_AS(run_campaign("nope", p, t), std::invalid_argument);
  p.g = 0;
  p.n = 2;
  CHECK_THROWS_AS(run_campaign("bm", p, t), std::invalid_argument);
  p.n = 3;
  const Report r = run_campaign("polyfit", p, t);
  CHECK(r.campaign == "polyfit");
  CHECK(exit_code(r) == 0);
  CHECK(selected_pairs(CampaignParams{}).size() == 8);
}

TEST_CASE("curve campaign") {
  HurwitzTable t;
  const Report r = run_campaign("curve", CampaignParams{}, t);
  CHECK(exit_code(r) == 0);
  CHECK(r.count(Status::pass) == r.checks.size());
}
