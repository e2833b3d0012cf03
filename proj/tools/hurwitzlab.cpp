// hurwitzlab command line: runs one campaign and emits its report.
//
// Exit status: 0 all checks pass, 1 a check failed (or the cache conflicts),
// 2 inconclusive (truncation did not stabilize), 64 usage error.

#include "hurwitzlab/campaigns.hpp"
#include "hurwitzlab/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace hurwitzlab;

namespace {

struct Options {
  CampaignParams params;
  int g = -1;
  int n = -1;
  std::string cache;
  std::string format = "json";
  std::string output = "-";
};

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--g", o.g, "genus")->check(CLI::NonNegativeNumber);
  sub->add_option("--n", o.n, "number of points")->check(CLI::PositiveNumber);
  sub->add_option("--mu", o.params.mu, "profile, comma separated")->delimiter(',');
  sub->add_option("--grid", o.params.grid, "fit grid side (0: default)")->check(CLI::NonNegativeNumber);
  sub->add_option("--holdout", o.params.holdout, "extra verification points")->check(CLI::NonNegativeNumber);
  sub->add_option("--x-order", o.params.x_order, "per-variable x-order of the expansion check")
      ->check(CLI::PositiveNumber);
  sub->add_option("--order", o.params.order, "series order")->check(CLI::PositiveNumber);
  sub->add_option("--cache", o.cache, "Hurwitz cache file (HURWITZLAB_CACHE overrides)");
  sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output", o.output, "report path, - for stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for simple Hurwitz numbers, the Lambert-curve recursion and Hodge integrals"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> subs{
      {"hurwitz", "Hurwitz numbers by every route; with --g and --mu prints the value"},
      {"polyfit", "polynomial fits of h/prefactor with holdout verification"},
      {"bm", "recursion on the Lambert curve against Hurwitz data"},
      {"elsv", "fitted polynomials against Hodge integrals"},
      {"fock", "semi-infinite wedge route and A-operator checks"},
      {"curve", "deck involution, R-matrix and Bergman checks"},
      {"all", "every campaign"}};
  for (const auto& [name, help] : subs) add_common(app.add_subcommand(name, help), o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }
  const std::string campaign = app.get_subcommands().front()->get_name();
  if (o.g >= 0) o.params.g = o.g;
  if (o.n >= 0) o.params.n = o.n;
  if (const char* env = std::getenv("HURWITZLAB_CACHE"); env && *env) o.cache = env;

  try {
    HurwitzTable table = o.cache.empty() ? HurwitzTable{} : load_cache(o.cache);
    const Report rep = run_campaign(campaign, o.params, table);
    if (!o.cache.empty()) save_cache(table, o.cache);

    const std::string text = o.format == "csv" ? report_csv(rep) : report_json(rep);
    if (campaign == "hurwitz" && o.params.g && !o.params.mu.empty())
      std::cout << to_string(*table.find(*o.params.g, Partition(o.params.mu))) << '\n';
    if (o.output == "-") {
      std::cout << text;
    } else {
      std::ofstream out(o.output, std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write " + o.output);
      out << text;
    }
    std::cerr << rep.campaign << ": " << rep.count(Status::pass) << " pass, " << rep.count(Status::fail) << " fail, "
              << rep.count(Status::inconclusive) << " inconclusive\n";
    return exit_code(rep);
  } catch (const ConflictError& e) {
    std::cerr << "cache conflict: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
