#pragma once

// Campaign drivers: each runs a family of exact checks and returns a Report.

#include "hurwitzlab/hurwitz.hpp"
#include "hurwitzlab/report.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hurwitzlab {

struct CampaignParams {
  std::optional<int> g;
  std::optional<int> n;
  std::vector<int> mu;  ///< empty: sweep
  int grid = 0;         ///< 0: default_grid_side(g, n)
  int holdout = 2;
  int x_order = 6;
  int order = 12;
};

/// (0,3), (0,4), (0,5), (1,1), (1,2), (1,3), (2,1), (2,2).
const std::vector<std::pair<int, int>>& default_pairs();
/// The single (g, n) from the parameters when both are given, else default_pairs().
std::vector<std::pair<int, int>> selected_pairs(const CampaignParams& p);

/// With g and mu: the value by every applicable route. Otherwise the
/// three-route sweep over |mu| <= 6, b <= 8. Values go into `table`.
Report campaign_hurwitz(const CampaignParams& p, HurwitzTable& table);
Report campaign_polyfit(const CampaignParams& p);
Report campaign_bm(const CampaignParams& p);
Report campaign_elsv(const CampaignParams& p);
Report campaign_fock(const CampaignParams& p, HurwitzTable& table);
Report campaign_curve(const CampaignParams& p);
Report campaign_all(const CampaignParams& p, HurwitzTable& table);

std::vector<std::string> campaign_names();
/// Dispatch by name; throws std::invalid_argument for an unknown name.
Report run_campaign(const std::string& name, const CampaignParams& p, HurwitzTable& table);

}  // namespace hurwitzlab
