#include "hurwitzlab/campaigns.hpp"

#include "hurwitzlab/bm.hpp"
#include "hurwitzlab/fock.hpp"
#include "hurwitzlab/hodge.hpp"
#include "hurwitzlab/lambert.hpp"
#include "hurwitzlab/partitions.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hurwitzlab {

namespace {

std::string pair_label(int g, int n) { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }

std::string mu_label(const std::vector<int>& mu) {
  std::string s = "(";
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i]);
  return s + ")";
}

Status from_report(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return Status::pass;
    case CheckStatus::fail: return Status::fail;
    case CheckStatus::inconclusive: return Status::inconclusive;
  }
  return Status::inconclusive;
}

nlohmann::ordered_json base_parameters(const CampaignParams& p) {
  nlohmann::ordered_json j;
  j["g"] = p.g ? nlohmann::ordered_json(*p.g) : nlohmann::ordered_json(nullptr);
  j["n"] = p.n ? nlohmann::ordered_json(*p.n) : nlohmann::ordered_json(nullptr);
  j["mu"] = p.mu;
  j["grid"] = p.grid;
  j["holdout"] = p.holdout;
  j["x_order"] = p.x_order;
  j["order"] = p.order;
  return j;
}

int grid_for(const CampaignParams& p, int g, int n) { return p.grid > 0 ? p.grid : default_grid_side(g, n); }

// Rational a^e for integer a > 0 and any integer e.
Rational int_power(int a, int e) {
  const Rational r = pow(Rational(a), static_cast<unsigned>(e < 0 ? -e : e));
  return e < 0 ? Rational(1) / r : r;
}

void hurwitz_single(const CampaignParams& p, HurwitzTable& table, Report& rep) {
  const int g = *p.g;
  const Partition mu(p.mu);
  const int d = std::accumulate(p.mu.begin(), p.mu.end(), 0);
  const int b = branch_count(g, mu);
  const std::string label = "h[" + std::to_string(g) + ";" + mu_label(mu.parts()) + "]";
  const Rational ch = h_connected(g, mu);
  table.insert({g, mu, true, ch, Route::character});
  rep.add({label + " character", "Hurwitz number", Status::pass, to_string(ch), to_string(ch)});
  if (d <= 10 && b <= 16) {
    const CutJoinTable cj = cut_and_join_evolve(d, b);
    auto disc = [&cj](int bb, const Partition& m) { return cj.value(bb, m); };
    const Rational v = connected_from_disconnected(g, mu.parts(), disc);
    table.insert({g, mu, true, v, Route::cut_join});
    rep.add(compare(label + " cut-join", "three-route equality", v, ch));
  }
  if (d <= 7 && b <= 8) {
    const Rational v = h_bruteforce(g, mu);
    table.insert({g, mu, true, v, Route::brute});
    rep.add(compare(label + " brute force", "three-route equality", v, ch));
  }
  if (d <= 6 && b <= 6) {
    const Rational v = hurwitz_from_correlator(g, mu.parts());
    table.insert({g, mu, true, v, Route::fock});
    rep.add(compare(label + " Fock correlator", "Fock route", v, ch));
  }
}

void hurwitz_sweep(HurwitzTable& table, Report& rep) {
  const int d_max = 6, b_max = 8;
  const CutJoinTable cj = cut_and_join_evolve(d_max, b_max);
  for (int d = 1; d <= d_max; ++d)
    for (const Partition& mu : enumerate_partitions(d))
      for (int b = 0; b <= b_max; ++b) {
        const auto g = genus_from_b(b, mu);
        if (!g) continue;
        const std::string label = "h[b=" + std::to_string(b) + ";" + mu_label(mu.parts()) + "]";
        const Rational ch = h_disconnected_char_b(b, mu);
        const BruteForceCounts bf = h_bruteforce_both(*g, mu);
        const Rational cut = cj.value(b, mu);
        table.insert({*g, mu, false, ch, Route::character});
        table.insert({*g, mu, false, cut, Route::cut_join});
        table.insert({*g, mu, false, bf.disconnected, Route::brute});
        const bool agree = ch == cut && ch == bf.disconnected;
        rep.add({label + " disconnected", "three-route equality", agree ? Status::pass : Status::fail, to_string(ch),
                 to_string(cut) + " | " + to_string(bf.disconnected)});
        if (*g < 0) continue;
        const Rational cc = h_connected(*g, mu);
        table.insert({*g, mu, true, cc, Route::character});
        table.insert({*g, mu, true, bf.connected, Route::brute});
        rep.add(compare(label + " connected", "three-route equality", bf.connected, cc));
      }
  rep.add(compare("h[1;(2)]", "spot value", h_connected(1, Partition{2}), Rational(1, 2)));
  rep.add(compare("h[0;(1,1,1)]", "spot value", h_connected(0, Partition{1, 1, 1}), Rational(24)));
  for (int a = 1; a <= 6; ++a)
    rep.add(compare("h[0;(" + std::to_string(a) + ")]", "spot value a^(a-3)", h_connected(0, Partition{a}),
                    int_power(a, a - 3)));
}

}  // namespace

const std::vector<std::pair<int, int>>& default_pairs() {
  static const std::vector<std::pair<int, int>> pairs{{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}};
  return pairs;
}

std::vector<std::pair<int, int>> selected_pairs(const CampaignParams& p) {
  if (p.g && p.n) {
    if (2 * *p.g - 2 + *p.n <= 0) throw std::invalid_argument("(g, n) must be stable: 2g - 2 + n > 0");
    return {{*p.g, *p.n}};
  }
  return default_pairs();
}

Report campaign_hurwitz(const CampaignParams& p, HurwitzTable& table) {
  Report rep;
  rep.campaign = "hurwitz";
  rep.parameters = base_parameters(p);
  if (p.g && !p.mu.empty()) {
    if (*p.g < 0) throw std::invalid_argument("genus must be >= 0");
    for (int m : p.mu)
      if (m <= 0) throw std::invalid_argument("parts of mu must be positive");
    hurwitz_single(p, table, rep);
  } else {
    hurwitz_sweep(table, rep);
  }
  return rep;
}

Report campaign_polyfit(const CampaignParams& p) {
  Report rep;
  rep.campaign = "polyfit";
  rep.parameters = base_parameters(p);
  for (auto [g, n] : selected_pairs(p)) {
    const std::string label = "P" + pair_label(g, n);
    try {
      const PolyFit f = fit_P_polynomial(g, n, grid_for(p, g, n), p.holdout);
      rep.add({label + " holdout", "polynomiality", Status::pass, f.P.to_string("mu"),
               std::to_string(f.points_checked) + " grid points + " + std::to_string(f.holdout_points.size()) +
                   " holdout points"});
      rep.add(boolean_check(label + " symmetric", "polynomiality", f.symmetric));
      rep.add(boolean_check(label + " degree <= 3g-3+n", "polynomiality", f.degree_ok));
    } catch (const InterpolationError& e) {
      rep.add({label + " holdout", "polynomiality", Status::fail, "interpolation", e.what()});
    }
  }
  return rep;
}

Report campaign_bm(const CampaignParams& p) {
  Report rep;
  rep.campaign = "bm";
  rep.parameters = base_parameters(p);
  WTable T;
  for (auto [g, n] : selected_pairs(p)) {
    const std::string label = "W" + pair_label(g, n);
    const BmStepReport s = T.step_report(g, n);
    const MultiPoly& w = T.get(g, n);
    rep.add(boolean_check(label + " residue forms agree", "recursion", s.forms_agree));
    rep.add({label + " truncation stable", "recursion", s.stable ? Status::pass : Status::inconclusive,
             "working order", "working order + 4"});
    const ShapeReport sh = w_shape(w, g, n);
    rep.add(boolean_check(label + " symmetric", "recursion shape", sh.symmetric));
    rep.add(boolean_check(label + " degree bound", "recursion shape", sh.degree_ok));
    rep.add(boolean_check(label + " divisible by t_i^2", "recursion shape", sh.divisible));
    rep.add(boolean_check(label + " odd pole at the branch point", "recursion shape", sh.odd_pole));
    const BmHurwitzReport hx = bm_vs_hurwitz(w, g, n, p.x_order);
    rep.add(boolean_check(label + " x-expansion vs Hurwitz", "x-expansion", hx.passed(),
                          std::to_string(hx.coefficients_checked - hx.mismatches) + "/" +
                              std::to_string(hx.coefficients_checked) + " coefficients equal",
                          hx.first_mismatch.empty() ? "all equal" : hx.first_mismatch));
    const CutJoinReport cj = cutjoin_t_check(g, n);
    rep.add(boolean_check(label + " cut-and-join in t", "cut-and-join", cj.holds, std::to_string(cj.lhs_degree),
                          cj.detail.empty() ? "holds" : cj.detail));
  }
  const MultiPoly t0 = MultiPoly::variable(0);
  for (auto [g, n] : selected_pairs(p)) {
    if (g == 1 && n == 1) {
      const MultiPoly expect = (t0.pow(5) * -3 - t0.pow(4) * 5 - t0.pow(3) + t0.pow(2)) * Rational(1, 24);
      rep.add(boolean_check("W(1,1) closed form", "recursion", T.get(1, 1) == expect, T.get(1, 1).to_string(),
                            expect.to_string()));
    }
    if (g == 0 && n == 3) {
      MultiPoly expect(-1);
      for (int i = 0; i < 3; ++i) {
        const MultiPoly t = MultiPoly::variable(i);
        expect = expect * t * t * (t + 1);
      }
      rep.add(boolean_check("W(0,3) closed form", "recursion", T.get(0, 3) == expect, T.get(0, 3).to_string(),
                            expect.to_string()));
    }
  }
  return rep;
}

Report campaign_elsv(const CampaignParams& p) {
  Report rep;
  rep.campaign = "elsv";
  rep.parameters = base_parameters(p);
  rep.add(compare("<Lambda tau_0>_1", "sign calibration", hodge_integral(1, {0}), Rational(-1, 24)));
  rep.add(compare("<Lambda tau_1>_1", "sign calibration", hodge_integral(1, {1}), Rational(1, 24)));
  for (auto [g, n] : selected_pairs(p)) {
    const std::string label = "P" + pair_label(g, n);
    PolyFit fit;
    try {
      fit = fit_P_polynomial(g, n, grid_for(p, g, n), p.holdout);
    } catch (const InterpolationError& e) {
      rep.add({label + " fit", "ELSV", Status::fail, "interpolation", e.what()});
      continue;
    }
    rep.add({label + " fit", "ELSV", Status::pass, fit.P.to_string("mu"), elsv_polynomial(g, n).to_string("mu")});
    const int D = 3 * g - 3 + n;
    std::vector<int> k(static_cast<std::size_t>(n), 0);
    // Every exponent vector with |k| <= D, in lexicographic order.
    while (true) {
      if (std::accumulate(k.begin(), k.end(), 0) <= D) {
        Exponents e = k;
        while (!e.empty() && e.back() == 0) e.pop_back();
        std::string name = label + "[k=" + mu_label(k) + "]";
        rep.add(compare(name, "ELSV", fit.P.coefficient(e), hodge_integral(g, k)));
      }
      int i = n - 1;
      while (i >= 0 && k[static_cast<std::size_t>(i)] == D) k[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++k[static_cast<std::size_t>(i)];
    }
    bool in_range = true;
    for (const auto& [e, c] : fit.P.terms()) in_range = in_range && std::accumulate(e.begin(), e.end(), 0) <= D;
    rep.add(boolean_check(label + " no monomials above degree 3g-3+n", "ELSV", in_range));
  }
  return rep;
}

Report campaign_fock(const CampaignParams& p, HurwitzTable& table) {
  Report rep;
  rep.campaign = "fock";
  rep.parameters = base_parameters(p);
  for (int d = 1; d <= 6; ++d)
    for (const Partition& mu : enumerate_partitions(d))
      for (int b = 0; b <= 6; ++b) {
        const auto g = genus_from_b(b, mu);
        if (!g) continue;
        const Rational v = vev_hurwitz(*g, mu, d);
        const Rational v2 = vev_hurwitz(*g, mu, d + 2);
        table.insert({*g, mu, false, v, Route::fock});
        const std::string label = "vev[b=" + std::to_string(b) + ";" + mu_label(mu.parts()) + "]";
        if (v != v2)
          rep.add({label, "Fock route", Status::inconclusive, "cutoff " + std::to_string(d) + ": " + to_string(v),
                   "cutoff " + std::to_string(d + 2) + ": " + to_string(v2)});
        else
          rep.add(compare(label, "Fock route", v, h_disconnected_char_b(b, mu)));
      }
  for (int z = 1; z <= 6; ++z) {
    const StableCorrelator s = a_correlator_stable({z}, 1);
    const std::string label = "<A(" + std::to_string(z) + ",u" + std::to_string(z) + ")>";
    if (!s.stable) {
      rep.add({label, "one-point correlator", Status::inconclusive, "cutoff " + std::to_string(s.cutoff_low),
               "cutoff " + std::to_string(s.cutoff_high)});
      continue;
    }
    rep.add(compare(label + " [u^-1]", "one-point correlator", s.value.coefficient(-1), Rational(1, z)));
    rep.add(compare(label + " [u^0]", "one-point correlator", s.value.coefficient(0), Rational(0)));
    rep.add(compare(label + " [u^1]", "one-point correlator", s.value.coefficient(1), make_rational(z * (z - 1), 24)));
  }
  for (int k = -3; k <= 3; ++k)
    for (int l = -3; l <= 3; ++l) {
      const CommutatorReport c = a_commutator_check(k, l, 2, 6);
      std::ostringstream cut;
      for (std::size_t i = 0; i < c.cutoffs.size(); ++i) cut << (i ? "," : "") << c.cutoffs[i];
      rep.add({"[A_" + std::to_string(k) + ",A_" + std::to_string(l) + "]", "A-commutator", from_report(c.status),
               std::to_string(c.states_checked) + " states, cutoffs " + cut.str(),
               (k + l == 1) ? std::string(l % 2 == 0 ? "1" : "-1") : std::string("0")});
    }
  for (const auto& mu : std::vector<std::vector<int>>{{2}, {3}, {1, 1}, {2, 1}, {3, 2}})
    for (int g = 0; g <= 1; ++g) {
      const Partition m(mu);
      if (branch_count(g, m) > 6) continue;
      const Rational v = hurwitz_from_correlator(g, mu);
      table.insert({g, m, true, v, Route::fock});
      rep.add(compare("h[" + std::to_string(g) + ";" + mu_label(mu) + "] from A-correlators", "Fock route", v,
                      h_connected(g, m)));
    }
  return rep;
}

Report campaign_curve(const CampaignParams& p) {
  Report rep;
  rep.campaign = "curve";
  rep.parameters = base_parameters(p);
  const QSeries s = sigma_series(6);
  const std::vector<Rational> sig{-1, Rational(2, 3), Rational(-4, 9), Rational(44, 135), Rational(-104, 405),
                                  Rational(40, 189)};
  for (int k = 1; k <= 6; ++k)
    rep.add(compare("sigma[z^" + std::to_string(k) + "]", "deck involution", s[k], sig[static_cast<std::size_t>(k - 1)]));
  const QLaurent st = sigma_t_series(4);
  const std::vector<std::pair<int, Rational>> sigt{{-1, Rational(-1)},     {0, Rational(-2, 3)},   {1, Rational(0)},
                                                   {2, Rational(-4, 135)}, {3, Rational(8, 405)}, {4, Rational(-8, 567)}};
  for (const auto& [k, v] : sigt)
    rep.add(compare("sigma~[t^" + std::to_string(k) + "]", "deck involution, t chart", st.coefficient(k), v));
  const int order = std::max(p.order, 8);
  const QSeries rh = r_hodge(order), rc = r_from_curve(order);
  for (int k = 1; k <= order; ++k)
    rep.add(compare("R[z^" + std::to_string(k) + "]", "R-matrix from the curve", rc[k], rh[k]));
  rep.add(compare("R[z^1] printed", "R-matrix", rh[1], Rational(1, 12)));
  rep.add(compare("R[z^2] printed", "R-matrix", rh[2], Rational(1, 288)));
  rep.add(compare("R[z^3] printed", "R-matrix", rh[3], Rational(-139, 51840)));
  const RhoPairReport l2 = rho_pair_check(6, 12);
  for (const auto& row : l2.rows)
    rep.add(boolean_check("rho_" + std::to_string(row.k) + "(t) + rho_" + std::to_string(row.k) + "(sigma~(t))",
                          "holomorphic at the branch point", row.holomorphic, "constant " + to_string(row.constant_term),
                          "no polar part"));
  rep.add({"rho_k + rho_k o sigma~ truncation", "holomorphic at the branch point",
           l2.stable ? Status::pass : Status::inconclusive, "order 12", "order 16"});
  const BergmanReport b = bergman_compat_check();
  rep.add(boolean_check("Bergman compatibility", "Bergman kernel", b.identity_holds));
  rep.add(boolean_check("Bergman compatibility symmetric", "Bergman kernel", b.symmetric));
  rep.add(boolean_check("Bergman compatibility at y2 = 2 y1", "Bergman kernel", b.specialization_holds));
  const PSeries k1 = kernel_K(6), k2 = kernel_K_difference_form(6);
  rep.add(boolean_check("kernel: difference form = -closed form", "recursion kernel", k2 == -k1));
  return rep;
}

Report campaign_all(const CampaignParams& p, HurwitzTable& table) {
  Report rep;
  rep.campaign = "all";
  rep.parameters = base_parameters(p);
  CampaignParams q = p;
  q.mu.clear();
  rep.append(campaign_hurwitz(q, table));
  rep.append(campaign_polyfit(p));
  rep.append(campaign_bm(p));
  rep.append(campaign_elsv(p));
  rep.append(campaign_fock(p, table));
  rep.append(campaign_curve(p));
  return rep;
}

std::vector<std::string> campaign_names() { return {"hurwitz", "polyfit", "bm", "elsv", "fock", "curve", "all"}; }

Report run_campaign(const std::string& name, const CampaignParams& p, HurwitzTable& table) {
  if (name == "hurwitz") return campaign_hurwitz(p, table);
  if (name == "polyfit") return campaign_polyfit(p);
  if (name == "bm") return campaign_bm(p);
  if (name == "elsv") return campaign_elsv(p);
  if (name == "fock") return campaign_fock(p, table);
  if (name == "curve") return campaign_curve(p);
  if (name == "all") return campaign_all(p, table);
  throw std::invalid_argument("unknown campaign: " + name);
}

}  // namespace hurwitzlab
