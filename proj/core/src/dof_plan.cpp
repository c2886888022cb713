// SPDX-License-Identifier: Apache-2.0
#include "aligndof/dof_plan.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace aligndof {

namespace {

constexpr int kMaxStages = 4;

bool subset_feasible_frac(int group, int targets, int bs_ant, const Rational& tx_dim, int subset) {
  if (subset < 0 || subset > group) return false;
  const Rational mid(static_cast<std::int64_t>(targets) * (group - subset) * bs_ant);
  return Rational(group - 1) * tx_dim <= mid && mid < Rational(group) * tx_dim;
}

/// Transmit-direction bound of one user. For a positive subset this is the
/// combinatorial bound over all distinct groups; a zero subset means the
/// directions live in the user's own cross-channel null space, whose
/// dimension caps them regardless of how many systems are formed.
Rational transmit_bound(int users_per_cell, int bs_ant, const Rational& tx_dim, int group,
                        int subset, int targets) {
  if (subset == 0) return tx_dim - Rational(static_cast<std::int64_t>(targets) * bs_ant);
  const std::int64_t combos = binomial(users_per_cell - 1, group - 1);
  const Rational per_system =
      Rational(group) * tx_dim - Rational(static_cast<std::int64_t>(targets) * (group - subset) * bs_ant);
  return Rational(combos) * per_system;
}

struct StageChoice {
  SchemeParams params;
  Rational ici;
};

struct SearchResult {
  Rational per_user;  // sum of stage streams
  std::vector<StageChoice> stages;
};

/// Lexicographic preference for equal totals: smaller group, then fewer
/// targets, then smaller subset, stage by stage; fewer stages break full ties.
bool prefer(const std::vector<StageChoice>& a, const std::vector<StageChoice>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& pa = a[i].params;
    const auto& pb = b[i].params;
    if (pa.group_size != pb.group_size) return pa.group_size < pb.group_size;
    if (pa.target_count != pb.target_count) return pa.target_count < pb.target_count;
    if (pa.subset_size != pb.subset_size) return pa.subset_size < pb.subset_size;
  }
  return a.size() < b.size();
}

SearchResult search_stages(int cells, int users, int bs_ant, const Rational& rx_avail,
                           const Rational& tx_avail, int stage_index) {
  SearchResult best;
  best.per_user = Rational(0);
  if (stage_index > kMaxStages || !rx_avail.is_positive() || !tx_avail.is_positive()) return best;

  for (int targets = 1; targets <= cells - 1; ++targets) {
    for (int group = 1; group <= users; ++group) {
      for (int subset : subset_candidates(group, targets, bs_ant, tx_avail)) {
        const Rational d =
            per_user_dof(cells, users, bs_ant, tx_avail, group, subset, targets, rx_avail);
        if (!d.is_positive()) continue;
        const Rational ici = ici_count(cells, users, d, group, subset, targets);

        SearchResult candidate;
        candidate.per_user = d;
        candidate.stages.push_back({SchemeParams{group, subset, targets, d}, ici});

        const Rational slack = rx_avail - Rational(users) * d - ici;
        if (slack.is_positive()) {
          SearchResult sub =
              search_stages(cells, users, bs_ant, slack, tx_avail - d, stage_index + 1);
          candidate.per_user += sub.per_user;
          for (auto& s : sub.stages) candidate.stages.push_back(std::move(s));
        }

        if (candidate.per_user > best.per_user ||
            (candidate.per_user == best.per_user && !best.stages.empty() &&
             prefer(candidate.stages, best.stages))) {
          best = std::move(candidate);
        }
      }
    }
  }
  return best;
}

}  // namespace

std::vector<int> subset_candidates(int group_size, int target_count, int bs_antennas,
                                   const Rational& tx_dim) {
  std::vector<int> out;
  if (group_size < 1 || target_count < 1 || bs_antennas < 1 || !tx_dim.is_positive()) return out;
  for (int subset = 0; subset <= group_size; ++subset)
    if (subset_feasible_frac(group_size, target_count, bs_antennas, tx_dim, subset))
      out.push_back(subset);
  return out;
}

std::vector<int> subset_candidates(int group_size, int target_count, int bs_antennas,
                                   int user_antennas) {
  return subset_candidates(group_size, target_count, bs_antennas,
                           Rational(static_cast<std::int64_t>(user_antennas)));
}

Rational per_user_dof(int cells, int users_per_cell, int bs_antennas, const Rational& tx_dim,
                      int group_size, int subset_size, int target_count, const Rational& rx_avail) {
  if (!subset_feasible_frac(group_size, target_count, bs_antennas, tx_dim, subset_size))
    fail(Errc::InfeasibleKappa, "subset size " + std::to_string(subset_size) +
                                    " is outside the feasibility window");
  // receive-side budget: rx_avail / (K + K_r*K*subset/group + (L-1-K_r)*K)
  const Rational denom = Rational(users_per_cell) +
                         Rational(static_cast<std::int64_t>(target_count) * users_per_cell) *
                             Rational(subset_size, group_size) +
                         Rational(static_cast<std::int64_t>(cells - 1 - target_count) * users_per_cell);
  const Rational receive_side = rx_avail / denom;
  const Rational transmit_side =
      transmit_bound(users_per_cell, bs_antennas, tx_dim, group_size, subset_size, target_count);
  return Rational::min(receive_side, transmit_side);
}

Rational ici_count(int cells, int users_per_cell, const Rational& streams, int group_size,
                   int subset_size, int target_count) {
  const Rational aligned = Rational(static_cast<std::int64_t>(target_count) * users_per_cell) *
                           streams * Rational(subset_size, group_size);
  const Rational untouched =
      Rational(static_cast<std::int64_t>(cells - 1 - target_count) * users_per_cell) * streams;
  return aligned + untouched;
}

Plan make_plan(const NetworkConfig& config) {
  make_config(config.cells, config.users_per_cell, config.bs_antennas, config.user_antennas);
  Plan plan;
  plan.config = config;

  const int cells = config.cells;
  const int users = config.users_per_cell;
  const Rational rx0(config.bs_antennas);
  const Rational tx0(config.user_antennas);

  if (cells == 1) {
    // No interference anywhere: split the receive space and cap by antennas.
    const Rational d = Rational::min(Rational(config.bs_antennas, users), tx0);
    plan.interference_free = true;
    plan.stages.push_back({SchemeParams{1, 1, 0, d}, Rational(0), rx0, tx0, false});
    plan.per_user = d;
    plan.total = Rational(static_cast<std::int64_t>(cells) * users) * d;
    plan.ici_total = Rational(0);
    plan.rx_left = rx0 - Rational(users) * d;
    plan.tx_left = tx0 - d;
    plan.extension_factor = d.den();
    return plan;
  }

  SearchResult best = search_stages(cells, users, config.bs_antennas, rx0, tx0, 1);
  if (best.stages.empty()) fail(Errc::NoFeasiblePlan, "no parameter choice yields positive DoF");

  Rational rx = rx0;
  Rational tx = tx0;
  std::int64_t ext = 1;
  plan.per_user = Rational(0);
  plan.ici_total = Rational(0);
  for (std::size_t i = 0; i < best.stages.size(); ++i) {
    const auto& chosen = best.stages[i];
    plan.stages.push_back({chosen.params, chosen.ici, rx, tx, i >= 2});
    plan.per_user += chosen.params.streams;
    plan.ici_total += chosen.ici;
    rx -= Rational(users) * chosen.params.streams + chosen.ici;
    tx -= chosen.params.streams;
    ext = lcm_checked(ext, chosen.params.streams.den());
  }
  plan.total = Rational(static_cast<std::int64_t>(cells) * users) * plan.per_user;
  plan.rx_left = rx;
  plan.tx_left = tx;
  plan.extension_factor = ext;
  return plan;
}

Rational upper_bound(int cells, int bs_antennas, int user_antennas) {
  const std::int64_t lm = static_cast<std::int64_t>(cells) * bs_antennas;
  if (lm <= user_antennas)
    fail(Errc::DegenerateBound, "upper bound needs cells * bs_antennas > user_antennas");
  return Rational(lm * bs_antennas, lm - user_antennas);
}

const char* region_name(Region r) {
  switch (r) {
    case Region::Region1: return "Region1";
    case Region::Region2: return "Region2";
    case Region::Undefined: return "Undefined";
  }
  return "Undefined";
}

BaselineTable baseline_dofs(const NetworkConfig& config) {
  make_config(config.cells, config.users_per_cell, config.bs_antennas, config.user_antennas);
  const std::int64_t l = config.cells;
  const std::int64_t k = config.users_per_cell;
  const std::int64_t m = config.bs_antennas;
  const std::int64_t n = config.user_antennas;

  BaselineTable table;
  table.cos_dof = Rational(std::min(m, l * k * n));
  if (l == 2) {
    const Rational cap(k * m, k + 1);
    table.lee = Rational(n) <= cap ? Rational(2 * n) : Rational(2) * cap;
  }
  if (l * k >= 2) {
    const Rational first(m, l * k - 1);
    const Rational second(l * (k * n - m));
    table.lcell = Rational(l * k) * Rational::max(Rational(0), Rational::min(first, second));
  }
  return table;
}

BoundsReport optimal_bounds(const NetworkConfig& config) {
  make_config(config.cells, config.users_per_cell, config.bs_antennas, config.user_antennas);
  const std::int64_t l = config.cells;
  const std::int64_t k = config.users_per_cell;
  const std::int64_t m = config.bs_antennas;
  const std::int64_t n = config.user_antennas;

  BoundsReport report;
  if (l * m > n) report.upper = upper_bound(config.cells, config.bs_antennas, config.user_antennas);
  report.decom = Rational(l * k * m * n, m + n);
  report.proper = Rational(l * k * (m + n), l * k + 1);

  const std::int64_t disc = (l - 1) * (l - 1) * k * k - 4 * k;
  if (disc >= 0) {
    const double root = std::sqrt(static_cast<double>(disc));
    report.split_low = (static_cast<double>((l - 1) * k) - root) / 2.0;
    report.split_high = (static_cast<double>((l - 1) * k) + root) / 2.0;
  } else {
    report.split_low = std::numeric_limits<double>::quiet_NaN();
    report.split_high = std::numeric_limits<double>::quiet_NaN();
  }

  const bool applicable = (l == 2 && k >= 4) || l >= 3;
  if (!applicable || disc < 0) {
    report.region = Region::Undefined;
  } else if (disc == 0) {
    report.region = Region::Region2;  // the split interval is empty
  } else {
    report.region = report.proper < report.decom ? Region::Region1 : Region::Region2;
  }

  const BaselineTable table = baseline_dofs(config);
  report.cos_dof = table.cos_dof;
  report.lee = table.lee;
  report.lcell = table.lcell;
  return report;
}

}  // namespace aligndof
