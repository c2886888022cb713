// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aligndof/network.hpp"
#include "aligndof/rational.hpp"

namespace aligndof {

/// One stage's alignment parameters: interference from `group_size` users of
/// a cell is compressed to `subset_size` users' worth at `target_count`
/// neighbouring BSs, giving each user `streams` DoF.
struct SchemeParams {
  int group_size = 0;
  int subset_size = 0;
  int target_count = 0;
  Rational streams;
};

struct PlanStage {
  SchemeParams params;
  Rational ici;       // per-BS interference dimensions contributed by this stage
  Rational rx_avail;  // receive dimensions available entering the stage
  Rational tx_avail;  // transmit dimensions available entering the stage
  bool extrapolated = false;  // stages beyond the second
};

/// Planner output: the stage sequence maximizing the network DoF, all values
/// exact rationals.
struct Plan {
  NetworkConfig config;
  std::vector<PlanStage> stages;  // at least one
  bool interference_free = false;  // single-cell degenerate case
  Rational per_user;               // sum of stage streams
  Rational total;                  // network DoF: cells * users_per_cell * per_user
  Rational ici_total;              // per-BS interference dimensions, all stages
  Rational rx_left;                // receive dimensions unused after the last stage
  Rational tx_left;                // transmit dimensions unused after the last stage
  std::int64_t extension_factor = 1;  // lcm of stream denominators

  const PlanStage& stage1() const { return stages.front(); }
  const PlanStage* stage2() const { return stages.size() > 1 ? &stages[1] : nullptr; }
};

/// All subset sizes in [0, group_size] inside the feasibility window, ascending.
/// Empty result means the (group, targets) pair is infeasible.
std::vector<int> subset_candidates(int group_size, int target_count, int bs_antennas,
                                   int user_antennas);
std::vector<int> subset_candidates(int group_size, int target_count, int bs_antennas,
                                   const Rational& tx_dim);

/// Per-user DoF: min of the receive-side budget and the transmit-direction
/// bound, exact. `tx_dim` and `rx_avail` may be fractional in later stages.
Rational per_user_dof(int cells, int users_per_cell, int bs_antennas, const Rational& tx_dim,
                      int group_size, int subset_size, int target_count, const Rational& rx_avail);

/// Per-BS interference dimensions: aligned share from targeted cells plus the
/// untouched share from cells that do not target this BS.
Rational ici_count(int cells, int users_per_cell, const Rational& streams, int group_size,
                   int subset_size, int target_count);

/// Exhaustive parameter search with the enhancement recursion (capped at four
/// stages); returns the plan with the largest total DoF.
Plan make_plan(const NetworkConfig& config);

/// L*M_r^2 / (L*M_r - N_t); throws Errc::DegenerateBound when L*M_r <= N_t.
Rational upper_bound(int cells, int bs_antennas, int user_antennas);

enum class Region { Region1, Region2, Undefined };

const char* region_name(Region r);

/// Closed-form baselines and optimality bounds for one configuration.
struct BoundsReport {
  std::optional<Rational> upper;  // absent when cells * bs_antennas <= user_antennas
  Rational decom;                 // decomposition-based optimum component
  Rational proper;                // properness-based bound
  double split_low = 0.0;         // lower antenna-ratio split point (NaN when complex)
  double split_high = 0.0;        // upper antenna-ratio split point
  Region region = Region::Undefined;
  Rational cos_dof;                // coordinated orthogonal scheme
  std::optional<Rational> lee;     // two-cell scheme, absent unless cells == 2
  std::optional<Rational> lcell;   // L-cell scheme, absent when cells*users == 1
};

BoundsReport optimal_bounds(const NetworkConfig& config);

struct BaselineTable {
  Rational cos_dof;
  std::optional<Rational> lee;
  std::optional<Rational> lcell;
};

BaselineTable baseline_dofs(const NetworkConfig& config);

}  // namespace aligndof
