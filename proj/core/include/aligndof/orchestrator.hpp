// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "aligndof/dof_plan.hpp"
#include "aligndof/ia_system.hpp"
#include "aligndof/network.hpp"

namespace aligndof {

/// Cyclic target assignment: cell l targets BSs l+1, ..., l+targets_per_cell
/// (mod cells, 1-based). Every BS is then targeted by exactly
/// targets_per_cell cells.
std::vector<std::vector<int>> assign_targets(int cells, int targets_per_cell);

/// How one cell's users are covered by alignment systems: which user subsets
/// to form and, per drawn null vector, which members actually transmit it.
struct CoverageSystem {
  std::vector<int> users;                   // subset members, 1-based within the cell
  std::vector<std::vector<int>> draw_takers;  // per drawn vector, the members using it
};

/// Pure combinatorial allotment. Every user ends up with exactly `streams`
/// directions, no system draws more than `per_system_cap` vectors, and full
/// draws (all members taking) are preferred so the measured interference
/// stays at the accounted level.
std::vector<CoverageSystem> plan_cell_coverage(int users_per_cell, int group_size, int streams,
                                               int per_system_cap);

/// Provenance of one solved system inside a network design.
struct SystemRecord {
  int stage = 1;
  int cell = 0;
  std::vector<int> users;    // 1-based within the cell
  std::vector<int> targets;  // BS ids
  std::uint64_t coeff_seed = 0;
  std::vector<std::vector<int>> draw_takers;
};

/// The per-cell stage-1 systems for one cell of a plan, already assembled
/// against the channel. Thin wrapper used by design_network and exposed for
/// inspection.
struct CellSystem {
  IASystem system;
  SystemRecord record;
};

std::vector<CellSystem> build_cell_systems(const NetworkConfig& config, const Plan& plan, int cell,
                                           const ChannelRealization& channel, std::uint64_t seed);

struct NetworkDesign {
  NetworkConfig config;
  Plan plan;
  std::uint64_t channel_seed = 0;
  std::uint64_t design_seed = 0;
  std::vector<int> stage_streams;   // integer streams realized per stage
  int total_streams = 0;            // sum of stage_streams
  std::vector<CMatrix> precoders;   // (cell-1)*users_per_cell + (user-1)
  std::vector<SystemRecord> systems;
  bool control = false;             // true for random-precoder control designs

  const CMatrix& precoder(int cell, int user) const;  // 1-based
};

/// Applies the plan on a concrete channel: assigns targets, builds and solves
/// the covering systems per cell, then repeats on effective channels for the
/// second stage. Fractional stage DoF is floored; a stage-1 floor of zero is
/// rejected.
NetworkDesign design_network(const NetworkConfig& config, const ChannelRealization& channel,
                             const Plan& plan, std::uint64_t design_seed, const Tolerance& tol = {});

/// Control design with random unit-norm precoders (no alignment); used to
/// show the verifier catches misalignment.
NetworkDesign make_random_design(const NetworkConfig& config, int streams, std::uint64_t design_seed);

struct BsVerification {
  int desired_dim = 0;
  int ici_dim = 0;
  bool decodable = false;
};

struct VerificationReport {
  std::vector<BsVerification> per_bs;
  std::vector<int> precoder_rank;  // (cell-1)*users_per_cell + (user-1)
  Rational predicted_ici;          // per-BS prediction for the realized integer streams
  Rational planned_ici;            // the plan's own (possibly fractional) prediction
  bool pass = false;
};

VerificationReport verify_design(const NetworkConfig& config, const ChannelRealization& channel,
                                 const NetworkDesign& design, const Tolerance& tol = {});

/// Randomized restatement of the span-collapse property: matrices tied by
/// i.i.d. vanishing combinations span at most free_count * rank dimensions,
/// with generic equality min(free_count * rank, rows).
bool span_collapse_check(int total_count, int free_count, int rank, int rows, int cols,
                  std::uint64_t seed, const Tolerance& tol = {});

/// Randomized restatement of the coefficient-matrix rank property: the stacked
/// system built from fresh generic channels has full rank
/// min(targets*(group-subset)*rx_antennas, group*tx_antennas), provided
/// tx_antennas <= targets * rx_antennas.
bool stacked_rank_check(int group_size, int subset_size, int target_count, int rx_antennas,
                  int tx_antennas, std::uint64_t seed, const Tolerance& tol = {});

}  // namespace aligndof
