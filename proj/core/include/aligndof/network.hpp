// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "aligndof/errors.hpp"
#include "aligndof/subspace.hpp"

namespace aligndof {

/// Uplink topology: `cells` base stations, each serving `users_per_cell`
/// users; every BS has `bs_antennas` receive antennas and every user has
/// `user_antennas` transmit antennas.
struct NetworkConfig {
  int cells = 0;           // L
  int users_per_cell = 0;  // K
  int bs_antennas = 0;     // receive antennas per BS
  int user_antennas = 0;   // transmit antennas per user
};

/// Validates and returns a config; rejects non-positive dimensions.
NetworkConfig make_config(int cells, int users_per_cell, int bs_antennas, int user_antennas);

/// One seeded Rayleigh draw of all cells x cells x users channel matrices.
/// Entries are i.i.d. CN(0, 1); the draw is a pure function of (config, seed).
class ChannelRealization {
 public:
  ChannelRealization(NetworkConfig config, std::uint64_t seed, std::vector<CMatrix> matrices);

  const NetworkConfig& config() const noexcept { return config_; }
  std::uint64_t seed() const noexcept { return seed_; }

  /// Channel between BS `bs` and user `user` of cell `cell` (all 1-based).
  const CMatrix& at(int bs, int cell, int user) const;

  std::size_t matrix_count() const noexcept { return matrices_.size(); }

 private:
  NetworkConfig config_;
  std::uint64_t seed_ = 0;
  std::vector<CMatrix> matrices_;  // ((bs-1)*L + (cell-1))*K + (user-1)
};

ChannelRealization sample_channel(const NetworkConfig& config, std::uint64_t seed);

}  // namespace aligndof
