// SPDX-License-Identifier: Apache-2.0
#include "aligndof/network.hpp"

#include <string>
#include <utility>

#include "aligndof/rng.hpp"

namespace aligndof {

NetworkConfig make_config(int cells, int users_per_cell, int bs_antennas, int user_antennas) {
  auto check = [](int v, const char* name) {
    if (v < 1) fail(Errc::NonPositiveDimension, std::string(name) + " must be >= 1, got " + std::to_string(v));
  };
  check(cells, "cells");
  check(users_per_cell, "users_per_cell");
  check(bs_antennas, "bs_antennas");
  check(user_antennas, "user_antennas");
  return NetworkConfig{cells, users_per_cell, bs_antennas, user_antennas};
}

ChannelRealization::ChannelRealization(NetworkConfig config, std::uint64_t seed,
                                       std::vector<CMatrix> matrices)
    : config_(config), seed_(seed), matrices_(std::move(matrices)) {
  const std::size_t expected = static_cast<std::size_t>(config_.cells) * config_.cells * config_.users_per_cell;
  if (matrices_.size() != expected)
    fail(Errc::DimensionMismatch, "channel realization expects " + std::to_string(expected) + " matrices");
  for (const auto& h : matrices_)
    if (h.rows() != config_.bs_antennas || h.cols() != config_.user_antennas)
      fail(Errc::DimensionMismatch, "channel matrix has the wrong shape");
}

const CMatrix& ChannelRealization::at(int bs, int cell, int user) const {
  const int l = config_.cells;
  const int k = config_.users_per_cell;
  if (bs < 1 || bs > l || cell < 1 || cell > l || user < 1 || user > k)
    fail(Errc::InvalidArgument, "channel index out of range");
  return matrices_[(static_cast<std::size_t>(bs - 1) * l + (cell - 1)) * k + (user - 1)];
}

ChannelRealization sample_channel(const NetworkConfig& config, std::uint64_t seed) {
  make_config(config.cells, config.users_per_cell, config.bs_antennas, config.user_antennas);
  const int l = config.cells;
  const int k = config.users_per_cell;
  std::vector<CMatrix> mats;
  mats.reserve(static_cast<std::size_t>(l) * l * k);
  for (int bs = 1; bs <= l; ++bs)
    for (int cell = 1; cell <= l; ++cell)
      for (int user = 1; user <= k; ++user) {
        const std::uint64_t key = rng::derive_key(seed, {static_cast<std::uint64_t>(bs),
                                                         static_cast<std::uint64_t>(cell),
                                                         static_cast<std::uint64_t>(user)});
        CMatrix h(config.bs_antennas, config.user_antennas);
        for (int r = 0; r < config.bs_antennas; ++r)
          for (int c = 0; c < config.user_antennas; ++c)
            h(r, c) = rng::complex_normal(key, static_cast<std::uint64_t>(r) * config.user_antennas + c);
        mats.push_back(std::move(h));
      }
  return ChannelRealization(config, seed, std::move(mats));
}

}  // namespace aligndof
