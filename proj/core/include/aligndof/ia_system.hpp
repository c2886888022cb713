// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "aligndof/subspace.hpp"

namespace aligndof {

/// One alignment problem: `tx_count` users with `tx_antennas` antennas each
/// interfere at the same `rx_count` receivers with `rx_antennas` antennas.
/// Their joint interference is compressed into a subspace as large as the
/// interference of `subset_size` users; `zero_forcing` marks the regime where
/// the interference is nulled entirely instead (possible when tx_antennas >
/// rx_count * rx_antennas).
struct IAScenario {
  int tx_count = 0;     // users whose precoders are designed jointly
  int rx_count = 0;     // receivers the interference is compressed at
  int subset_size = 0;  // size of the spanning subset after compression
  int rx_antennas = 0;
  int tx_antennas = 0;
  bool zero_forcing = false;
  std::vector<CMatrix> cross;  // (rx-1)*tx_count + (tx-1), each rx_antennas x tx_antennas

  const CMatrix& channel(int rx, int tx) const;  // 1-based
  int effective_subset() const noexcept { return zero_forcing ? 0 : subset_size; }
};

/// Feasibility window for the subset size:
/// (tx_count - 1) * tx_antennas <= rx_count * (tx_count - subset) * rx_antennas
///                                < tx_count * tx_antennas.
bool subset_feasible(int tx_count, int rx_count, int rx_antennas, int tx_antennas, int subset);

/// Validates counts, shapes and the feasibility window.
IAScenario make_ia_scenario(int tx_count, int rx_count, int subset_size, int rx_antennas,
                            int tx_antennas, std::vector<CMatrix> cross, bool zero_forcing = false);

/// Scenario with fresh i.i.d. CN(0,1) cross channels, keyed by `seed`.
IAScenario random_ia_scenario(int tx_count, int rx_count, int subset_size, int rx_antennas,
                              int tx_antennas, std::uint64_t seed, bool zero_forcing = false);

/// The assembled stacked system: block row (rx k, relation i) and block
/// column j hold weights[k][i][j] * H_kj, so any stacked null vector yields
/// one aligned transmit direction per user.
struct IASystem {
  IAScenario scenario;
  std::vector<std::complex<double>> weights;  // random mixing scalars, (k, i, j) row-major
  CMatrix coeff;                            // rx_count*(tx_count-subset)*rx_antennas x tx_count*tx_antennas
  std::uint64_t coeff_seed = 0;

  std::complex<double> weight_at(int rx, int relation, int tx) const;  // 1-based
};

IASystem build_ia_system(const IAScenario& scenario, std::uint64_t coeff_seed);

/// Per-user transmit precoders, tx_antennas x streams each, unit-norm columns.
struct PrecoderSet {
  std::vector<CMatrix> precoders;
  int streams = 0;
};

/// Takes the first `streams` null-space directions of the stacked system and
/// splits them into per-user precoders with unit-norm, full-rank columns.
PrecoderSet solve_precoders(const IASystem& system, int streams, const Tolerance& tol = {});

/// Null-space precoders that cancel the interference at all receivers
/// outright; needs tx_antennas > rx_count * rx_antennas.
PrecoderSet zero_force_precoders(const IAScenario& scenario, int streams, const Tolerance& tol = {});

struct AlignmentReport {
  std::vector<int> interference_dim;  // one entry per receiver
  std::vector<int> precoder_rank;     // one entry per transmitter
  int dim_limit = 0;                  // effective_subset * streams
  bool pass = false;
};

/// Measures the received interference dimension at every receiver and the
/// rank of every precoder against the scenario's claims.
AlignmentReport verify_alignment(const IAScenario& scenario, const PrecoderSet& precoders,
                                 const Tolerance& tol = {});

}  // namespace aligndof
