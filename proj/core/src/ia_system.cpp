// SPDX-License-Identifier: Apache-2.0
#include "aligndof/ia_system.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "aligndof/rng.hpp"

namespace aligndof {

const CMatrix& IAScenario::channel(int rx, int tx) const {
  if (rx < 1 || rx > rx_count || tx < 1 || tx > tx_count)
    fail(Errc::InvalidArgument, "scenario channel index out of range");
  return cross[static_cast<std::size_t>(rx - 1) * tx_count + (tx - 1)];
}

bool subset_feasible(int tx_count, int rx_count, int rx_antennas, int tx_antennas, int subset) {
  if (subset < 0 || subset > tx_count) return false;
  const long long mid = 1LL * rx_count * (tx_count - subset) * rx_antennas;
  return 1LL * (tx_count - 1) * tx_antennas <= mid && mid < 1LL * tx_count * tx_antennas;
}

IAScenario make_ia_scenario(int tx_count, int rx_count, int subset_size, int rx_antennas,
                            int tx_antennas, std::vector<CMatrix> cross, bool zero_forcing) {
  if (tx_count < 1 || rx_count < 1 || rx_antennas < 1 || tx_antennas < 1)
    fail(Errc::NonPositiveDimension, "scenario dimensions must be >= 1");
  if (zero_forcing) {
    if (tx_antennas <= rx_count * rx_antennas)
      fail(Errc::PreconditionViolated,
           "zero forcing needs tx_antennas > rx_count * rx_antennas");
  } else if (!subset_feasible(tx_count, rx_count, rx_antennas, tx_antennas, subset_size)) {
    fail(Errc::InfeasibleKappa,
         "subset size " + std::to_string(subset_size) + " violates the feasibility window");
  }
  if (cross.size() != static_cast<std::size_t>(rx_count) * tx_count)
    fail(Errc::DimensionMismatch, "scenario expects rx_count * tx_count cross channels");
  for (const auto& h : cross)
    if (h.rows() != rx_antennas || h.cols() != tx_antennas)
      fail(Errc::DimensionMismatch, "cross channel has the wrong shape");
  return IAScenario{tx_count,    rx_count,    subset_size, rx_antennas,
                    tx_antennas, zero_forcing, std::move(cross)};
}

IAScenario random_ia_scenario(int tx_count, int rx_count, int subset_size, int rx_antennas,
                              int tx_antennas, std::uint64_t seed, bool zero_forcing) {
  std::vector<CMatrix> cross;
  cross.reserve(static_cast<std::size_t>(rx_count) * tx_count);
  for (int rx = 1; rx <= rx_count; ++rx)
    for (int tx = 1; tx <= tx_count; ++tx) {
      const std::uint64_t key = rng::derive_key(seed, {static_cast<std::uint64_t>(rx),
                                                       static_cast<std::uint64_t>(tx)});
      CMatrix h(rx_antennas, tx_antennas);
      for (int r = 0; r < rx_antennas; ++r)
        for (int c = 0; c < tx_antennas; ++c)
          h(r, c) = rng::complex_normal(key, static_cast<std::uint64_t>(r) * tx_antennas + c);
      cross.push_back(std::move(h));
    }
  return make_ia_scenario(tx_count, rx_count, subset_size, rx_antennas, tx_antennas,
                          std::move(cross), zero_forcing);
}

std::complex<double> IASystem::weight_at(int rx, int relation, int tx) const {
  const int relations = scenario.tx_count - scenario.subset_size;
  return weights[(static_cast<std::size_t>(rx - 1) * relations + (relation - 1)) *
                     scenario.tx_count +
                 (tx - 1)];
}

IASystem build_ia_system(const IAScenario& scenario, std::uint64_t coeff_seed) {
  if (scenario.zero_forcing)
    fail(Errc::PreconditionViolated, "zero-forcing scenarios have no stacked system");
  if (!subset_feasible(scenario.tx_count, scenario.rx_count, scenario.rx_antennas,
                       scenario.tx_antennas, scenario.subset_size))
    fail(Errc::InfeasibleKappa, "subset size violates the feasibility window");

  const int relations = scenario.tx_count - scenario.subset_size;  // rows of random relations per rx
  const int rows = scenario.rx_count * relations * scenario.rx_antennas;
  const int cols = scenario.tx_count * scenario.tx_antennas;

  IASystem sys;
  sys.scenario = scenario;
  sys.coeff_seed = coeff_seed;
  sys.weights.resize(static_cast<std::size_t>(scenario.rx_count) * relations * scenario.tx_count);
  sys.coeff = CMatrix::Zero(rows, cols);

  for (int rx = 1; rx <= scenario.rx_count; ++rx)
    for (int rel = 1; rel <= relations; ++rel)
      for (int tx = 1; tx <= scenario.tx_count; ++tx) {
        const std::uint64_t key = rng::derive_key(
            coeff_seed, {static_cast<std::uint64_t>(rx), static_cast<std::uint64_t>(rel),
                         static_cast<std::uint64_t>(tx)});
        const std::complex<double> g = rng::complex_normal(key, 0);
        sys.weights[(static_cast<std::size_t>(rx - 1) * relations + (rel - 1)) *
                        scenario.tx_count +
                    (tx - 1)] = g;
        const int row0 = ((rx - 1) * relations + (rel - 1)) * scenario.rx_antennas;
        const int col0 = (tx - 1) * scenario.tx_antennas;
        sys.coeff.block(row0, col0, scenario.rx_antennas, scenario.tx_antennas) =
            g * scenario.channel(rx, tx);
      }
  return sys;
}

namespace {

PrecoderSet split_and_normalize(const CMatrix& stacked, int tx_count, int tx_antennas, int streams,
                                const Tolerance& tol) {
  PrecoderSet set;
  set.streams = streams;
  set.precoders.reserve(tx_count);
  for (int tx = 0; tx < tx_count; ++tx) {
    CMatrix v = stacked.middleRows(static_cast<Eigen::Index>(tx) * tx_antennas, tx_antennas);
    for (int c = 0; c < streams; ++c) {
      const double n = v.col(c).norm();
      if (!(n > 0.0))
        fail(Errc::RankDeficientPrecoder,
             "user " + std::to_string(tx + 1) + " received a vanishing direction");
      v.col(c) /= n;
    }
    if (numerical_rank(v, tol) != streams)
      fail(Errc::RankDeficientPrecoder,
           "precoder of user " + std::to_string(tx + 1) + " is not full column rank");
    set.precoders.push_back(std::move(v));
  }
  return set;
}

}  // namespace

PrecoderSet solve_precoders(const IASystem& system, int streams, const Tolerance& tol) {
  if (streams < 1) fail(Errc::InvalidArgument, "streams must be >= 1");
  const IAScenario& sc = system.scenario;
  const int cols = sc.tx_count * sc.tx_antennas;
  CMatrix basis;
  if (system.coeff.rows() == 0) {
    basis = CMatrix::Identity(cols, cols);  // unconstrained system: the whole space
  } else {
    basis = null_space_basis(system.coeff, tol);
  }
  if (basis.cols() < streams)
    fail(Errc::InsufficientNullSpace,
         "null space has dimension " + std::to_string(basis.cols()) + ", need " +
             std::to_string(streams));
  return split_and_normalize(basis.leftCols(streams), sc.tx_count, sc.tx_antennas, streams, tol);
}

PrecoderSet zero_force_precoders(const IAScenario& scenario, int streams, const Tolerance& tol) {
  if (streams < 1) fail(Errc::InvalidArgument, "streams must be >= 1");
  const int stack_rows = scenario.rx_count * scenario.rx_antennas;
  if (streams > scenario.tx_antennas - stack_rows)
    fail(Errc::InsufficientNullSpace,
         "zero forcing supports at most tx_antennas - rx_count*rx_antennas streams");
  PrecoderSet set;
  set.streams = streams;
  set.precoders.reserve(scenario.tx_count);
  for (int tx = 1; tx <= scenario.tx_count; ++tx) {
    CMatrix stacked(stack_rows, scenario.tx_antennas);
    for (int rx = 1; rx <= scenario.rx_count; ++rx)
      stacked.middleRows(static_cast<Eigen::Index>(rx - 1) * scenario.rx_antennas,
                         scenario.rx_antennas) = scenario.channel(rx, tx);
    const CMatrix basis = null_space_basis(stacked, tol);
    if (basis.cols() < streams)
      fail(Errc::InsufficientNullSpace,
           "cross-channel null space of user " + std::to_string(tx) + " is too small");
    set.precoders.push_back(basis.leftCols(streams));  // orthonormal, so unit columns
  }
  return set;
}

AlignmentReport verify_alignment(const IAScenario& scenario, const PrecoderSet& precoders,
                                 const Tolerance& tol) {
  if (static_cast<int>(precoders.precoders.size()) != scenario.tx_count)
    fail(Errc::DimensionMismatch, "precoder count does not match the scenario");
  for (const auto& v : precoders.precoders)
    if (v.rows() != scenario.tx_antennas || v.cols() != precoders.streams)
      fail(Errc::DimensionMismatch, "precoder has the wrong shape");

  double anchor = 0.0;
  for (const auto& h : scenario.cross) anchor = std::max(anchor, h.norm());

  AlignmentReport report;
  report.dim_limit = scenario.effective_subset() * precoders.streams;
  report.interference_dim.reserve(scenario.rx_count);
  for (int rx = 1; rx <= scenario.rx_count; ++rx) {
    std::vector<CMatrix> received;
    received.reserve(scenario.tx_count);
    for (int tx = 1; tx <= scenario.tx_count; ++tx)
      received.push_back(scenario.channel(rx, tx) * precoders.precoders[tx - 1]);
    report.interference_dim.push_back(span_dim_anchored(received, anchor, tol));
  }
  report.precoder_rank.reserve(scenario.tx_count);
  for (const auto& v : precoders.precoders) report.precoder_rank.push_back(numerical_rank(v, tol));

  report.pass = true;
  for (int dim : report.interference_dim)
    if (dim > report.dim_limit) report.pass = false;
  for (int rank : report.precoder_rank)
    if (rank != precoders.streams) report.pass = false;
  return report;
}

}  // namespace aligndof
