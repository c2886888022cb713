// SPDX-License-Identifier: Apache-2.0
#include "aligndof/orchestrator.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "aligndof/rng.hpp"

namespace aligndof {

std::vector<std::vector<int>> assign_targets(int cells, int targets_per_cell) {
  if (targets_per_cell < 1 || targets_per_cell > cells - 1)
    fail(Errc::InvalidKr, "targets per cell must lie in [1, cells-1]");
  std::vector<std::vector<int>> out(cells);
  for (int cell = 1; cell <= cells; ++cell) {
    out[cell - 1].reserve(targets_per_cell);
    for (int step = 1; step <= targets_per_cell; ++step)
      out[cell - 1].push_back((cell - 1 + step) % cells + 1);
  }
  return out;
}

namespace {

/// Next size-`group` subset of {1..users} in lexicographic order, or empty.
std::vector<int> next_combination(std::vector<int> combo, int users, int group) {
  int i = group - 1;
  while (i >= 0 && combo[i] == users - (group - 1 - i)) --i;
  if (i < 0) return {};
  ++combo[i];
  for (int j = i + 1; j < group; ++j) combo[j] = combo[j - 1] + 1;
  return combo;
}

}  // namespace

std::vector<CoverageSystem> plan_cell_coverage(int users_per_cell, int group_size, int streams,
                                               int per_system_cap) {
  if (group_size < 1 || group_size > users_per_cell)
    fail(Errc::InvalidArgument, "group size must lie in [1, users_per_cell]");
  if (streams < 1) fail(Errc::InvalidArgument, "streams must be >= 1");
  if (per_system_cap < 1) fail(Errc::InvalidArgument, "per-system cap must be >= 1");

  const std::int64_t budget = binomial(users_per_cell - 1, group_size - 1) * per_system_cap;
  if (streams > budget)
    fail(Errc::DirectionsBudgetExceeded,
         "each user can draw at most " + std::to_string(budget) + " directions, need " +
             std::to_string(streams));

  // Cyclic windows first; lexicographic extras only if those run dry.
  std::vector<std::vector<int>> subsets;
  if (group_size == users_per_cell) {
    std::vector<int> all(users_per_cell);
    for (int u = 0; u < users_per_cell; ++u) all[u] = u + 1;
    subsets.push_back(std::move(all));
  } else {
    for (int start = 1; start <= users_per_cell; ++start) {
      std::vector<int> s(group_size);
      for (int o = 0; o < group_size; ++o) s[o] = (start - 1 + o) % users_per_cell + 1;
      std::sort(s.begin(), s.end());
      subsets.push_back(std::move(s));
    }
  }
  std::vector<int> lex_cursor;  // state of the extension enumerator

  std::vector<int> need(users_per_cell, streams);
  std::vector<CoverageSystem> systems(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s) systems[s].users = subsets[s];

  auto needy_members = [&](const std::vector<int>& users) {
    std::vector<int> takers;
    for (int u : users)
      if (need[u - 1] > 0) takers.push_back(u);
    return takers;
  };
  auto all_done = [&] {
    return std::all_of(need.begin(), need.end(), [](int n) { return n == 0; });
  };
  auto extend_subsets = [&]() -> bool {
    while (true) {
      if (lex_cursor.empty()) {
        lex_cursor.resize(group_size);
        for (int o = 0; o < group_size; ++o) lex_cursor[o] = o + 1;
      } else {
        lex_cursor = next_combination(lex_cursor, users_per_cell, group_size);
        if (lex_cursor.empty()) return false;
      }
      const bool known = std::any_of(systems.begin(), systems.end(), [&](const CoverageSystem& cs) {
        return cs.users == lex_cursor;
      });
      if (!known) {
        CoverageSystem cs;
        cs.users = lex_cursor;
        systems.push_back(std::move(cs));
        return true;
      }
    }
  };

  while (!all_done()) {
    bool progress = false;
    // Even pass: one full draw per system whose members all still need one.
    for (auto& cs : systems) {
      if (static_cast<int>(cs.draw_takers.size()) >= per_system_cap) continue;
      const auto takers = needy_members(cs.users);
      if (static_cast<int>(takers.size()) != group_size) continue;
      cs.draw_takers.push_back(takers);
      for (int u : takers) --need[u - 1];
      progress = true;
    }
    if (progress) continue;

    // Partial draw: the system covering the most remaining need.
    std::size_t pick = systems.size();
    std::size_t best_count = 0;
    for (std::size_t s = 0; s < systems.size(); ++s) {
      if (static_cast<int>(systems[s].draw_takers.size()) >= per_system_cap) continue;
      const auto takers = needy_members(systems[s].users);
      if (takers.size() > best_count) {
        best_count = takers.size();
        pick = s;
      }
    }
    if (pick == systems.size()) {
      if (!extend_subsets())
        fail(Errc::DirectionsBudgetExceeded, "coverage needs exceed all distinct subsets");
      continue;
    }
    auto takers = needy_members(systems[pick].users);
    systems[pick].draw_takers.push_back(takers);
    for (int u : takers) --need[u - 1];
  }

  std::erase_if(systems, [](const CoverageSystem& cs) { return cs.draw_takers.empty(); });
  return systems;
}

namespace {

using ChannelFn = std::function<CMatrix(int bs, int cell, int user)>;

struct StageParamsInt {
  int group = 0;
  int subset = 0;
  int targets = 0;
  int streams = 0;  // floored
};

/// Builds, solves and distributes one stage's systems for one cell, appending
/// the drawn directions to each user's column list.
void run_stage_for_cell(const NetworkConfig& cfg, const StageParamsInt& p, int stage_index,
                        int cell, int tx_dim, const std::vector<std::vector<int>>& targets,
                        const ChannelFn& channel_of, std::uint64_t design_seed,
                        const Tolerance& tol, std::vector<std::vector<CVector>>& columns,
                        std::vector<SystemRecord>& records) {
  const auto& tgt = targets[cell - 1];
  const int users = cfg.users_per_cell;

  if (p.subset == 0) {
    // Complete cancellation: each user transmits inside the null space of its
    // stacked cross channels to the targeted BSs.
    for (int user = 1; user <= users; ++user) {
      CMatrix stacked(static_cast<Eigen::Index>(p.targets) * cfg.bs_antennas, tx_dim);
      for (int j = 0; j < p.targets; ++j)
        stacked.middleRows(static_cast<Eigen::Index>(j) * cfg.bs_antennas, cfg.bs_antennas) =
            channel_of(tgt[j], cell, user);
      const CMatrix basis = null_space_basis(stacked, tol);
      if (basis.cols() < p.streams)
        fail(Errc::InsufficientNullSpace, "cell " + std::to_string(cell) + " user " +
                                              std::to_string(user) +
                                              ": cross-channel null space too small");
      for (int c = 0; c < p.streams; ++c) columns[user - 1].push_back(basis.col(c));
    }
    SystemRecord rec;
    rec.stage = stage_index;
    rec.cell = cell;
    rec.targets = tgt;
    for (int u = 1; u <= users; ++u) rec.users.push_back(u);
    rec.draw_takers.assign(static_cast<std::size_t>(p.streams), rec.users);
    records.push_back(std::move(rec));
    return;
  }

  const int per_system_cap = p.group * tx_dim - p.targets * (p.group - p.subset) * cfg.bs_antennas;
  if (per_system_cap < 1)
    fail(Errc::InfeasibleKappa, "stage " + std::to_string(stage_index) +
                                    " has no null-space budget in the effective space");
  const auto coverage = plan_cell_coverage(users, p.group, p.streams, per_system_cap);

  for (std::size_t s = 0; s < coverage.size(); ++s) {
    const auto& cs = coverage[s];
    std::vector<CMatrix> cross;
    cross.reserve(static_cast<std::size_t>(p.targets) * p.group);
    for (int j = 0; j < p.targets; ++j)
      for (int member : cs.users) cross.push_back(channel_of(tgt[j], cell, member));
    const IAScenario scenario = make_ia_scenario(p.group, p.targets, p.subset, cfg.bs_antennas,
                                                 tx_dim, std::move(cross));
    const std::uint64_t coeff_seed =
        rng::derive_key(design_seed, {static_cast<std::uint64_t>(stage_index),
                                      static_cast<std::uint64_t>(cell), s});
    const IASystem system = build_ia_system(scenario, coeff_seed);

    const int draws = static_cast<int>(cs.draw_takers.size());
    CMatrix basis;
    if (system.coeff.rows() == 0) {
      basis = CMatrix::Identity(p.group * tx_dim, p.group * tx_dim);
    } else {
      basis = null_space_basis(system.coeff, tol);
    }
    if (basis.cols() < draws)
      fail(Errc::InsufficientNullSpace, "cell " + std::to_string(cell) + " system " +
                                            std::to_string(s + 1) + ": null space smaller than " +
                                            std::to_string(draws) + " draws");

    for (int r = 0; r < draws; ++r) {
      for (int taker : cs.draw_takers[r]) {
        const auto member =
            std::find(cs.users.begin(), cs.users.end(), taker) - cs.users.begin();
        CVector direction =
            basis.col(r).segment(static_cast<Eigen::Index>(member) * tx_dim, tx_dim);
        const double norm = direction.norm();
        if (!(norm > 0.0))
          fail(Errc::RankDeficientPrecoder, "cell " + std::to_string(cell) + " system " +
                                                std::to_string(s + 1) +
                                                ": vanishing direction for user " +
                                                std::to_string(taker));
        columns[taker - 1].push_back(direction / norm);
      }
    }

    SystemRecord rec;
    rec.stage = stage_index;
    rec.cell = cell;
    rec.users = cs.users;
    rec.targets = tgt;
    rec.coeff_seed = coeff_seed;
    rec.draw_takers = cs.draw_takers;
    records.push_back(std::move(rec));
  }
}

CMatrix columns_to_matrix(const std::vector<CVector>& cols, int rows) {
  CMatrix m(rows, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = cols[c];
  return m;
}

}  // namespace

const CMatrix& NetworkDesign::precoder(int cell, int user) const {
  if (cell < 1 || cell > config.cells || user < 1 || user > config.users_per_cell)
    fail(Errc::InvalidArgument, "precoder index out of range");
  return precoders[static_cast<std::size_t>(cell - 1) * config.users_per_cell + (user - 1)];
}

std::vector<CellSystem> build_cell_systems(const NetworkConfig& config, const Plan& plan, int cell,
                                           const ChannelRealization& channel, std::uint64_t seed) {
  if (plan.interference_free) return {};
  const auto& p1 = plan.stage1().params;
  const int d1 = static_cast<int>(p1.streams.floor());
  if (d1 < 1) fail(Errc::ConstructiveFailure, "stage-1 DoF floors to zero");
  if (p1.subset_size == 0) return {};  // zero-forcing stages have no stacked systems

  const auto targets = assign_targets(config.cells, p1.target_count);
  const int cap = p1.group_size * config.user_antennas -
                  p1.target_count * (p1.group_size - p1.subset_size) * config.bs_antennas;
  const auto coverage = plan_cell_coverage(config.users_per_cell, p1.group_size, d1, cap);

  std::vector<CellSystem> out;
  out.reserve(coverage.size());
  for (std::size_t s = 0; s < coverage.size(); ++s) {
    const auto& cs = coverage[s];
    std::vector<CMatrix> cross;
    for (int j = 0; j < p1.target_count; ++j)
      for (int member : cs.users) cross.push_back(channel.at(targets[cell - 1][j], cell, member));
    const IAScenario scenario =
        make_ia_scenario(p1.group_size, p1.target_count, p1.subset_size, config.bs_antennas,
                         config.user_antennas, std::move(cross));
    const std::uint64_t coeff_seed =
        rng::derive_key(seed, {1ULL, static_cast<std::uint64_t>(cell), s});
    CellSystem item{build_ia_system(scenario, coeff_seed),
                    SystemRecord{1, cell, cs.users, targets[cell - 1], coeff_seed, cs.draw_takers}};
    out.push_back(std::move(item));
  }
  return out;
}

NetworkDesign design_network(const NetworkConfig& config, const ChannelRealization& channel,
                             const Plan& plan, std::uint64_t design_seed, const Tolerance& tol) {
  if (channel.config().cells != config.cells ||
      channel.config().users_per_cell != config.users_per_cell ||
      channel.config().bs_antennas != config.bs_antennas ||
      channel.config().user_antennas != config.user_antennas)
    fail(Errc::DimensionMismatch, "channel realization does not match the config");

  NetworkDesign design;
  design.config = config;
  design.plan = plan;
  design.channel_seed = channel.seed();
  design.design_seed = design_seed;

  const int users = config.users_per_cell;
  const int n_users_total = config.cells * users;

  if (plan.interference_free) {
    const int d = static_cast<int>(plan.stage1().params.streams.floor());
    if (d < 1) fail(Errc::ConstructiveFailure, "per-user DoF floors to zero");
    design.stage_streams = {d};
    design.total_streams = d;
    for (int cell = 1; cell <= config.cells; ++cell)
      for (int user = 1; user <= users; ++user) {
        const std::uint64_t key = rng::derive_key(design_seed, {static_cast<std::uint64_t>(cell),
                                                                static_cast<std::uint64_t>(user)});
        CMatrix g(config.user_antennas, d);
        for (int r = 0; r < config.user_antennas; ++r)
          for (int c = 0; c < d; ++c)
            g(r, c) = rng::complex_normal(key, static_cast<std::uint64_t>(r) * d + c);
        Eigen::HouseholderQR<CMatrix> qr(g);
        CMatrix q = qr.householderQ() * CMatrix::Identity(config.user_antennas, d);
        design.precoders.push_back(std::move(q));
      }
    return design;
  }

  // Per-user growing column lists; stage 2 appends after stage 1.
  std::vector<std::vector<CVector>> columns(n_users_total);

  auto stage_int = [&](const PlanStage& st) {
    return StageParamsInt{st.params.group_size, st.params.subset_size, st.params.target_count,
                          static_cast<int>(st.params.streams.floor())};
  };

  const StageParamsInt p1 = stage_int(plan.stage1());
  if (p1.streams < 1) fail(Errc::ConstructiveFailure, "stage-1 DoF floors to zero");
  design.stage_streams.push_back(p1.streams);

  const auto targets1 = assign_targets(config.cells, p1.targets);
  const ChannelFn direct = [&](int bs, int cell, int user) { return channel.at(bs, cell, user); };
  for (int cell = 1; cell <= config.cells; ++cell) {
    std::vector<std::vector<CVector>> cell_cols(users);
    run_stage_for_cell(config, p1, 1, cell, config.user_antennas, targets1, direct, design_seed,
                       tol, cell_cols, design.systems);
    for (int user = 1; user <= users; ++user)
      for (auto& v : cell_cols[user - 1]) columns[(cell - 1) * users + (user - 1)].push_back(std::move(v));
  }

  // Second stage on effective channels orthogonal to the stage-1 precoders.
  if (plan.stage2() != nullptr) {
    const StageParamsInt p2 = stage_int(*plan.stage2());
    if (p2.streams >= 1) {
      const int eff_dim = config.user_antennas - p1.streams;
      if (eff_dim < 1)
        fail(Errc::ConstructiveFailure, "no transmit dimensions left for the second stage");
      std::vector<CMatrix> complements(n_users_total);
      for (int idx = 0; idx < n_users_total; ++idx) {
        const CMatrix v1 = columns_to_matrix(columns[idx], config.user_antennas);
        // The stage-1 columns are unit-norm but not mutually orthonormal, so
        // orthonormalize before taking the complement.
        Eigen::HouseholderQR<CMatrix> qr(v1);
        const CMatrix q =
            qr.householderQ() * CMatrix::Identity(config.user_antennas, p1.streams);
        complements[idx] = orth_complement(q, config.user_antennas, tol);
      }
      const auto targets2 = assign_targets(config.cells, p2.targets);
      const ChannelFn effective = [&](int bs, int cell, int user) -> CMatrix {
        return channel.at(bs, cell, user) * complements[(cell - 1) * users + (user - 1)];
      };
      design.stage_streams.push_back(p2.streams);
      for (int cell = 1; cell <= config.cells; ++cell) {
        std::vector<std::vector<CVector>> cell_cols(users);
        run_stage_for_cell(config, p2, 2, cell, eff_dim, targets2, effective, design_seed, tol,
                           cell_cols, design.systems);
        for (int user = 1; user <= users; ++user) {
          const int idx = (cell - 1) * users + (user - 1);
          for (auto& w : cell_cols[user - 1]) {
            CVector lifted = complements[idx] * w;  // already unit norm
            columns[idx].push_back(std::move(lifted));
          }
        }
      }
    }
  }

  design.total_streams = 0;
  for (int s : design.stage_streams) design.total_streams += s;
  design.precoders.reserve(n_users_total);
  for (int idx = 0; idx < n_users_total; ++idx) {
    CMatrix v = columns_to_matrix(columns[idx], config.user_antennas);
    if (static_cast<int>(v.cols()) != design.total_streams)
      fail(Errc::ConstructiveFailure, "user did not receive the planned number of directions");
    if (numerical_rank(v, tol) != design.total_streams)
      fail(Errc::RankDeficientPrecoder,
           "assembled precoder " + std::to_string(idx) + " is rank deficient");
    design.precoders.push_back(std::move(v));
  }
  return design;
}

NetworkDesign make_random_design(const NetworkConfig& config, int streams,
                                 std::uint64_t design_seed) {
  make_config(config.cells, config.users_per_cell, config.bs_antennas, config.user_antennas);
  if (streams < 1 || streams > config.user_antennas)
    fail(Errc::InvalidArgument, "control design streams must lie in [1, user_antennas]");
  NetworkDesign design;
  design.config = config;
  design.design_seed = design_seed;
  design.control = true;
  design.stage_streams = {streams};
  design.total_streams = streams;
  for (int cell = 1; cell <= config.cells; ++cell)
    for (int user = 1; user <= config.users_per_cell; ++user) {
      const std::uint64_t key = rng::derive_key(
          design_seed, {0xC0ULL, static_cast<std::uint64_t>(cell), static_cast<std::uint64_t>(user)});
      CMatrix v(config.user_antennas, streams);
      for (int r = 0; r < config.user_antennas; ++r)
        for (int c = 0; c < streams; ++c)
          v(r, c) = rng::complex_normal(key, static_cast<std::uint64_t>(r) * streams + c);
      for (int c = 0; c < streams; ++c) v.col(c) /= v.col(c).norm();
      design.precoders.push_back(std::move(v));
    }
  return design;
}

VerificationReport verify_design(const NetworkConfig& config, const ChannelRealization& channel,
                                 const NetworkDesign& design, const Tolerance& tol) {
  if (design.config.cells != config.cells || design.config.users_per_cell != config.users_per_cell ||
      design.config.bs_antennas != config.bs_antennas ||
      design.config.user_antennas != config.user_antennas)
    fail(Errc::DimensionMismatch, "design does not match the config");

  const int users = config.users_per_cell;
  double anchor = 0.0;
  for (int bs = 1; bs <= config.cells; ++bs)
    for (int cell = 1; cell <= config.cells; ++cell)
      for (int user = 1; user <= users; ++user)
        anchor = std::max(anchor, channel.at(bs, cell, user).norm());

  VerificationReport report;
  report.per_bs.reserve(config.cells);

  for (int bs = 1; bs <= config.cells; ++bs) {
    std::vector<CMatrix> desired;
    std::vector<CMatrix> interference;
    for (int cell = 1; cell <= config.cells; ++cell)
      for (int user = 1; user <= users; ++user) {
        CMatrix received = channel.at(bs, cell, user) * design.precoder(cell, user);
        if (cell == bs) {
          desired.push_back(std::move(received));
        } else {
          interference.push_back(std::move(received));
        }
      }
    BsVerification v;
    v.desired_dim = span_dim_anchored(desired, anchor, tol);
    v.ici_dim = interference.empty() ? 0 : span_dim_anchored(interference, anchor, tol);

    std::vector<CMatrix> joint = desired;
    joint.insert(joint.end(), interference.begin(), interference.end());
    const int joint_dim = span_dim_anchored(joint, anchor, tol);
    const int occupied = users * design.total_streams + v.ici_dim;
    v.decodable = joint_dim == occupied && occupied <= config.bs_antennas;
    report.per_bs.push_back(v);
  }

  report.precoder_rank.reserve(design.precoders.size());
  for (const auto& v : design.precoders) report.precoder_rank.push_back(numerical_rank(v, tol));

  report.predicted_ici = Rational(0);
  report.planned_ici = Rational(0);
  if (!design.control && !design.plan.stages.empty() && !design.plan.interference_free) {
    for (std::size_t s = 0; s < design.stage_streams.size(); ++s) {
      const auto& p = design.plan.stages[s].params;
      report.predicted_ici +=
          ici_count(config.cells, users, Rational(design.stage_streams[s]), p.group_size,
                    p.subset_size, p.target_count);
    }
    report.planned_ici = design.plan.ici_total;
  }

  report.pass = true;
  for (const auto& v : report.per_bs)
    if (!v.decodable) report.pass = false;
  for (int rank : report.precoder_rank)
    if (rank != design.total_streams) report.pass = false;
  return report;
}

bool span_collapse_check(int total_count, int free_count, int rank, int rows, int cols,
                  std::uint64_t seed, const Tolerance& tol) {
  if (total_count < 1 || free_count < 0 || free_count > total_count)
    fail(Errc::InvalidArgument, "free count must lie in [0, total_count]");
  if (rank < 1 || rank > std::min(rows, cols))
    fail(Errc::InvalidArgument, "rank must lie in [1, min(rows, cols)]");

  const int solved = total_count - free_count;
  std::vector<CMatrix> mats(total_count);

  auto random_matrix = [&](std::uint64_t tag, std::uint64_t index, int r, int c) {
    const std::uint64_t key = rng::derive_key(seed, {tag, index});
    CMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        m(i, j) = rng::complex_normal(key, static_cast<std::uint64_t>(i) * c + j);
    return m;
  };

  // Free matrices: random products of full-rank factors, so rank is exactly r.
  for (int k = solved; k < total_count; ++k)
    mats[k] = random_matrix(1, static_cast<std::uint64_t>(k), rows, rank) *
              random_matrix(2, static_cast<std::uint64_t>(k), rank, cols);

  if (solved > 0) {
    CMatrix coef(solved, solved);
    CMatrix rhs = CMatrix::Zero(solved, static_cast<Eigen::Index>(rows) * cols);
    for (int i = 0; i < solved; ++i) {
      const std::uint64_t key = rng::derive_key(seed, {3, static_cast<std::uint64_t>(i)});
      for (int k = 0; k < total_count; ++k) {
        const std::complex<double> g = rng::complex_normal(key, static_cast<std::uint64_t>(k));
        if (k < solved) {
          coef(i, k) = g;
        } else {
          rhs.row(i) -= g * Eigen::Map<const CVector>(mats[k].data(), mats[k].size()).transpose();
        }
      }
    }
    const CMatrix solution = coef.partialPivLu().solve(rhs);
    for (int k = 0; k < solved; ++k) {
      const CVector flat = solution.row(k).transpose();
      mats[k] = Eigen::Map<const CMatrix>(flat.data(), rows, cols);
    }
  }

  const int expected = std::min(free_count * rank, rows);
  return span_dim(mats, tol) == expected;
}

bool stacked_rank_check(int group_size, int subset_size, int target_count, int rx_antennas,
                  int tx_antennas, std::uint64_t seed, const Tolerance& tol) {
  if (group_size < 1 || target_count < 1 || rx_antennas < 1 || tx_antennas < 1)
    fail(Errc::NonPositiveDimension, "rank-check dimensions must be >= 1");
  if (subset_size < 0 || subset_size >= group_size)
    fail(Errc::InvalidArgument, "subset size must lie in [0, group_size)");
  if (tx_antennas > target_count * rx_antennas)
    fail(Errc::PreconditionViolated, "the rank check needs tx_antennas <= targets * rx_antennas");

  const int relations = group_size - subset_size;
  const int rows = target_count * relations * rx_antennas;
  const int cols = group_size * tx_antennas;
  CMatrix coeff(rows, cols);
  for (int rx = 1; rx <= target_count; ++rx) {
    for (int tx = 1; tx <= group_size; ++tx) {
      const std::uint64_t hkey = rng::derive_key(seed, {5, static_cast<std::uint64_t>(rx),
                                                        static_cast<std::uint64_t>(tx)});
      CMatrix h(rx_antennas, tx_antennas);
      for (int r = 0; r < rx_antennas; ++r)
        for (int c = 0; c < tx_antennas; ++c)
          h(r, c) = rng::complex_normal(hkey, static_cast<std::uint64_t>(r) * tx_antennas + c);
      for (int rel = 1; rel <= relations; ++rel) {
        const std::uint64_t gkey = rng::derive_key(
            seed, {6, static_cast<std::uint64_t>(rx), static_cast<std::uint64_t>(rel),
                   static_cast<std::uint64_t>(tx)});
        coeff.block(((rx - 1) * relations + (rel - 1)) * rx_antennas, (tx - 1) * tx_antennas,
                    rx_antennas, tx_antennas) = rng::complex_normal(gkey, 0) * h;
      }
    }
  }
  return numerical_rank(coeff, tol) == std::min(rows, cols);
}

}  // namespace aligndof
