// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one self-contained check per claimed behaviour, each
// printed as a PASS/FAIL line. The process exits nonzero if any check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "aligndof/dof_plan.hpp"
#include "aligndof/ia_system.hpp"
#include "aligndof/network.hpp"
#include "aligndof/orchestrator.hpp"
#include "aligndof/rng.hpp"
#include "oracle_plan.hpp"

using namespace aligndof;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct GridTuple {
  int group, targets, subset, rx_ant, tx_ant;
};

/// Feasible tuples with group <= 4, targets <= 2, antennas <= 6 and
/// tx_ant <= targets * rx_ant (the full-rank regime of the main claim).
std::vector<GridTuple> alignment_grid() {
  std::vector<GridTuple> grid;
  for (int group = 1; group <= 4; ++group)
    for (int targets = 1; targets <= 2; ++targets)
      for (int rx = 1; rx <= 6; ++rx)
        for (int tx = 1; tx <= 6 && tx <= targets * rx; ++tx)
          for (int subset : subset_candidates(group, targets, rx, tx))
            grid.push_back({group, targets, subset, rx, tx});
  return grid;
}

// Criterion 1: the worked three-user construction, 100 seeds.
Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto scenario = random_ia_scenario(3, 1, 1, 4, 4, seed);
    const auto set = solve_precoders(build_ia_system(scenario, seed + 5000), 2);
    out.require(set.precoders.size() == 3, "expected three precoders");
    const auto report = verify_alignment(scenario, set);
    for (int rank : report.precoder_rank)
      out.require(rank == 2, "precoder rank != 2 at seed " + std::to_string(seed));
    out.require(report.interference_dim[0] <= 2,
                "interference above 2 at seed " + std::to_string(seed));
  }
  out.require(seconds_since(start) < 5.0, "runtime exceeded 5 s");
  return out;
}

// Criteria 2 and 5 share the grid sweep: alignment dimensions and ranks.
void run_alignment_grid(Outcome& alignment, Outcome& ranks) {
  const auto start = std::chrono::steady_clock::now();
  const auto grid = alignment_grid();
  alignment.require(grid.size() >= 100, "alignment grid unexpectedly small");
  long long solves = 0;
  for (const auto& t : grid) {
    const int budget =
        t.group * t.tx_ant - t.targets * (t.group - t.subset) * t.rx_ant;
    for (int d = 1; d <= budget; ++d) {
      solves += 50;
      for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const std::uint64_t base = rng::derive_key(
            1234, {static_cast<std::uint64_t>(t.group), static_cast<std::uint64_t>(t.targets),
                   static_cast<std::uint64_t>(t.subset), static_cast<std::uint64_t>(t.rx_ant),
                   static_cast<std::uint64_t>(t.tx_ant), static_cast<std::uint64_t>(d), seed});
        const std::string at = " at group=" + std::to_string(t.group) +
                               " targets=" + std::to_string(t.targets) +
                               " subset=" + std::to_string(t.subset) +
                               " M=" + std::to_string(t.rx_ant) +
                               " N=" + std::to_string(t.tx_ant) + " d=" + std::to_string(d) +
                               " seed=" + std::to_string(seed);
        try {
          const auto scenario = random_ia_scenario(t.group, t.targets, t.subset, t.rx_ant,
                                                   t.tx_ant, base);
          const auto set = solve_precoders(build_ia_system(scenario, base + 1), d);
          const auto report = verify_alignment(scenario, set);
          const int limit = t.subset * d;
          for (int dim : report.interference_dim) {
            alignment.require(dim <= limit, "dimension above subset*d" + at);
            if (t.rx_ant >= limit)
              alignment.require(dim == limit, "dimension below subset*d" + at);
          }
          for (int rank : report.precoder_rank)
            ranks.require(rank == d, "precoder rank != d" + at);
        } catch (const Error& e) {
          alignment.require(false, std::string("solver error: ") + e.what() + at);
        }
      }
    }
  }
  alignment.require(solves >= 10000, "grid sweep ran fewer solves than expected");
  alignment.require(seconds_since(start) < 60.0, "runtime exceeded 60 s");
}

// Criterion 3: coefficient-matrix rank on 200 draws.
Outcome criterion3() {
  Outcome out;
  std::vector<GridTuple> tuples;
  for (int group = 1; group <= 4; ++group)
    for (int targets = 1; targets <= 2; ++targets)
      for (int subset = 0; subset < group; ++subset)
        for (int rx = 1; rx <= 6; rx += 2)
          for (int tx = 1; tx <= 6 && tx <= targets * rx; tx += 2)
            tuples.push_back({group, targets, subset, rx, tx});
  tuples.push_back({4, 2, 2, 2, 2});  // the square 8x8 case
  const Tolerance tol(1e-10);
  int runs = 0;
  for (std::uint64_t seed = 1; runs < 200; ++seed) {
    const auto& t = tuples[seed % tuples.size()];
    ++runs;
    if (!stacked_rank_check(t.group, t.subset, t.targets, t.rx_ant, t.tx_ant, seed * 31 + 7, tol))
      out.require(false, "rank deficiency at group=" + std::to_string(t.group) +
                             " subset=" + std::to_string(t.subset) +
                             " targets=" + std::to_string(t.targets) +
                             " M=" + std::to_string(t.rx_ant) + " N=" + std::to_string(t.tx_ant) +
                             " seed=" + std::to_string(seed * 31 + 7));
  }
  return out;
}

// Criterion 4: span-collapse property on 200 randomized instances.
Outcome criterion4() {
  Outcome out;
  int runs = 0;
  for (std::uint64_t seed = 1; runs < 200; ++seed) {
    const int n1 = 1 + static_cast<int>(seed % 6);
    const int n2 = static_cast<int>((seed / 6) % (n1 + 1));
    const int r = 1 + static_cast<int>((seed / 42) % 3);
    const int m1 = r + static_cast<int>((3 * seed) % 9);
    const int m2 = r + static_cast<int>(seed % 2);
    ++runs;
    if (!span_collapse_check(n1, n2, r, m1, m2, seed * 131 + 3))
      out.require(false, "span mismatch at n1=" + std::to_string(n1) +
                             " n2=" + std::to_string(n2) + " r=" + std::to_string(r) +
                             " m1=" + std::to_string(m1) + " m2=" + std::to_string(m2) +
                             " seed=" + std::to_string(seed * 131 + 3));
  }
  return out;
}

// Criterion 6: the (2,2,6,6) network end to end, 100 seeds.
Outcome criterion6() {
  Outcome out;
  const auto cfg = make_config(2, 2, 6, 6);
  const Plan plan = make_plan(cfg);
  out.require(plan.total == Rational(8), "planned D != 8");
  out.require(plan.total == testing::oracle_total_dof(cfg), "oracle disagrees at (2,2,6,6)");
  out.require(plan.stages.size() == 1, "unexpected second stage");
  const auto& p = plan.stage1().params;
  out.require(p.group_size == 2 && p.subset_size == 1 && p.target_count == 1 &&
                  p.streams == Rational(2),
              "stage-1 tuple is not (K_t=2, kappa=1, K_r=1, d=2)");
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto channel = sample_channel(cfg, seed);
    try {
      const auto design = design_network(cfg, channel, plan, seed + 9000);
      const auto report = verify_design(cfg, channel, design);
      for (const auto& bs : report.per_bs) {
        out.require(bs.desired_dim == 4, "desired dim != 4 at seed " + std::to_string(seed));
        out.require(bs.ici_dim == 2, "ICI dim != 2 at seed " + std::to_string(seed));
        out.require(bs.decodable, "not decodable at seed " + std::to_string(seed));
      }
      out.require(report.pass, "report failed at seed " + std::to_string(seed));
    } catch (const Error& e) {
      out.require(false, std::string("design error: ") + e.what() + " at seed " +
                             std::to_string(seed));
    }
  }
  return out;
}

// Criterion 7: upper-bound property over the sweep grid plus the large-K trend.
Outcome criterion7() {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  for (int cells : {2, 3, 7})
    for (int users = 2; users <= 16; ++users)
      for (const auto& [m, n] : {std::pair{3, 3}, std::pair{6, 4}}) {
        const Plan plan = make_plan(make_config(cells, users, m, n));
        const Rational bound = upper_bound(cells, m, n);
        out.require(plan.total <= bound,
                    "D exceeds the bound at L=" + std::to_string(cells) +
                        " K=" + std::to_string(users) + " M=" + std::to_string(m) +
                        " N=" + std::to_string(n));
      }
  const Rational at16 = make_plan(make_config(2, 16, 6, 4)).total;
  out.require(std::abs(at16.to_double() - 9.0) <= 0.15 * 9.0,
              "K=16 value " + at16.str() + " not within 15% of 9");
  out.require(seconds_since(start) < 30.0, "runtime exceeded 30 s");
  return out;
}

// Criterion 8: hand-checked baseline values.
Outcome criterion8() {
  Outcome out;
  out.require(baseline_dofs(make_config(3, 4, 6, 2)).cos_dof == Rational(6), "COS(3,4,6,2) != 6");
  const auto lee63 = baseline_dofs(make_config(2, 2, 6, 3)).lee;
  out.require(lee63.has_value() && *lee63 == Rational(6), "Lee(2,2,6,3) != 6");
  const auto lee33 = baseline_dofs(make_config(2, 2, 3, 3)).lee;
  out.require(lee33.has_value() && *lee33 == Rational(4), "Lee(2,2,3,3) != 4");
  const auto lcell = baseline_dofs(make_config(2, 2, 3, 3)).lcell;
  out.require(lcell.has_value() && *lcell == Rational(4), "LCell(2,2,3,3) != 4");
  const BoundsReport bounds = optimal_bounds(make_config(2, 5, 4, 4));
  out.require(bounds.decom == Rational(20), "D_decom(2,5,4,4) != 20");
  out.require(bounds.region == Region::Region1, "(2,5,4,4) not classified Region1");
  return out;
}

// Criterion 9: exact equality with the no-pruning enumeration oracle.
Outcome criterion9() {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  int compared = 0;
  for (int cells = 1; cells <= 4; ++cells)
    for (int users = 1; users <= 6; ++users)
      for (int m = 1; m <= 8; ++m)
        for (int n = 1; n <= 8; ++n) {
          const NetworkConfig cfg = make_config(cells, users, m, n);
          const Rational planned = make_plan(cfg).total;
          const Rational oracle = testing::oracle_total_dof(cfg);
          ++compared;
          if (planned != oracle) {
            out.require(false, "mismatch at L=" + std::to_string(cells) +
                                   " K=" + std::to_string(users) + " M=" + std::to_string(m) +
                                   " N=" + std::to_string(n) + ": planner " + planned.str() +
                                   " vs oracle " + oracle.str());
            return out;
          }
        }
  out.require(compared == 4 * 6 * 8 * 8, "grid not fully enumerated");
  out.require(seconds_since(start) < 120.0, "runtime exceeded 120 s");
  return out;
}

// Criterion 10: the verifier rejects unaligned precoders every time.
Outcome criterion10() {
  Outcome out;
  const auto cfg = make_config(2, 2, 6, 6);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto channel = sample_channel(cfg, seed);
    const auto design = make_random_design(cfg, 2, seed + 500);
    const auto report = verify_design(cfg, channel, design);
    out.require(!report.pass, "control design passed at seed " + std::to_string(seed));
    for (const auto& bs : report.per_bs) {
      out.require(bs.ici_dim == 4, "control ICI dim != 4 at seed " + std::to_string(seed));
      out.require(!bs.decodable, "control decodable at seed " + std::to_string(seed));
    }
  }
  return out;
}

int report(int id, const char* label, const Outcome& out, double secs) {
  std::printf("%s criterion %2d: %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", id, label, secs,
              out.pass ? "" : " -- ", out.pass ? "" : out.detail.c_str());
  std::fflush(stdout);
  return out.pass ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  auto timed = [&](int id, const char* label, auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome out = fn();
    failures += report(id, label, out, seconds_since(start));
  };

  timed(1, "worked example: 3 rank-2 precoders, interference <= 2, 100 seeds", criterion1);

  {
    const auto start = std::chrono::steady_clock::now();
    Outcome alignment, ranks;
    run_alignment_grid(alignment, ranks);
    const double secs = seconds_since(start);
    failures += report(2, "alignment dimension grid (50 seeds per tuple)", alignment, secs);
    failures += report(5, "full-rank precoders on the same grid", ranks, secs);
  }

  timed(3, "coefficient-matrix full rank, 200 draws at tol 1e-10", criterion3);
  timed(4, "span-collapse equality, 200 randomized instances", criterion4);
  timed(6, "end-to-end (2,2,6,6): D=8, desired 4, ICI 2, decodable, 100 seeds", criterion6);
  timed(7, "planner below the closed-form bound; K=16 within 15% of 9", criterion7);
  timed(8, "baseline closed forms and Region1 classification", criterion8);
  timed(9, "planner equals the brute-force oracle on the full grid", criterion9);
  timed(10, "random-precoder control fails verification 100/100", criterion10);

  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
