// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <map>

#include "aligndof/orchestrator.hpp"

using namespace aligndof;

TEST_CASE("cyclic target assignment") {
  const auto t3 = assign_targets(3, 1);
  CHECK(t3[0] == std::vector<int>{2});
  CHECK(t3[1] == std::vector<int>{3});
  CHECK(t3[2] == std::vector<int>{1});

  const auto full = assign_targets(3, 2);
  for (int cell = 1; cell <= 3; ++cell) {
    CHECK(full[cell - 1].size() == 2);
    for (int bs : full[cell - 1]) CHECK(bs != cell);
  }

  // Every BS is targeted exactly targets_per_cell times.
  const auto t42 = assign_targets(4, 2);
  std::map<int, int> hits;
  for (const auto& targets : t42)
    for (int bs : targets) ++hits[bs];
  for (int bs = 1; bs <= 4; ++bs) CHECK(hits[bs] == 2);

  CHECK_THROWS_AS(assign_targets(3, 3), Error);
  CHECK_THROWS_AS(assign_targets(2, 0), Error);
}

TEST_CASE("coverage allotment matches the worked cases") {
  // Two users, one joint system, two draws for both.
  const auto single = plan_cell_coverage(2, 2, 2, 6);
  REQUIRE(single.size() == 1);
  CHECK(single[0].users == std::vector<int>{1, 2});
  REQUIRE(single[0].draw_takers.size() == 2);
  for (const auto& takers : single[0].draw_takers) CHECK(takers.size() == 2);

  // Four users in groups of three, budget 3 per system: the four cyclic
  // windows each drawn once, every draw full.
  const auto cyc = plan_cell_coverage(4, 3, 3, 3);
  REQUIRE(cyc.size() == 4);
  for (const auto& cs : cyc) {
    REQUIRE(cs.draw_takers.size() == 1);
    CHECK(cs.draw_takers[0].size() == 3);
  }

  // One direction each: a full draw covers three users, a partial the fourth.
  const auto trimmed = plan_cell_coverage(4, 3, 1, 3);
  REQUIRE(trimmed.size() == 2);
  CHECK(trimmed[0].draw_takers[0].size() == 3);
  CHECK(trimmed[1].draw_takers[0].size() == 1);

  // Per-user coverage always lands exactly on the requested count.
  for (int users = 2; users <= 5; ++users)
    for (int group = 1; group <= users; ++group)
      for (int streams = 1; streams <= 4; ++streams) {
        const auto systems = plan_cell_coverage(users, group, streams, 4);
        std::vector<int> got(users, 0);
        for (const auto& cs : systems)
          for (const auto& takers : cs.draw_takers)
            for (int u : takers) ++got[u - 1];
        for (int u = 0; u < users; ++u) CHECK(got[u] == streams);
      }

  CHECK_THROWS_AS(plan_cell_coverage(4, 3, 10, 3), Error);  // budget 3 systems x 3
  try {
    plan_cell_coverage(4, 3, 10, 3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DirectionsBudgetExceeded);
  }
}

TEST_CASE("stage-1 cell systems cover every user with provenance") {
  const auto cfg = make_config(2, 2, 6, 6);
  const auto plan = make_plan(cfg);
  const auto channel = sample_channel(cfg, 3);
  const auto systems = build_cell_systems(cfg, plan, 1, channel, 17);
  REQUIRE(systems.size() == 1);
  CHECK(systems[0].record.cell == 1);
  CHECK(systems[0].record.users == std::vector<int>{1, 2});
  CHECK(systems[0].record.targets == std::vector<int>{2});
  CHECK(systems[0].system.coeff.rows() == 6);
  CHECK(systems[0].system.coeff.cols() == 12);
}

TEST_CASE("end-to-end design aligns the two-cell network") {
  const auto cfg = make_config(2, 2, 6, 6);
  const auto plan = make_plan(cfg);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto channel = sample_channel(cfg, seed);
    const auto design = design_network(cfg, channel, plan, seed + 400);
    CHECK(design.total_streams == 2);
    for (const auto& v : design.precoders) {
      CHECK(v.rows() == 6);
      CHECK(v.cols() == 2);
    }
    const auto report = verify_design(cfg, channel, design);
    REQUIRE(report.per_bs.size() == 2);
    for (const auto& bs : report.per_bs) {
      CHECK(bs.desired_dim == 4);
      CHECK(bs.ici_dim == 2);  // only the one aligning cell interferes
      CHECK(bs.decodable);
    }
    CHECK(report.predicted_ici == Rational(2));
    CHECK(report.pass);
  }
}

TEST_CASE("random precoders fail verification at the same config") {
  const auto cfg = make_config(2, 2, 6, 6);
  const auto channel = sample_channel(cfg, 5);
  const auto design = make_random_design(cfg, 2, 99);
  const auto report = verify_design(cfg, channel, design);
  for (const auto& bs : report.per_bs) {
    CHECK(bs.ici_dim == 4);  // generic, unaligned
    CHECK_FALSE(bs.decodable);
  }
  CHECK_FALSE(report.pass);
}

TEST_CASE("single-cell designs see no interference") {
  const auto cfg = make_config(1, 2, 4, 2);
  const auto plan = make_plan(cfg);
  const auto channel = sample_channel(cfg, 8);
  const auto design = design_network(cfg, channel, plan, 9);
  const auto report = verify_design(cfg, channel, design);
  REQUIRE(report.per_bs.size() == 1);
  CHECK(report.per_bs[0].ici_dim == 0);
  CHECK(report.per_bs[0].desired_dim == 4);
  CHECK(report.per_bs[0].decodable);
  CHECK(report.pass);
}

TEST_CASE("zero-forcing plans null the targeted interference") {
  const auto cfg = make_config(2, 1, 2, 5);
  const auto plan = make_plan(cfg);
  REQUIRE(plan.stage1().params.subset_size == 0);
  const auto channel = sample_channel(cfg, 12);
  const auto design = design_network(cfg, channel, plan, 13);
  const auto report = verify_design(cfg, channel, design);
  for (const auto& bs : report.per_bs) {
    CHECK(bs.ici_dim == 0);
    CHECK(bs.decodable);
  }
  CHECK(report.pass);
}

TEST_CASE("two-stage designs stay orthogonal across stages") {
  const auto cfg = make_config(2, 2, 7, 4);
  const auto plan = make_plan(cfg);
  REQUIRE(plan.stages.size() == 2);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto channel = sample_channel(cfg, seed);
    const auto design = design_network(cfg, channel, plan, seed + 70);
    CHECK(design.stage_streams == std::vector<int>{1, 1});
    CHECK(design.total_streams == 2);
    for (const auto& v : design.precoders) {
      REQUIRE(v.cols() == 2);
      // Stage-2 column orthogonal to the stage-1 column.
      CHECK(std::abs((v.col(0).adjoint() * v.col(1))(0, 0)) < 1e-8);
      CHECK(numerical_rank(v) == 2);
    }
    const auto report = verify_design(cfg, channel, design);
    for (const auto& bs : report.per_bs) {
      CHECK(bs.desired_dim == 4);
      CHECK(bs.ici_dim == 3);  // 1 aligned (stage 1) + 2 unaligned (stage 2)
      CHECK(bs.decodable);     // 4 + 3 = 7 = M_r, exactly filled
    }
    CHECK(report.predicted_ici == Rational(3));
    CHECK(report.pass);
  }
}

TEST_CASE("fractional plans floor to a working integer design") {
  // Planned d = 8/5; the constructive path realizes d_int = 1 with slack.
  const auto cfg = make_config(2, 3, 8, 4);
  const auto plan = make_plan(cfg);
  REQUIRE(plan.stage1().params.streams == Rational(8, 5));
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto channel = sample_channel(cfg, seed);
    const auto design = design_network(cfg, channel, plan, seed + 40);
    CHECK(design.total_streams == 1);
    const auto report = verify_design(cfg, channel, design);
    for (const auto& bs : report.per_bs) {
      CHECK(bs.desired_dim == 3);
      CHECK(bs.ici_dim == 2);  // 3 * 1 * (2/3) per aligning cell
      CHECK(bs.decodable);
    }
    CHECK(report.predicted_ici == Rational(2));
    CHECK(report.pass);
  }
}

TEST_CASE("symmetric configs see identical interference at every BS") {
  for (const auto cfg : {make_config(3, 2, 6, 6), make_config(3, 2, 4, 4)}) {
    const auto plan = make_plan(cfg);
    if (!plan.stage1().params.streams.is_integer()) continue;
    const auto channel = sample_channel(cfg, 21);
    const auto design = design_network(cfg, channel, plan, 22);
    const auto report = verify_design(cfg, channel, design);
    for (std::size_t bs = 1; bs < report.per_bs.size(); ++bs)
      CHECK(report.per_bs[bs].ici_dim == report.per_bs[0].ici_dim);
  }
}

TEST_CASE("span-collapse oracle") {
  // Full elimination: every matrix is forced to zero.
  CHECK(span_collapse_check(2, 0, 2, 6, 3, 1));
  // No constraints: disjoint generic subspaces add up.
  CHECK(span_collapse_check(3, 3, 2, 8, 2, 2));
  // Constrained middle case: exactly free_count * rank.
  CHECK(span_collapse_check(4, 2, 2, 8, 2, 3));
  // Row-limited case: the ambient space caps the span.
  CHECK(span_collapse_check(4, 3, 2, 4, 2, 4));
  CHECK_THROWS_AS(span_collapse_check(2, 3, 1, 4, 4, 5), Error);
}

TEST_CASE("coefficient-rank oracle") {
  // The square 8x8 case from a 4-to-2 compression at two receivers.
  CHECK(stacked_rank_check(4, 2, 2, 2, 2, 1));
  // The 8x12 worked-example shape.
  CHECK(stacked_rank_check(3, 1, 1, 4, 4, 2));
  CHECK_THROWS_AS(stacked_rank_check(2, 1, 1, 2, 5, 3), Error);
  try {
    stacked_rank_check(2, 1, 1, 2, 5, 3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionViolated);
  }
}

TEST_CASE("multi-target and partial zero-forcing designs verify exactly") {
  struct Case {
    int cells, users, rx, tx;
    int expect_desired, expect_ici;
  };
  // (3,2,8,9): groups of 2 aligned at both neighbours; (3,3,5,7): groups of 3;
  // (3,1,2,3): per-user nulling at one neighbour, the other left unaligned;
  // (3,3,12,13): three systems per cell, two streams each.
  const Case cases[] = {{3, 2, 8, 9, 4, 4}, {3, 3, 5, 7, 3, 2}, {3, 1, 2, 3, 1, 1},
                        {3, 3, 12, 13, 6, 6}};
  for (const auto& c : cases) {
    const auto cfg = make_config(c.cells, c.users, c.rx, c.tx);
    const auto plan = make_plan(cfg);
    REQUIRE(plan.stage1().params.streams.is_integer());
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto channel = sample_channel(cfg, seed);
      const auto design = design_network(cfg, channel, plan, seed + 99);
      const auto report = verify_design(cfg, channel, design);
      for (const auto& bs : report.per_bs) {
        CHECK(bs.desired_dim == c.expect_desired);
        CHECK(bs.ici_dim == c.expect_ici);
        CHECK(bs.decodable);
      }
      CHECK(report.pass);
    }
  }
}

TEST_CASE("every integral plan on the grid is constructively realizable") {
  int designed = 0;
  for (int cells = 1; cells <= 3; ++cells)
    for (int users = 1; users <= 4; ++users)
      for (int rx = 1; rx <= 8; ++rx)
        for (int tx = 1; tx <= 8; ++tx) {
          const auto cfg = make_config(cells, users, rx, tx);
          const auto plan = make_plan(cfg);
          bool integral = true;
          for (const auto& st : plan.stages)
            if (!st.params.streams.is_integer()) integral = false;
          if (!integral || plan.stage1().params.streams.floor() < 1) continue;
          ++designed;
          for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const auto channel = sample_channel(cfg, seed);
            const auto design = design_network(cfg, channel, plan, seed + 100);
            const auto report = verify_design(cfg, channel, design);
            CHECK(report.pass);
          }
        }
  CHECK(designed > 250);  // the grid really does contain this many integral plans
}

TEST_CASE("measured interference meets the integer accounting") {
  // Configs where each stage's per-cell aligned contribution is integral.
  for (const auto cfg : {make_config(2, 2, 6, 6), make_config(2, 2, 7, 4)}) {
    const auto plan = make_plan(cfg);
    const auto channel = sample_channel(cfg, 31);
    const auto design = design_network(cfg, channel, plan, 32);
    const auto report = verify_design(cfg, channel, design);
    REQUIRE(report.predicted_ici.is_integer());
    for (const auto& bs : report.per_bs)
      CHECK(Rational(bs.ici_dim) == report.predicted_ici);
  }
}
