// SPDX-License-Identifier: Apache-2.0
//
// aligndof: plan, build and verify interference-aligned uplink precoders and
// reproduce the DoF comparison sweeps.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "aligndof/dof_plan.hpp"
#include "aligndof/network.hpp"
#include "aligndof/orchestrator.hpp"
#include "aligndof/serialize.hpp"

namespace {

using namespace aligndof;

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitConstructive = 4;
constexpr int kExitVerification = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::NoFeasiblePlan:
      return kExitInfeasible;
    case Errc::InfeasibleKappa:
    case Errc::InsufficientNullSpace:
    case Errc::RankDeficientPrecoder:
    case Errc::DirectionsBudgetExceeded:
    case Errc::ConstructiveFailure:
      return kExitConstructive;
    default:
      return kExitUsage;
  }
}

struct CommonFlags {
  int cells = 0;
  int users = 0;
  int bs_antennas = 0;
  int user_antennas = 0;
  double tol_rel = 1e-10;
  std::uint64_t seed = 1;
  int trials = 1;
  std::string out;
  std::string format = "csv";
};

void add_config_flags(CLI::App* cmd, CommonFlags& f, bool required = true) {
  auto* l = cmd->add_option("-L,--cells", f.cells, "number of cells");
  auto* k = cmd->add_option("-K,--users", f.users, "users per cell");
  auto* m = cmd->add_option("-M,--rx-antennas", f.bs_antennas, "receive antennas per BS");
  auto* n = cmd->add_option("-N,--tx-antennas", f.user_antennas, "transmit antennas per user");
  if (required) {
    l->required();
    k->required();
    m->required();
    n->required();
  }
}

Tolerance resolve_tolerance(const CLI::App* cmd, const CommonFlags& f) {
  if (cmd->count("--tol") > 0) return Tolerance(f.tol_rel);
  if (const char* env = std::getenv("ALIGNDOF_TOL")) return Tolerance(std::stod(env));
  return Tolerance(f.tol_rel);
}

void write_or_print(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::InvalidArgument, "cannot open output file " + path);
  out << content;
}

std::string stage_line(int index, const PlanStage& st) {
  std::ostringstream os;
  os << "stage " << index << ": K_t=" << st.params.group_size
     << " kappa_t=" << st.params.subset_size << " K_r=" << st.params.target_count
     << " d=" << st.params.streams.str() << " (" << format_decimal(st.params.streams)
     << ") n_ICI=" << st.ici.str();
  if (st.params.subset_size == 0) os << " [zero-forcing]";
  if (st.extrapolated) os << " [extrapolated]";
  return os.str();
}

int cmd_plan(const CommonFlags& f) {
  const NetworkConfig cfg = make_config(f.cells, f.users, f.bs_antennas, f.user_antennas);
  const Plan plan = make_plan(cfg);
  std::cout << "network: L=" << cfg.cells << " K=" << cfg.users_per_cell
            << " Mr=" << cfg.bs_antennas << " Nt=" << cfg.user_antennas << "\n";
  if (plan.interference_free) {
    std::cout << "single cell: interference-free, d=" << plan.stage1().params.streams.str()
              << "\n";
  } else {
    for (std::size_t i = 0; i < plan.stages.size(); ++i)
      std::cout << stage_line(static_cast<int>(i + 1), plan.stages[i]) << "\n";
  }
  std::cout << "total DoF D = " << plan.total.str() << " (" << format_decimal(plan.total) << ")\n";
  std::cout << "per-BS ICI = " << plan.ici_total.str() << "\n";
  try {
    std::cout << "upper bound D_UB = "
              << upper_bound(cfg.cells, cfg.bs_antennas, cfg.user_antennas).str() << "\n";
  } catch (const Error&) {
    std::cout << "upper bound D_UB = undefined\n";
  }
  if (plan.extension_factor > 1)
    std::cout << "symbol extension factor = " << plan.extension_factor << "\n";
  return 0;
}

std::string verification_summary(const NetworkDesign& design, const VerificationReport& report) {
  std::ostringstream os;
  for (std::size_t bs = 0; bs < report.per_bs.size(); ++bs) {
    const auto& v = report.per_bs[bs];
    os << "BS " << bs + 1 << ": desired dim " << v.desired_dim << ", ICI dim " << v.ici_dim
       << ", " << (v.decodable ? "decodable" : "NOT decodable") << "\n";
  }
  os << "predicted per-BS ICI (integer streams): " << report.predicted_ici.str() << "\n";
  os << "streams per user: " << design.total_streams << "\n";
  os << (report.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

int cmd_design(const CommonFlags& f, std::uint64_t design_seed, const Tolerance& tol) {
  const NetworkConfig cfg = make_config(f.cells, f.users, f.bs_antennas, f.user_antennas);
  const Plan plan = make_plan(cfg);
  bool fractional = false;
  for (const auto& st : plan.stages)
    if (!st.params.streams.is_integer()) fractional = true;
  if (fractional && plan.stage1().params.streams.floor() >= 1)
    std::cout << "note: d = " << plan.stage1().params.streams.str()
              << " requires symbol extension; using d_int = "
              << plan.stage1().params.streams.floor() << "\n";

  const ChannelRealization channel = sample_channel(cfg, f.seed);
  const NetworkDesign design = design_network(cfg, channel, plan, design_seed, tol);
  const VerificationReport report = verify_design(cfg, channel, design, tol);
  if (!f.out.empty()) {
    write_or_print(f.out, to_json(design, 2));
    std::cout << "design written to " << f.out << "\n";
  }
  std::cout << verification_summary(design, report);
  if (!report.pass) return kExitConstructive;
  return fractional ? kExitConstructive : 0;
}

int cmd_verify(const CommonFlags& f, const std::string& design_path, bool control,
               std::uint64_t design_seed, const Tolerance& tol) {
  NetworkConfig cfg;
  Plan plan;
  std::optional<NetworkDesign> stored;
  if (!design_path.empty()) {
    std::ifstream in(design_path, std::ios::binary);
    if (!in) fail(Errc::InvalidArgument, "cannot read design file " + design_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    stored = design_from_json(buffer.str());
    cfg = stored->config;
    plan = stored->plan;
  } else {
    cfg = make_config(f.cells, f.users, f.bs_antennas, f.user_antennas);
    plan = make_plan(cfg);
  }

  int passed = 0;
  for (int t = 0; t < f.trials; ++t) {
    const std::uint64_t channel_seed = f.seed + static_cast<std::uint64_t>(t);
    bool ok = false;
    std::string detail;
    try {
      if (stored.has_value() && f.trials == 1 && !control) {
        // Re-verify the stored design against its own recorded channel.
        const ChannelRealization channel = sample_channel(cfg, stored->channel_seed);
        const VerificationReport report = verify_design(cfg, channel, *stored, tol);
        ok = report.pass;
      } else {
        const ChannelRealization channel = sample_channel(cfg, channel_seed);
        NetworkDesign design =
            control ? make_random_design(
                          cfg, static_cast<int>(plan.stage1().params.streams.floor()),
                          design_seed + static_cast<std::uint64_t>(t))
                    : design_network(cfg, channel, plan,
                                     design_seed + static_cast<std::uint64_t>(t), tol);
        const VerificationReport report = verify_design(cfg, channel, design, tol);
        ok = report.pass;
        if (!ok) {
          std::ostringstream os;
          for (const auto& v : report.per_bs)
            os << " [desired " << v.desired_dim << " ici " << v.ici_dim
               << (v.decodable ? " ok" : " bad") << "]";
          detail = os.str();
        }
      }
    } catch (const Error& e) {
      detail = std::string(" error: ") + e.what();
    }
    if (ok) ++passed;
    std::cout << "trial " << t + 1 << ": " << (ok ? "pass" : "fail") << detail << "\n";
  }
  std::cout << passed << "/" << f.trials << " trials passed\n";
  return passed == f.trials ? 0 : kExitVerification;
}

struct SweepAxis {
  std::string name;  // K, M, N or L
  int lo = 0;
  int hi = 0;
};

SweepAxis parse_sweep(const std::string& text) {
  const auto eq = text.find('=');
  const auto dots = text.find("..");
  if (eq == std::string::npos || dots == std::string::npos || dots < eq)
    fail(Errc::InvalidArgument, "sweep spec must look like K=2..16");
  SweepAxis axis;
  axis.name = text.substr(0, eq);
  if (axis.name == "Mr") axis.name = "M";
  if (axis.name == "Nt") axis.name = "N";
  if (axis.name != "K" && axis.name != "M" && axis.name != "N" && axis.name != "L")
    fail(Errc::InvalidArgument, "sweep axis must be one of K, M, N, L");
  try {
    axis.lo = std::stoi(text.substr(eq + 1, dots - eq - 1));
    axis.hi = std::stoi(text.substr(dots + 2));
  } catch (const std::exception&) {
    fail(Errc::InvalidArgument, "cannot parse sweep bounds in '" + text + "'");
  }
  if (axis.lo > axis.hi) fail(Errc::InvalidArgument, "sweep range is empty");
  return axis;
}

SweepRow compute_sweep_row(NetworkConfig cfg, int axis_value) {
  SweepRow row;
  row.axis = axis_value;
  row.config = cfg;
  row.proposed = make_plan(cfg).total;
  const BoundsReport bounds = optimal_bounds(cfg);
  row.upper = bounds.upper;
  row.cos_dof = bounds.cos_dof;
  row.lee = bounds.lee;
  row.lcell = bounds.lcell;
  row.decom = bounds.decom;
  row.proper = bounds.proper;
  row.region = bounds.region;
  return row;
}

std::string plot_script(const std::string& csv_path, const std::string& axis_name) {
  std::ostringstream os;
  os << "#!/usr/bin/env python3\n"
     << "\"\"\"Render the DoF-versus-" << axis_name << " curves from " << csv_path << ".\"\"\"\n"
     << "import csv\n"
     << "import matplotlib.pyplot as plt\n\n"
     << "rows = list(csv.DictReader(open(\"" << csv_path << "\")))\n"
     << "axis = [float(r[\"axis\"]) for r in rows]\n"
     << "for name in [\"D_proposed\", \"D_UB\", \"COS\", \"Lee\", \"LCell\", \"D_decom\", "
        "\"D_proper\"]:\n"
     << "    pts = [(a, float(r[name])) for a, r in zip(axis, rows) if r[name] != \"\"]\n"
     << "    if pts:\n"
     << "        plt.plot([p[0] for p in pts], [p[1] for p in pts], marker=\"o\", label=name)\n"
     << "plt.xlabel(\"" << axis_name << "\")\n"
     << "plt.ylabel(\"total DoF\")\n"
     << "plt.legend()\n"
     << "plt.grid(True)\n"
     << "plt.savefig(\"" << csv_path << ".png\", dpi=150)\n"
     << "print(\"wrote " << csv_path << ".png\")\n";
  return os.str();
}

int cmd_sweep(const CommonFlags& f, const std::string& sweep_spec, bool plot) {
  const SweepAxis axis = parse_sweep(sweep_spec);
  NetworkConfig base;
  base.cells = f.cells > 0 ? f.cells : 2;
  base.users_per_cell = f.users > 0 ? f.users : 2;
  base.bs_antennas = f.bs_antennas > 0 ? f.bs_antennas : 1;
  base.user_antennas = f.user_antennas > 0 ? f.user_antennas : 1;

  std::vector<int> values;
  for (int v = axis.lo; v <= axis.hi; ++v) values.push_back(v);

  std::vector<std::future<SweepRow>> futures;
  futures.reserve(values.size());
  for (int v : values) {
    NetworkConfig cfg = base;
    if (axis.name == "K") cfg.users_per_cell = v;
    if (axis.name == "M") cfg.bs_antennas = v;
    if (axis.name == "N") cfg.user_antennas = v;
    if (axis.name == "L") cfg.cells = v;
    make_config(cfg.cells, cfg.users_per_cell, cfg.bs_antennas, cfg.user_antennas);
    futures.push_back(std::async(std::launch::async, compute_sweep_row, cfg, v));
  }
  std::vector<SweepRow> rows;
  rows.reserve(futures.size());
  for (auto& fut : futures) rows.push_back(fut.get());

  std::string content;
  if (f.format == "json") {
    content = sweep_rows_json(rows, 2) + "\n";
  } else {
    content = sweep_csv_header() + "\n";
    for (const auto& row : rows) content += sweep_csv_row(row) + "\n";
  }
  write_or_print(f.out, content);
  if (plot) {
    if (f.out.empty() || f.format != "csv")
      fail(Errc::InvalidArgument, "--plot needs --out with csv format");
    write_or_print(f.out + ".plot.py", plot_script(f.out, axis.name));
    std::cout << "plot script written to " << f.out << ".plot.py\n";
  }
  return 0;
}

int cmd_baselines(const CommonFlags& f) {
  const NetworkConfig cfg = make_config(f.cells, f.users, f.bs_antennas, f.user_antennas);
  const BoundsReport bounds = optimal_bounds(cfg);
  std::cout << "network: L=" << cfg.cells << " K=" << cfg.users_per_cell
            << " Mr=" << cfg.bs_antennas << " Nt=" << cfg.user_antennas << "\n";
  std::cout << "COS      = " << bounds.cos_dof.str() << "\n";
  if (bounds.lee.has_value()) std::cout << "Lee      = " << bounds.lee->str() << "\n";
  if (bounds.lcell.has_value()) std::cout << "LCell    = " << bounds.lcell->str() << "\n";
  std::cout << "D_decom  = " << bounds.decom.str() << " (" << format_decimal(bounds.decom)
            << ")\n";
  std::cout << "D_proper = " << bounds.proper.str() << " (" << format_decimal(bounds.proper)
            << ")\n";
  if (bounds.upper.has_value()) std::cout << "D_UB     = " << bounds.upper->str() << "\n";
  std::cout << "region   = " << region_name(bounds.region);
  if (bounds.region != Region::Undefined)
    std::cout << "  (antenna-ratio split points " << format_decimal(bounds.split_low) << ", "
              << format_decimal(bounds.split_high) << ")";
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interference-alignment DoF planner and verifier for multicell MIMO uplinks"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string design_path;
  std::string sweep_spec;
  std::uint64_t design_seed = 1000;
  bool control = false;
  bool plot = false;

  auto add_common = [&](CLI::App* cmd, bool cfg_required) {
    add_config_flags(cmd, flags, cfg_required);
    cmd->add_option("--tol", flags.tol_rel, "relative rank tolerance (env ALIGNDOF_TOL)");
    return cmd;
  };

  auto* plan_cmd = add_common(app.add_subcommand("plan", "search the best scheme parameters"), true);

  auto* design_cmd =
      add_common(app.add_subcommand("design", "build and verify precoders on one channel"), true);
  design_cmd->add_option("--seed", flags.seed, "channel seed");
  design_cmd->add_option("--design-seed", design_seed, "coefficient seed");
  design_cmd->add_option("--out", flags.out, "write the design JSON here");

  auto* verify_cmd =
      add_common(app.add_subcommand("verify", "batch-verify designs on fresh channels"), false);
  verify_cmd->add_option("--design", design_path, "design JSON to re-verify");
  verify_cmd->add_option("--seed", flags.seed, "base channel seed");
  verify_cmd->add_option("--trials", flags.trials, "number of fresh channel draws")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--design-seed", design_seed, "base coefficient seed");
  verify_cmd->add_flag("--control", control, "use random (non-aligned) precoders");

  auto* sweep_cmd = add_common(app.add_subcommand("sweep", "DoF comparison table over one axis"), false);
  sweep_cmd->add_option("--sweep", sweep_spec, "axis spec, e.g. K=2..16")->required();
  sweep_cmd->add_option("--seed", flags.seed, "base seed");
  sweep_cmd->add_option("--trials", flags.trials, "trials per point")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", flags.out, "output file (default stdout)");
  sweep_cmd->add_option("--format", flags.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_flag("--plot", plot, "also write a python plot script");

  auto* baselines_cmd =
      add_common(app.add_subcommand("baselines", "closed-form baseline DoF table"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (plan_cmd->parsed()) return cmd_plan(flags);
    if (design_cmd->parsed()) {
      const Tolerance tol = resolve_tolerance(design_cmd, flags);
      return cmd_design(flags, design_seed, tol);
    }
    if (verify_cmd->parsed()) {
      if (design_path.empty() && (flags.cells == 0 || flags.users == 0 || flags.bs_antennas == 0 ||
                                  flags.user_antennas == 0)) {
        std::cerr << "verify needs either --design or a full -L/-K/-M/-N config\n";
        return kExitUsage;
      }
      const Tolerance tol = resolve_tolerance(verify_cmd, flags);
      return cmd_verify(flags, design_path, control, design_seed, tol);
    }
    if (sweep_cmd->parsed()) return cmd_sweep(flags, sweep_spec, plot);
    if (baselines_cmd->parsed()) return cmd_baselines(flags);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
