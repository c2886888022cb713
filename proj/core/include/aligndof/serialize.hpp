// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aligndof/dof_plan.hpp"
#include "aligndof/network.hpp"
#include "aligndof/orchestrator.hpp"

namespace aligndof {

// Complex entries serialize as two-element arrays [re, im]; matrices as
// arrays of rows; rationals as "p" / "p/q" strings with a decimal companion
// where a human reads the file.

std::string format_decimal(const Rational& value);  // 15 significant digits
std::string format_decimal(double value);

std::string to_json(const ChannelRealization& channel, int indent = -1);
ChannelRealization channel_from_json(const std::string& text);

std::string to_json(const PrecoderSet& set, std::uint64_t coeff_seed,
                    const std::vector<int>& user_subset, int indent = -1);

std::string to_json(const Plan& plan, int indent = -1);
Plan plan_from_json(const std::string& text);

std::string to_json(const NetworkDesign& design, int indent = -1);
NetworkDesign design_from_json(const std::string& text);

std::string to_json(const VerificationReport& report, int indent = -1);

/// Flattened one-line form for sweep aggregation.
std::string verification_csv_header(int cells);
std::string verification_csv_row(const NetworkDesign& design, const VerificationReport& report);

/// One row of a DoF comparison sweep (all values analytic).
struct SweepRow {
  int axis = 0;
  NetworkConfig config;
  Rational proposed;
  std::optional<Rational> upper;
  Rational cos_dof;
  std::optional<Rational> lee;
  std::optional<Rational> lcell;
  Rational decom;
  Rational proper;
  Region region = Region::Undefined;
};

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);
std::string sweep_rows_json(const std::vector<SweepRow>& rows, int indent = -1);

}  // namespace aligndof
