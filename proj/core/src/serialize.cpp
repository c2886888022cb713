// SPDX-License-Identifier: Apache-2.0
#include "aligndof/serialize.hpp"

#include <cstdio>
#include <json.hpp>

namespace aligndof {

using nlohmann::json;

namespace {

json complex_to_json(const std::complex<double>& z) { return json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows > 0 ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(j.at(r).at(c));
  return m;
}

json config_to_json(const NetworkConfig& cfg) {
  return json{{"cells", cfg.cells},
              {"users_per_cell", cfg.users_per_cell},
              {"bs_antennas", cfg.bs_antennas},
              {"user_antennas", cfg.user_antennas}};
}

NetworkConfig config_from_json(const json& j) {
  return make_config(j.at("cells").get<int>(), j.at("users_per_cell").get<int>(),
                     j.at("bs_antennas").get<int>(), j.at("user_antennas").get<int>());
}

json rational_to_json(const Rational& r) { return json(r.str()); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  return Rational::parse(j.get<std::string>());
}

std::string dump(const json& j, int indent) { return indent < 0 ? j.dump() : j.dump(indent); }

json params_to_json(const SchemeParams& p) {
  return json{{"group_size", p.group_size},
              {"subset_size", p.subset_size},
              {"target_count", p.target_count},
              {"streams", rational_to_json(p.streams)},
              {"streams_decimal", p.streams.to_double()}};
}

SchemeParams params_from_json(const json& j) {
  return SchemeParams{j.at("group_size").get<int>(), j.at("subset_size").get<int>(),
                      j.at("target_count").get<int>(), rational_from_json(j.at("streams"))};
}

json plan_to_json_obj(const Plan& plan) {
  json stages = json::array();
  for (const auto& st : plan.stages)
    stages.push_back(json{{"params", params_to_json(st.params)},
                          {"ici", rational_to_json(st.ici)},
                          {"rx_avail", rational_to_json(st.rx_avail)},
                          {"tx_avail", rational_to_json(st.tx_avail)},
                          {"extrapolated", st.extrapolated}});
  return json{{"config", config_to_json(plan.config)},
              {"interference_free", plan.interference_free},
              {"stages", std::move(stages)},
              {"per_user", rational_to_json(plan.per_user)},
              {"total", rational_to_json(plan.total)},
              {"total_decimal", plan.total.to_double()},
              {"ici_total", rational_to_json(plan.ici_total)},
              {"rx_left", rational_to_json(plan.rx_left)},
              {"tx_left", rational_to_json(plan.tx_left)},
              {"extension_factor", plan.extension_factor}};
}

Plan plan_from_json_obj(const json& j) {
  Plan plan;
  plan.config = config_from_json(j.at("config"));
  plan.interference_free = j.at("interference_free").get<bool>();
  for (const auto& st : j.at("stages"))
    plan.stages.push_back(PlanStage{params_from_json(st.at("params")),
                                    rational_from_json(st.at("ici")),
                                    rational_from_json(st.at("rx_avail")),
                                    rational_from_json(st.at("tx_avail")),
                                    st.at("extrapolated").get<bool>()});
  plan.per_user = rational_from_json(j.at("per_user"));
  plan.total = rational_from_json(j.at("total"));
  plan.ici_total = rational_from_json(j.at("ici_total"));
  plan.rx_left = rational_from_json(j.at("rx_left"));
  plan.tx_left = rational_from_json(j.at("tx_left"));
  plan.extension_factor = j.at("extension_factor").get<std::int64_t>();
  return plan;
}

}  // namespace

std::string format_decimal(const Rational& value) { return format_decimal(value.to_double()); }

std::string format_decimal(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", value);
  return buf;
}

std::string to_json(const ChannelRealization& channel, int indent) {
  json mats = json::object();
  const auto& cfg = channel.config();
  for (int bs = 1; bs <= cfg.cells; ++bs)
    for (int cell = 1; cell <= cfg.cells; ++cell)
      for (int user = 1; user <= cfg.users_per_cell; ++user) {
        const std::string key =
            std::to_string(bs) + "-" + std::to_string(cell) + "-" + std::to_string(user);
        mats[key] = matrix_to_json(channel.at(bs, cell, user));
      }
  const json j{{"config", config_to_json(cfg)},
               {"seed", channel.seed()},
               {"matrices", std::move(mats)}};
  return dump(j, indent);
}

ChannelRealization channel_from_json(const std::string& text) {
  const json j = json::parse(text);
  const NetworkConfig cfg = config_from_json(j.at("config"));
  const auto seed = j.at("seed").get<std::uint64_t>();
  std::vector<CMatrix> mats;
  mats.reserve(static_cast<std::size_t>(cfg.cells) * cfg.cells * cfg.users_per_cell);
  for (int bs = 1; bs <= cfg.cells; ++bs)
    for (int cell = 1; cell <= cfg.cells; ++cell)
      for (int user = 1; user <= cfg.users_per_cell; ++user) {
        const std::string key =
            std::to_string(bs) + "-" + std::to_string(cell) + "-" + std::to_string(user);
        mats.push_back(matrix_from_json(j.at("matrices").at(key)));
      }
  return ChannelRealization(cfg, seed, std::move(mats));
}

std::string to_json(const PrecoderSet& set, std::uint64_t coeff_seed,
                    const std::vector<int>& user_subset, int indent) {
  json precoders = json::array();
  for (const auto& v : set.precoders) precoders.push_back(matrix_to_json(v));
  const json j{{"d", set.streams},
               {"system_provenance", json{{"coeff_seed", coeff_seed}, {"user_subset", user_subset}}},
               {"precoders", std::move(precoders)}};
  return dump(j, indent);
}

std::string to_json(const Plan& plan, int indent) { return dump(plan_to_json_obj(plan), indent); }

Plan plan_from_json(const std::string& text) { return plan_from_json_obj(json::parse(text)); }

std::string to_json(const NetworkDesign& design, int indent) {
  json precoders = json::object();
  const int users = design.config.users_per_cell;
  for (int cell = 1; cell <= design.config.cells; ++cell)
    for (int user = 1; user <= users; ++user)
      precoders[std::to_string(cell) + "-" + std::to_string(user)] =
          matrix_to_json(design.precoder(cell, user));
  json systems = json::array();
  for (const auto& rec : design.systems)
    systems.push_back(json{{"stage", rec.stage},
                           {"cell", rec.cell},
                           {"users", rec.users},
                           {"targets", rec.targets},
                           {"coeff_seed", rec.coeff_seed},
                           {"draw_takers", rec.draw_takers}});
  const json j{{"config", config_to_json(design.config)},
               {"plan", plan_to_json_obj(design.plan)},
               {"channel_seed", design.channel_seed},
               {"design_seed", design.design_seed},
               {"stage_streams", design.stage_streams},
               {"total_streams", design.total_streams},
               {"control", design.control},
               {"precoders", std::move(precoders)},
               {"systems", std::move(systems)}};
  return dump(j, indent);
}

NetworkDesign design_from_json(const std::string& text) {
  const json j = json::parse(text);
  NetworkDesign design;
  design.config = config_from_json(j.at("config"));
  design.plan = plan_from_json_obj(j.at("plan"));
  design.channel_seed = j.at("channel_seed").get<std::uint64_t>();
  design.design_seed = j.at("design_seed").get<std::uint64_t>();
  design.stage_streams = j.at("stage_streams").get<std::vector<int>>();
  design.total_streams = j.at("total_streams").get<int>();
  design.control = j.at("control").get<bool>();
  const int users = design.config.users_per_cell;
  for (int cell = 1; cell <= design.config.cells; ++cell)
    for (int user = 1; user <= users; ++user)
      design.precoders.push_back(
          matrix_from_json(j.at("precoders").at(std::to_string(cell) + "-" + std::to_string(user))));
  for (const auto& rec : j.at("systems")) {
    SystemRecord r;
    r.stage = rec.at("stage").get<int>();
    r.cell = rec.at("cell").get<int>();
    r.users = rec.at("users").get<std::vector<int>>();
    r.targets = rec.at("targets").get<std::vector<int>>();
    r.coeff_seed = rec.at("coeff_seed").get<std::uint64_t>();
    r.draw_takers = rec.at("draw_takers").get<std::vector<std::vector<int>>>();
    design.systems.push_back(std::move(r));
  }
  return design;
}

std::string to_json(const VerificationReport& report, int indent) {
  json per_bs = json::array();
  for (const auto& v : report.per_bs)
    per_bs.push_back(json{{"desired_dim", v.desired_dim},
                          {"ici_dim", v.ici_dim},
                          {"decodable", v.decodable}});
  const json j{{"per_bs", std::move(per_bs)},
               {"precoder_rank", report.precoder_rank},
               {"predicted_ici", rational_to_json(report.predicted_ici)},
               {"planned_ici", rational_to_json(report.planned_ici)},
               {"pass", report.pass}};
  return dump(j, indent);
}

std::string verification_csv_header(int cells) {
  std::string h = "L,K,Mr,Nt,D_exact,D_decimal,stages";
  for (int bs = 1; bs <= cells; ++bs) {
    const std::string tag = "bs" + std::to_string(bs);
    h += "," + tag + "_desired," + tag + "_ici," + tag + "_decodable";
  }
  h += ",pass";
  return h;
}

std::string verification_csv_row(const NetworkDesign& design, const VerificationReport& report) {
  const auto& cfg = design.config;
  std::string row = std::to_string(cfg.cells) + "," + std::to_string(cfg.users_per_cell) + "," +
                    std::to_string(cfg.bs_antennas) + "," + std::to_string(cfg.user_antennas) +
                    "," + design.plan.total.str() + "," + format_decimal(design.plan.total) + "," +
                    std::to_string(design.stage_streams.size());
  for (const auto& v : report.per_bs)
    row += "," + std::to_string(v.desired_dim) + "," + std::to_string(v.ici_dim) + "," +
           (v.decodable ? "1" : "0");
  row += std::string(",") + (report.pass ? "1" : "0");
  return row;
}

std::string sweep_csv_header() {
  return "axis,L,K,Mr,Nt,D_proposed,D_proposed_exact,D_UB,COS,Lee,LCell,D_decom,D_proper,region";
}

std::string sweep_csv_row(const SweepRow& row) {
  auto opt = [](const std::optional<Rational>& r) {
    return r.has_value() ? format_decimal(*r) : std::string();
  };
  return std::to_string(row.axis) + "," + std::to_string(row.config.cells) + "," +
         std::to_string(row.config.users_per_cell) + "," + std::to_string(row.config.bs_antennas) +
         "," + std::to_string(row.config.user_antennas) + "," + format_decimal(row.proposed) +
         "," + row.proposed.str() + "," + opt(row.upper) + "," + format_decimal(row.cos_dof) +
         "," + opt(row.lee) + "," + opt(row.lcell) + "," + format_decimal(row.decom) + "," +
         format_decimal(row.proper) + "," + region_name(row.region);
}

std::string sweep_rows_json(const std::vector<SweepRow>& rows, int indent) {
  json arr = json::array();
  for (const auto& row : rows) {
    json j{{"axis", row.axis},
           {"config", config_to_json(row.config)},
           {"D_proposed", row.proposed.to_double()},
           {"D_proposed_exact", row.proposed.str()},
           {"COS", rational_to_json(row.cos_dof)},
           {"D_decom", rational_to_json(row.decom)},
           {"D_proper", rational_to_json(row.proper)},
           {"region", region_name(row.region)}};
    j["D_UB"] = row.upper.has_value() ? rational_to_json(*row.upper) : json(nullptr);
    j["Lee"] = row.lee.has_value() ? rational_to_json(*row.lee) : json(nullptr);
    j["LCell"] = row.lcell.has_value() ? rational_to_json(*row.lcell) : json(nullptr);
    arr.push_back(std::move(j));
  }
  return dump(arr, indent);
}

}  // namespace aligndof
