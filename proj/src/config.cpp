// SPDX-License-Identifier: Apache-2.0
//
// rfthz: user association simulator for coexisting RF / THz downlink networks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "rfthz/config.hpp"

#include <fstream>
#include <set>

#include <fmt/format.h>

#include "rfthz/errors.hpp"

namespace rfthz {

std::string_view to_string(Tier tier) { return tier == Tier::kRf ? "RF" : "THz"; }

std::string_view to_string(InterferenceMode mode) {
    return mode == InterferenceMode::kFull ? "full" : "noise_limited";
}

InterferenceMode parse_interference_mode(std::string_view text) {
    if (text == "full") return InterferenceMode::kFull;
    if (text == "noise_limited") return InterferenceMode::kNoiseLimited;
    throw InvalidConfig(fmt::format("unknown interference_mode '{}'", text));
}

namespace {

void require(bool ok, std::string_view rule) {
    if (!ok) throw InvalidConfig(fmt::format("config rule violated: {}", rule));
}

}  // namespace

void validate(const NetworkConfig& c) {
    require(c.n_mbs >= 1 && c.n_tbs >= 1 && c.n_ue >= 1, "n_mbs, n_tbs, n_ue >= 1");
    require(c.area_side_m > 0, "area_side_m > 0");
    require(c.f_rf_hz > 0 && c.f_thz_hz > 0, "frequencies > 0");
    require(c.p_rf_w > 0 && c.p_thz_w > 0, "powers > 0");
    require(c.w_rf_hz > 0 && c.w_thz_hz > 0, "bandwidths > 0");
    require(c.s_rf >= 1 && c.s_rf <= c.m_rf, "1 <= s_rf <= m_rf");
    require(c.s_thz >= 1 && c.s_thz <= c.m_thz, "1 <= s_thz <= m_thz");
    require(c.alpha > 0, "alpha > 0");
    require(c.ka_per_m >= 0, "ka_per_m >= 0");
    require(c.min_dist_rf_m >= 0 && c.min_dist_rf_m < c.area_side_m,
            "0 <= min_dist_rf_m < area_side_m");
    require(c.min_dist_thz_m >= 0 && c.min_dist_thz_m < c.area_side_m,
            "0 <= min_dist_thz_m < area_side_m");
    require(c.sinr_threshold >= 0, "sinr_threshold >= 0");
    require(c.std_epsilon >= 0, "std_epsilon >= 0");
    require(c.temperature_k > 0, "temperature_k > 0");
    require(c.max_iters >= 1, "max_iters >= 1");
    require(c.placement_attempt_cap >= 1, "placement_attempt_cap >= 1");
    require(c.demand_per_ue_hz >= 0, "demand_per_ue_hz >= 0");
}

double mimo_prefactor(int antennas, int streams) {
    return static_cast<double>(antennas - streams + 1) / static_cast<double>(streams);
}

// Field list shared by both directions of the JSON mapping.
#define RFTHZ_CONFIG_FIELDS(X)                                                               \
    X(area_side_m) X(n_mbs) X(n_tbs) X(n_ue) X(f_rf_hz) X(f_thz_hz) X(p_rf_w) X(p_thz_w)    \
    X(m_rf) X(m_thz) X(s_rf) X(s_thz) X(w_rf_hz) X(w_thz_hz) X(alpha) X(ka_per_m)           \
    X(min_dist_rf_m) X(min_dist_thz_m) X(sinr_threshold) X(std_epsilon) X(temperature_k)    \
    X(seed) X(max_iters) X(placement_attempt_cap) X(demand_per_ue_hz) X(cre_bias_db_rf)     \
    X(cre_bias_db_thz)

void to_json(nlohmann::json& j, const NetworkConfig& cfg) {
    j = nlohmann::json::object();
#define X(name) j[#name] = cfg.name;
    RFTHZ_CONFIG_FIELDS(X)
#undef X
    j["interference_mode"] = std::string(to_string(cfg.interference_mode));
}

void from_json(const nlohmann::json& j, NetworkConfig& cfg) {
    if (!j.is_object()) throw InvalidConfig("scenario must be a JSON object");
    static const std::set<std::string> known = {
#define X(name) #name,
        RFTHZ_CONFIG_FIELDS(X)
#undef X
        "interference_mode"};
    for (const auto& [key, value] : j.items()) {
        if (!known.count(key)) throw InvalidConfig(fmt::format("unknown scenario key '{}'", key));
    }
    try {
#define X(name) \
    if (j.contains(#name)) j.at(#name).get_to(cfg.name);
        RFTHZ_CONFIG_FIELDS(X)
#undef X
    } catch (const nlohmann::json::exception& e) {
        throw InvalidConfig(fmt::format("bad scenario value: {}", e.what()));
    }
    if (j.contains("interference_mode")) {
        cfg.interference_mode = parse_interference_mode(j.at("interference_mode").get<std::string>());
    }
}

#undef RFTHZ_CONFIG_FIELDS

NetworkConfig load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError(fmt::format("cannot open scenario '{}'", path.string()));
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidConfig(fmt::format("scenario '{}' is not valid JSON: {}", path.string(), e.what()));
    }
    NetworkConfig cfg = j.get<NetworkConfig>();
    validate(cfg);
    return cfg;
}

}  // namespace rfthz
