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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

namespace rfthz {

enum class Tier { kRf, kThz };

std::string_view to_string(Tier tier);

/// How co-tier interference enters the SINR denominator. Cross-tier
/// interference is always zero since the tiers use disjoint spectrum.
enum class InterferenceMode { kFull, kNoiseLimited };

std::string_view to_string(InterferenceMode mode);
InterferenceMode parse_interference_mode(std::string_view text);

/// Every physical and algorithmic parameter of one scenario. Defaults
/// reproduce the 10 MBS / 76 TBS / 2 km x 2 km reference network with 500
/// users.
struct NetworkConfig {
    double area_side_m = 2000.0;
    int n_mbs = 10;
    int n_tbs = 76;
    int n_ue = 500;

    double f_rf_hz = 300e6;
    double f_thz_hz = 300e9;
    double p_rf_w = 10.0;
    double p_thz_w = 1.0;
    int m_rf = 1000;
    int m_thz = 200;
    int s_rf = 10;
    int s_thz = 1;
    double w_rf_hz = 20e6;
    double w_thz_hz = 10e9;

    double alpha = 3.0;
    double ka_per_m = 0.0016;
    double min_dist_rf_m = 400.0;
    double min_dist_thz_m = 100.0;
    double sinr_threshold = 0.5;
    double std_epsilon = 1.0;
    double temperature_k = 290.0;
    std::uint64_t seed = 1;
    InterferenceMode interference_mode = InterferenceMode::kFull;

    // Association knobs.
    int max_iters = 100;
    int placement_attempt_cap = 10000;
    double demand_per_ue_hz = 0.0;  // 0: no per-UE demand cap, mu = U / B_tier
    double cre_bias_db_rf = 0.0;
    double cre_bias_db_thz = 10.0;

    int n_bs() const { return n_mbs + n_tbs; }
};

/// Throws InvalidConfig naming the first violated rule.
void validate(const NetworkConfig& cfg);

/// Massive-MIMO array gain per stream, (M - S + 1) / S.
double mimo_prefactor(int antennas, int streams);

void to_json(nlohmann::json& j, const NetworkConfig& cfg);
/// Missing keys keep their defaults; unknown keys are rejected so typos in
/// scenario files do not silently fall back to defaults.
void from_json(const nlohmann::json& j, NetworkConfig& cfg);

/// Reads a JSON scenario file and validates it.
NetworkConfig load_scenario(const std::filesystem::path& path);

}  // namespace rfthz
