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
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "rfthz/config.hpp"
#include "rfthz/errors.hpp"

using namespace rfthz;

TEST_CASE("reference defaults are valid") {
    NetworkConfig cfg;
    CHECK_NOTHROW(validate(cfg));
    CHECK(cfg.n_bs() == 86);
    CHECK(mimo_prefactor(1000, 10) == doctest::Approx(99.1));
    CHECK(mimo_prefactor(200, 1) == 200.0);
}

TEST_CASE("invalid configs are rejected") {
    NetworkConfig cfg;
    SUBCASE("streams exceed antennas") { cfg.s_thz = cfg.m_thz + 1; }
    SUBCASE("zero streams") { cfg.s_rf = 0; }
    SUBCASE("separation not below area side") { cfg.min_dist_rf_m = cfg.area_side_m; }
    SUBCASE("no users") { cfg.n_ue = 0; }
    SUBCASE("non-positive power") { cfg.p_thz_w = 0.0; }
    SUBCASE("non-positive bandwidth") { cfg.w_rf_hz = -1.0; }
    CHECK_THROWS_AS(validate(cfg), InvalidConfig);
}

TEST_CASE("scenario JSON round-trips and rejects unknown keys") {
    NetworkConfig cfg;
    cfg.n_ue = 123;
    cfg.seed = 0xdeadbeefcafeULL;
    cfg.interference_mode = InterferenceMode::kNoiseLimited;
    nlohmann::json j = cfg;
    const auto back = j.get<NetworkConfig>();
    CHECK(nlohmann::json(back) == j);

    CHECK_THROWS_AS(nlohmann::json({{"n_uee", 3}}).get<NetworkConfig>(), InvalidConfig);
    CHECK_THROWS_AS(nlohmann::json({{"interference_mode", "loud"}}).get<NetworkConfig>(), InvalidConfig);
    CHECK_THROWS_AS(nlohmann::json({{"n_ue", "many"}}).get<NetworkConfig>(), InvalidConfig);
}

TEST_CASE("load_scenario keeps defaults for omitted keys") {
    const auto path = std::filesystem::temp_directory_path() / "rfthz_partial_scenario.json";
    {
        std::ofstream(path) << R"({"n_ue": 42, "seed": 7})";
    }
    const auto cfg = load_scenario(path);
    CHECK(cfg.n_ue == 42);
    CHECK(cfg.seed == 7);
    CHECK(cfg.n_tbs == 76);
    std::filesystem::remove(path);

    CHECK_THROWS_AS(load_scenario("/nonexistent/rfthz.json"), IoError);
}

TEST_CASE("bundled scenarios load") {
    const std::filesystem::path dir = RFTHZ_SCENARIO_DIR;
    CHECK(load_scenario(dir / "reference.json").n_ue == 500);
    CHECK(load_scenario(dir / "tiny.json").n_bs() <= 4);
}
