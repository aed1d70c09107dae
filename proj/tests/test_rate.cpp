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

#include <cmath>

#include "rfthz/rate.hpp"
#include "test_util.hpp"

using namespace rfthz;

TEST_CASE("single-user rate") {
    CHECK(single_user_rate(1.0, 1e6) == 1e6);
    CHECK(single_user_rate(0.0, 1e6) == 0.0);
    CHECK(single_user_rate(3.0, 2e6) == 4e6);
}

TEST_CASE("equal bandwidth sharing") {
    NetworkConfig cfg;
    cfg.w_rf_hz = 30e6;

    SUBCASE("alone on a BS gets the full band") {
        const auto s = testing::make_sinr({{7.0, 0.0}}, 0.5, 2);
        const auto r = shared_rates(Assignment::from_serving({0}, 2), s, cfg);
        CHECK(r.rate_bps[0] == single_user_rate(7.0, 30e6));
        CHECK(r.tier[0] == Tier::kRf);
    }
    SUBCASE("two identical UEs halve the rate") {
        const auto s = testing::make_sinr({{5.0}, {5.0}}, 0.5, 1);
        const auto r = shared_rates(Assignment::from_serving({0, 0}, 1), s, cfg);
        CHECK(r.rate_bps[0] == single_user_rate(5.0, 30e6) / 2.0);
        CHECK(r.rate_bps[1] == r.rate_bps[0]);
    }
    SUBCASE("three UEs with sinr 1, 3, 15 share 30 MHz") {
        // (30 MHz / 3) * log2(1 + s) = {1, 2, 4} * 10 MHz
        const auto s = testing::make_sinr({{1.0}, {3.0}, {15.0}}, 0.5, 1);
        const auto r = shared_rates(Assignment::from_serving({0, 0, 0}, 1), s, cfg);
        CHECK(r.rate_bps[0] == doctest::Approx(10e6));
        CHECK(r.rate_bps[1] == doctest::Approx(20e6));
        CHECK(r.rate_bps[2] == doctest::Approx(40e6));
    }
    SUBCASE("unassociated UE gets zero and no tier") {
        const auto s = testing::make_sinr({{1.0}, {3.0}}, 0.5, 1);
        const auto r = shared_rates(Assignment::from_serving({0, std::nullopt}, 1), s, cfg);
        CHECK(r.rate_bps[1] == 0.0);
        CHECK_FALSE(r.tier[1].has_value());
    }
}

TEST_CASE("sharing conserves the spectral-efficiency sum and offloading helps the rest") {
    NetworkConfig cfg;
    const auto s = testing::make_sinr({{2.0, 9.0}, {4.0, 1.0}, {0.6, 3.0}, {30.0, 8.0}}, 0.5, 1);
    const auto a = Assignment::from_serving({1, 1, 1, 1}, 2);
    const auto r = shared_rates(a, s, cfg);
    double lhs = 0.0;
    double rhs = 0.0;
    for (std::size_t u = 0; u < 4; ++u) {
        lhs += r.rate_bps[u] * a.load[1] / cfg.w_thz_hz;
        rhs += std::log2(1.0 + s.sinr(u, 1));
    }
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));

    const auto moved = Assignment::from_serving({0, 1, 1, 1}, 2);
    const auto r2 = shared_rates(moved, s, cfg);
    for (std::size_t u = 1; u < 4; ++u) CHECK(r2.rate_bps[u] >= r.rate_bps[u]);
}
