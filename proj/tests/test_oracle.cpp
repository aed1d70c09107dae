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

#include "rfthz/errors.hpp"
#include "rfthz/metrics.hpp"
#include "rfthz/oracle.hpp"
#include "test_util.hpp"

using namespace rfthz;
using testing::make_sinr;

TEST_CASE("exhaustive search finds the balanced assignment") {
    // UEs 0 and 1 are forced onto BS 0; the two flexible UEs must go to BS 1.
    const auto s = make_sinr({{1, 0}, {1, 0}, {1, 1}, {1, 1}}, 0.5, 2);
    const auto r = exhaustive_min_std(s);
    CHECK(r.min_std == 0.0);
    CHECK(r.best.load == std::vector<int>{2, 2});
    CHECK(r.evaluated == 4u);
    CHECK(r.best.load_consistent());
}

TEST_CASE("exhaustive search skips UEs without options") {
    const auto s = make_sinr({{0, 0, 0}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}}, 0.5, 3);
    const auto r = exhaustive_min_std(s);
    CHECK(r.min_std == 0.0);
    CHECK_FALSE(r.best.serving_bs[0].has_value());
    CHECK(r.evaluated == 27u);
}

TEST_CASE("exhaustive search refuses oversized spaces") {
    const auto s = make_sinr({{1, 1}, {1, 1}, {1, 1}}, 0.5, 2);
    CHECK_THROWS_AS(exhaustive_min_std(s, 4), InvalidSpec);
    CHECK_NOTHROW(exhaustive_min_std(s, 8));
}

TEST_CASE("oracle comparison rows are ordered sensibly") {
    const auto rows = run_oracle(testing::tiny_config(), 10);
    REQUIRE(rows.size() == 10u);
    for (const auto& r : rows) {
        CHECK(r.n_bs == 4);
        CHECK(r.n_ue == 8);
        CHECK(r.lstd_std >= r.optimum_std - 1e-12);
    }
}
