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

#include "rfthz/oracle.hpp"

#include <limits>

#include <fmt/format.h>

#include "rfthz/association.hpp"
#include "rfthz/errors.hpp"
#include "rfthz/harness.hpp"
#include "rfthz/metrics.hpp"

namespace rfthz {

OracleResult exhaustive_min_std(const SinrMatrix& sinr, std::uint64_t max_assignments) {
    const std::size_t n_ue = sinr.sinr.rows();
    const std::size_t n_bs = sinr.sinr.cols();

    std::vector<std::vector<int>> options(n_ue);
    std::uint64_t space = 1;
    for (std::size_t u = 0; u < n_ue; ++u) {
        for (std::size_t b = 0; b < n_bs; ++b) {
            if (sinr.feasible(u, b)) options[u].push_back(static_cast<int>(b));
        }
        if (!options[u].empty()) {
            if (space > max_assignments / options[u].size()) {
                throw InvalidSpec(fmt::format("exhaustive search space exceeds {} assignments", max_assignments));
            }
            space *= options[u].size();
        }
    }

    // Odometer over the per-UE option lists.
    std::vector<std::size_t> digit(n_ue, 0);
    std::vector<int> load(n_bs, 0);
    for (std::size_t u = 0; u < n_ue; ++u) {
        if (!options[u].empty()) ++load[static_cast<std::size_t>(options[u][0])];
    }

    OracleResult res;
    res.min_std = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> best_digits;
    for (;;) {
        ++res.evaluated;
        const double s = load_std(load);
        if (s < res.min_std) {
            res.min_std = s;
            best_digits.assign(digit.begin(), digit.end());
        }
        std::size_t u = 0;
        for (; u < n_ue; ++u) {
            if (options[u].size() <= 1) continue;
            --load[static_cast<std::size_t>(options[u][digit[u]])];
            digit[u] = (digit[u] + 1) % options[u].size();
            ++load[static_cast<std::size_t>(options[u][digit[u]])];
            if (digit[u] != 0) break;
        }
        if (u == n_ue) break;
    }

    std::vector<std::optional<int>> serving(n_ue);
    for (std::size_t u = 0; u < n_ue; ++u) {
        if (!options[u].empty()) serving[u] = options[u][best_digits[u]];
    }
    res.best = Assignment::from_serving(std::move(serving), static_cast<int>(n_bs));
    return res;
}

std::vector<OracleRow> run_oracle(const NetworkConfig& cfg, int instances) {
    std::vector<OracleRow> rows;
    for (int i = 0; i < instances; ++i) {
        const auto trial = static_cast<std::uint64_t>(i);
        const SinrMatrix sinr = trial_sinr(cfg, trial);
        OracleRow row;
        row.instance = trial;
        row.n_ue = sinr.n_ue();
        row.n_bs = sinr.n_bs();
        row.lstd_std = load_std(lstd_associate(sinr, cfg, trial).load);
        row.max_sinr_std = load_std(max_sinr_associate(sinr).load);
        row.optimum_std = exhaustive_min_std(sinr).min_std;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace rfthz
