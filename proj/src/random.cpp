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

#include "rfthz/random.hpp"

#include <cmath>

namespace rfthz {

Rng::Rng(std::uint64_t master_seed, Stream stream, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(trial),
                      static_cast<std::uint32_t>(trial >> 32)};
    engine_.seed(seq);
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::exponential() {
    // 1 - u lies in (0, 1], so the log is finite and the draw is > 0 unless
    // u == 0 exactly; guard that single value.
    double x = -std::log1p(-uniform());
    return x > 0.0 ? x : 0x1.0p-53;
}

}  // namespace rfthz
