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
#include <random>

namespace rfthz {

/// Purposes that get their own random substream. Adding a new purpose or a
/// new trial never perturbs the draws of an existing (purpose, trial) pair.
enum class Stream : std::uint32_t {
    kRfPlacement = 1,
    kThzPlacement = 2,
    kUePlacement = 3,
    kFading = 4,
    kLstdTies = 5,
};

/// Seeded generator for one (master seed, purpose, trial) triple. Built on
/// mt19937_64 and seed_seq, both of which have fully specified output, and
/// converts bits to doubles by hand so draws match across standard libraries.
class Rng {
public:
    Rng(std::uint64_t master_seed, Stream stream, std::uint64_t trial);

    /// Uniform on [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Unit-mean exponential, strictly positive.
    double exponential();
    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace rfthz
