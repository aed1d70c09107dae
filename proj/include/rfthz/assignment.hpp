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

#include <optional>
#include <vector>

namespace rfthz {

/// UE -> BS mapping and the per-BS load vector L it induces.
struct Assignment {
    std::vector<std::optional<int>> serving_bs;
    std::vector<int> load;
    /// Load STD per LSTD pass, or per RBL move; empty for single-shot policies.
    std::vector<double> trace;

    /// Builds an assignment with `load` recomputed from `serving`.
    static Assignment from_serving(std::vector<std::optional<int>> serving, int n_bs);

    /// load[b] equals the number of UEs served by b, for every b.
    bool load_consistent() const;

    int unassociated_count() const;

    bool operator==(const Assignment&) const = default;
};

}  // namespace rfthz
