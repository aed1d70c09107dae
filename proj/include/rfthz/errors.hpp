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

#include <stdexcept>
#include <string>

namespace rfthz {

/// Base class of all errors raised by the simulator. `name()` is the stable
/// identifier printed by the CLI before exiting with a nonzero status.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& what) : Error("InvalidConfig", what) {}
};

struct PlacementInfeasible : Error {
    explicit PlacementInfeasible(const std::string& what) : Error("PlacementInfeasible", what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch", what) {}
};

struct InvalidSpec : Error {
    explicit InvalidSpec(const std::string& what) : Error("InvalidSpec", what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("IoError", what) {}
};

}  // namespace rfthz
