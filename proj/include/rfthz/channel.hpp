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
#include <vector>

#include "rfthz/config.hpp"
#include "rfthz/deployment.hpp"
#include "rfthz/matrix.hpp"

namespace rfthz {

inline constexpr double kSpeedOfLight = 3e8;        // m/s
inline constexpr double kBoltzmann = 1.380649e-23;  // J/K

/// Free-space reference gain c^2 / (4 pi f)^2.
double free_space_constant(double freq_hz);

/// RF link power gain gamma_R * rho^-alpha * chi, chi a unit-mean exponential
/// (Rayleigh) fading power draw.
double rf_pathgain(double rho_m, double alpha, double f_rf_hz, double fading_draw);

/// THz line-of-sight gain gamma_T * rho^-2 * exp(-k_a rho). No fading.
double thz_pathgain(double rho_m, double ka_per_m, double f_thz_hz);

/// Thermal noise over the THz band plus molecular-absorption noise re-radiated
/// from the serving link at distance rho_m, in watts.
double thz_noise(const NetworkConfig& cfg, double rho_m);

/// Thermal noise over the RF band, in watts.
double rf_noise(const NetworkConfig& cfg);

/// Per-link linear SINR with the massive-MIMO prefactor applied, and the
/// binary feasibility matrix l with l(u, b) = sinr(u, b) >= threshold.
struct SinrMatrix {
    Matrix<double> sinr;
    Matrix<std::uint8_t> feasible;
    std::vector<Tier> bs_tier;

    int n_ue() const { return static_cast<int>(sinr.rows()); }
    int n_bs() const { return static_cast<int>(sinr.cols()); }

    bool operator==(const SinrMatrix&) const = default;
};

/// U x n_mbs unit-mean exponential draws for the RF links of one trial.
Matrix<double> draw_fading(const NetworkConfig& cfg, std::uint64_t trial);

/// Every (u, b) entry is evaluated as if b served u. In full mode the
/// interference is the sum of received power from the other BSs of b's tier
/// (RF interferers keep their fading draws); noise-limited mode drops it.
/// Throws DimensionMismatch when fading is not n_ue x n_mbs.
SinrMatrix compute_sinr_matrix(const Deployment& d, const NetworkConfig& cfg,
                               const Matrix<double>& fading);

/// Rebuilds `feasible` from `sinr` with a new threshold.
void apply_threshold(SinrMatrix& m, double threshold);

std::uint64_t content_hash(const SinrMatrix& m);

/// Writes the SINR matrix to `path` and the feasibility matrix next to it
/// (`<stem>.feasible<ext>`). Rows are UEs; the header names each column
/// `<bs id>:<tier>`.
void write_sinr_csv(const SinrMatrix& m, const std::filesystem::path& path);

}  // namespace rfthz
