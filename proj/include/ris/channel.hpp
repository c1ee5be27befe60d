// SPDX-License-Identifier: Apache-2.0
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

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

#include "ris/config.hpp"
#include "ris/rng.hpp"

namespace ris {

using cplx = std::complex<double>;

// One draw of every channel coefficient of the scenario.
struct ChannelRealization {
    std::vector<cplx> h_si;  // source -> RIS element n
    std::vector<cplx> h_id;  // RIS element n -> destination
    std::optional<cplx> h_sd;
};

// Normalized magnitude |g_n| together with the phase error left after the
// element's phase shift has been applied.
struct CascadedCoefficient {
    double magnitude = 0.0;
    double residual_phase = 0.0;
};

// Normalized cascaded magnitude and the continuous phase shift that co-phases it.
struct CascadeTerm {
    double magnitude = 0.0;
    double optimal_phase = 0.0;  // in (-pi, pi]
};

// Wraps an angle to (-pi, pi].
inline double wrap_phase(double phase) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::remainder(phase, two_pi);  // [-pi, pi]
    if (w <= -std::numbers::pi)
        w += two_pi;
    return w;
}

// arg(0) is defined as 0.
inline double safe_arg(cplx z) {
    if (z == cplx{0.0, 0.0})
        return 0.0;
    return wrap_phase(std::arg(z));
}

// Circularly-symmetric complex Gaussian with E|z|^2 = variance.
inline cplx draw_circular_gaussian(double variance, RngStream& rng) {
    const double sigma = std::sqrt(0.5 * variance);
    const double re = rng.normal();
    const double im = rng.normal();
    return {sigma * re, sigma * im};
}

inline ChannelRealization draw_realization(const SystemConfig& cfg, RngStream& rng) {
    ChannelRealization real;
    const auto n = static_cast<std::size_t>(cfg.n_elements);
    real.h_si.reserve(n);
    real.h_id.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        real.h_si.push_back(draw_circular_gaussian(cfg.omega_s, rng));
        real.h_id.push_back(draw_circular_gaussian(cfg.omega_i, rng));
    }
    if (cfg.direct_link)
        real.h_sd = draw_circular_gaussian(cfg.omega_d, rng);
    return real;
}

// Cascaded magnitudes |h_SI h_ID| / sqrt(Omega_S Omega_I) and optimal phases
// -arg(h_SI h_ID), shifted by arg(h_SD) when the direct link is present.
inline std::vector<CascadeTerm> cascade(const SystemConfig& cfg, const ChannelRealization& real) {
    const double norm = 1.0 / std::sqrt(cfg.omega_s * cfg.omega_i);
    const double reference = (cfg.direct_link && real.h_sd) ? safe_arg(*real.h_sd) : 0.0;
    std::vector<CascadeTerm> terms;
    terms.reserve(real.h_si.size());
    for (std::size_t i = 0; i < real.h_si.size(); ++i) {
        const cplx product = real.h_si[i] * real.h_id[i];
        terms.push_back({std::abs(product) * norm, wrap_phase(reference - safe_arg(product))});
    }
    return terms;
}

// Magnitude of one normalized cascaded coefficient sampled straight from its law:
// |g|^2 is the product of two independent unit exponentials.
inline double sample_cascaded_magnitude(RngStream& rng) {
    return std::sqrt(std::log(rng.uniform()) * std::log(rng.uniform()));
}

} // namespace ris
