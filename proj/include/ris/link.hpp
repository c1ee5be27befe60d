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
#include <span>
#include <string>

#include "ris/channel.hpp"
#include "ris/config.hpp"
#include "ris/errors.hpp"

namespace ris {

// G_N = sum_n |g_n| e^{j Theta_n}.
struct AggregateG {
    cplx value{0.0, 0.0};
    int n_elements = 0;

    double power() const { return std::norm(value); }
};

// epsilon0 = (2^R0 - 1) / (eta^2 Omega_S Omega_I); outage iff |G_N|^2 < epsilon0 / rho.
struct OutageThreshold {
    double epsilon0;

    static OutageThreshold from(const SystemConfig& cfg) {
        return {(std::exp2(cfg.rate_bpcu) - 1.0) / (cfg.eta * cfg.eta * cfg.omega_s * cfg.omega_i)};
    }

    double at(double rho) const { return epsilon0 / rho; }
};

inline void require_snr(double rho) {
    if (!(rho > 0.0) || std::isnan(rho))
        throw DomainError("SNR must be positive, got " + std::to_string(rho));
}

inline AggregateG aggregate(std::span<const CascadedCoefficient> coeffs) {
    if (coeffs.empty())
        throw DomainError("aggregate: no coefficients");
    AggregateG g;
    for (const auto& c : coeffs)
        g.value += std::polar(c.magnitude, c.residual_phase);
    g.n_elements = static_cast<int>(coeffs.size());
    return g;
}

// Received SNR. With a direct link the residual phases are measured relative to
// arg(h_SD), so |h_SD| adds coherently as a nonnegative real.
inline double received_snr(const SystemConfig& cfg, const AggregateG& g, double rho,
                           std::optional<cplx> h_sd = std::nullopt) {
    require_snr(rho);
    const double scale = cfg.eta * std::sqrt(cfg.omega_s * cfg.omega_i);
    if (cfg.direct_link && h_sd)
        return rho * std::norm(std::abs(*h_sd) + scale * g.value);
    return rho * scale * scale * g.power();
}

// Whether log2(1 + gamma_D) < R0. Equality is not an outage.
inline bool outage_indicator(const SystemConfig& cfg, const AggregateG& g, double rho,
                             std::optional<cplx> h_sd = std::nullopt) {
    require_snr(rho);
    if (cfg.direct_link && h_sd)
        return received_snr(cfg, g, rho, h_sd) < std::exp2(cfg.rate_bpcu) - 1.0;
    return g.power() < OutageThreshold::from(cfg).at(rho);
}

// Lower bound on |g1 e^{j Theta1} + g2 e^{j Theta2}|^2 valid when both phase
// errors lie in [-pi/3, pi/3]: (|g2| - |g1|/2)^2 + 3/4 |g1|^2.
inline double bound_l3_lower(const CascadedCoefficient& g1, const CascadedCoefficient& g2) {
    constexpr double limit = std::numbers::pi / 3.0 + 1e-12;
    if (std::abs(g1.residual_phase) > limit || std::abs(g2.residual_phase) > limit)
        throw DomainError("bound_l3_lower: phase errors must lie in [-pi/3, pi/3]");
    const double d = g2.magnitude - 0.5 * g1.magnitude;
    return d * d + 0.75 * g1.magnitude * g1.magnitude;
}

// Lambda(|g1|^2, |g2|^2) = (|g1| - cos(2 theta) |g2|)^2 + 4 |g2|^2 / rho with
// theta = rho^{-1/2}; exceeds |G_2|^2 whenever Theta_2 - Theta_1 lies in [pi - 2 theta, pi].
inline double bound_l2_lambda(double g1_mag, double g2_mag, double rho) {
    require_snr(rho);
    const double theta = 1.0 / std::sqrt(rho);
    const double d = g1_mag - std::cos(2.0 * theta) * g2_mag;
    return d * d + 4.0 * g2_mag * g2_mag / rho;
}

struct SnrBounds {
    double lower;
    double upper;
};

// rho (|h_SD|^2 + eta^2 Omega_S Omega_I |G|^2) <= gamma_D <= rho (|h_SD| + eta sqrt(Omega_S Omega_I) |G|)^2.
// The lower side needs |arg G| <= pi/2.
inline SnrBounds direct_link_snr_bounds(const SystemConfig& cfg, const AggregateG& g, double rho,
                                        cplx h_sd) {
    require_snr(rho);
    const double scale = cfg.eta * std::sqrt(cfg.omega_s * cfg.omega_i);
    const double hd = std::abs(h_sd);
    const double gm = std::abs(g.value);
    return {rho * (hd * hd + scale * scale * gm * gm), rho * (hd + scale * gm) * (hd + scale * gm)};
}

} // namespace ris
