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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ris/channel.hpp"
#include "ris/errors.hpp"
#include "ris/rng.hpp"

namespace ris {

// Uniform L-point phase codebook {2 pi l / L : l = 0..L-1}.
class PhaseCodebook {
  public:
    explicit PhaseCodebook(int levels) : levels_(levels) {
        if (levels < 2)
            throw DomainError("PhaseCodebook: levels must be at least 2");
        points_.reserve(static_cast<std::size_t>(levels));
        for (int l = 0; l < levels; ++l)
            points_.push_back(2.0 * std::numbers::pi * l / levels);
    }

    int levels() const noexcept { return levels_; }
    const std::vector<double>& points() const noexcept { return points_; }
    double spacing() const noexcept { return 2.0 * std::numbers::pi / levels_; }

  private:
    int levels_;
    std::vector<double> points_;
};

struct QuantizedPhase {
    int index = 0;
    double phase = 0.0;  // codebook point
    double theta = 0.0;  // wrap(phase - phi_star), within [-pi/L, pi/L]
};

// Nearest codebook point in circular distance. Exact midpoints go to the lower index.
inline QuantizedPhase quantize(const PhaseCodebook& codebook, double phi_star) {
    if (!std::isfinite(phi_star))
        throw DomainError("quantize: phase must be finite");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(phi_star, two_pi);
    if (w < 0.0)
        w += two_pi;
    const int levels = codebook.levels();
    int below = static_cast<int>(std::floor(w / codebook.spacing()));
    below = std::clamp(below, 0, levels - 1);
    const int above = (below + 1) % levels;

    const auto& pts = codebook.points();
    const double d_below = std::abs(wrap_phase(w - pts[below]));
    const double d_above = std::abs(wrap_phase(w - pts[above]));
    int pick = below;
    if (d_above < d_below || (d_above == d_below && above < below))
        pick = above;
    return {pick, pts[pick], wrap_phase(pts[pick] - phi_star)};
}

// Quantizes every term's optimal phase and returns the resulting coefficients.
// Perfect phases leave a zero residual.
inline std::vector<CascadedCoefficient> apply_phase_shifts(const QuantLevels& levels,
                                                           const std::vector<CascadeTerm>& terms) {
    std::vector<CascadedCoefficient> out;
    out.reserve(terms.size());
    if (levels.is_perfect()) {
        for (const auto& t : terms)
            out.push_back({t.magnitude, 0.0});
        return out;
    }
    const PhaseCodebook codebook(levels.count());
    for (const auto& t : terms)
        out.push_back({t.magnitude, quantize(codebook, t.optimal_phase).theta});
    return out;
}

// Phase error of a nearest-point quantizer driven by a uniformly distributed
// optimal phase: Uniform[-pi/L, pi/L].
inline double sample_phase_error(int levels, RngStream& rng) {
    if (levels < 2)
        throw DomainError("sample_phase_error: levels must be at least 2");
    const double half = std::numbers::pi / levels;
    return rng.uniform(-half, half);
}

enum class StripSide { low, high };

// Two-level phase error restricted to a boundary strip of the given width:
// [-pi/2, -pi/2 + width] (low) or [pi/2 - width, pi/2] (high).
inline double conditional_phase_error(int levels, StripSide side, double width, RngStream& rng) {
    constexpr double half_pi = 0.5 * std::numbers::pi;
    if (levels != 2)
        throw DomainError("conditional_phase_error: defined for two levels only");
    if (!(width > 0.0) || width > half_pi)
        throw DomainError("conditional_phase_error: strip width must lie in (0, pi/2], got " +
                          std::to_string(width));
    const double u = rng.uniform();
    return side == StripSide::low ? -half_pi + width * u : half_pi - width * u;
}

} // namespace ris
