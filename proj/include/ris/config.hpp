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
#include <numbers>
#include <optional>
#include <string>

#include "ris/errors.hpp"

namespace ris {

// Number of phase quantization levels, or continuous (perfect) phases.
class QuantLevels {
  public:
    static QuantLevels perfect() { return QuantLevels(); }

    explicit QuantLevels(int levels) : levels_(levels) {
        if (levels < 2)
            throw DomainError("quantization levels must be at least 2, got " + std::to_string(levels));
    }

    bool is_perfect() const noexcept { return !levels_.has_value(); }

    // Precondition: !is_perfect().
    int count() const { return levels_.value(); }

    // Half-width pi/L of the phase-error interval; zero for perfect phases.
    double max_error() const;

    std::string to_string() const { return is_perfect() ? "perfect" : std::to_string(*levels_); }

    friend bool operator==(const QuantLevels&, const QuantLevels&) = default;

  private:
    QuantLevels() = default;
    std::optional<int> levels_;
};

struct SystemConfig {
    int n_elements = 1;
    QuantLevels levels = QuantLevels::perfect();
    double eta = 1.0;
    double omega_s = 1.0;
    double omega_i = 1.0;
    double rate_bpcu = 1.0;
    bool direct_link = false;
    double omega_d = 1.0;

    void validate() const {
        auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
        if (n_elements < 1)
            throw DomainError("n_elements must be at least 1");
        if (!(eta > 0.0 && eta <= 1.0))
            throw DomainError("eta must lie in (0, 1]");
        if (!positive(omega_s) || !positive(omega_i))
            throw DomainError("omega_s and omega_i must be positive");
        if (direct_link && !positive(omega_d))
            throw DomainError("omega_d must be positive");
        if (!positive(rate_bpcu))
            throw DomainError("rate_bpcu must be positive");
    }

    // Scenario used for the outage-versus-SNR curves: Omega_S = 1, Omega_I = 0.5,
    // eta = 0.8, R0 = 1 bpcu.
    static SystemConfig reference(int n_elements, QuantLevels levels, double rate_bpcu = 1.0) {
        SystemConfig cfg;
        cfg.n_elements = n_elements;
        cfg.levels = levels;
        cfg.eta = 0.8;
        cfg.omega_s = 1.0;
        cfg.omega_i = 0.5;
        cfg.rate_bpcu = rate_bpcu;
        return cfg;
    }
};

inline double QuantLevels::max_error() const {
    return is_perfect() ? 0.0 : std::numbers::pi / *levels_;
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

} // namespace ris
