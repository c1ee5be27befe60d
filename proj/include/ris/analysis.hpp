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

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ris/config.hpp"
#include "ris/errors.hpp"
#include "ris/montecarlo.hpp"
#include "ris/stats.hpp"

namespace ris {

inline constexpr const char* version = "0.1.0";

struct Provenance {
    std::uint64_t seed = 0;
    std::string timestamp;  // UTC, ISO 8601
    std::string code_version = version;
};

struct SweepPoint {
    double rho_db = 0.0;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::optional<OutageEstimate> estimate;  // empty when censored

    bool censored() const { return !estimate.has_value(); }
};

struct SweepResult {
    SystemConfig config;
    std::vector<SweepPoint> points;
    Provenance provenance;
};

struct CurvePoint {
    double rho_db;
    double value;
};

struct SlopeEstimate {
    double d_hat = 0.0;
    double fit_lo_db = 0.0;
    double fit_hi_db = 0.0;
    double r_squared = 0.0;
    std::size_t points_used = 0;
};

struct ProbabilityWindow {
    double low = 1e-6;
    double high = 1e-2;
};

namespace detail {

inline std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

inline void require_increasing(std::span<const double> grid) {
    if (grid.empty())
        throw DomainError("SNR grid is empty");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw DomainError("SNR grid must be strictly increasing");
}

} // namespace detail

// Evenly spaced dB grid from lo to hi inclusive (up to rounding of the step count).
inline std::vector<double> db_grid(double lo, double hi, double step) {
    if (!(step > 0.0) || hi < lo)
        throw DomainError("db_grid: need step > 0 and hi >= lo");
    const auto n = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i)
        grid[i] = lo + step * static_cast<double>(i);
    return grid;
}

// One outage estimate per grid point. Point i uses streams starting at i * 2^32.
// Points that fail the rare-event guard are kept as censored entries.
inline SweepResult sweep(const SystemConfig& cfg, std::span<const double> rho_grid_db,
                         std::size_t trials_per_point, std::uint64_t seed,
                         const EstimatorOptions& opts = {}) {
    cfg.validate();
    detail::require_increasing(rho_grid_db);
    SweepResult result{cfg, {}, {seed, detail::utc_timestamp(), version}};
    result.points.reserve(rho_grid_db.size());
    bool any = false;
    for (std::size_t i = 0; i < rho_grid_db.size(); ++i) {
        EstimatorOptions point_opts = opts;
        point_opts.stream_base = opts.stream_base + (static_cast<std::uint64_t>(i) << 32);
        const double rho_db = rho_grid_db[i];
        try {
            auto est = estimate_outage(cfg, db_to_linear(rho_db), trials_per_point, seed, point_opts);
            result.points.push_back({rho_db, est.trials, est.failures, est});
            any = true;
        } catch (const RareEventGuardError& e) {
            result.points.push_back({rho_db, e.trials(), e.failures(), std::nullopt});
        }
    }
    if (!any)
        throw EmptyResultError("every sweep point was censored by the rare-event guard");
    return result;
}

// Least-squares slope of -log10 p against log10 rho over points with p inside the window.
inline SlopeEstimate fit_diversity(std::span<const CurvePoint> curve, ProbabilityWindow window = {}) {
    std::vector<double> x;
    std::vector<double> y;
    double lo = 0.0, hi = 0.0;
    for (const auto& pt : curve) {
        if (!(pt.value > 0.0) || pt.value < window.low || pt.value > window.high)
            continue;
        if (x.empty())
            lo = pt.rho_db;
        hi = pt.rho_db;
        x.push_back(pt.rho_db / 10.0);
        y.push_back(-std::log10(pt.value));
    }
    if (x.size() < 3)
        throw FitError("fit_diversity: fewer than three points inside the probability window",
                       x.size());
    const auto fit = stats::least_squares(x, y);
    return {fit.slope, lo, hi, fit.r_squared, x.size()};
}

inline std::vector<CurvePoint> uncensored_curve(const SweepResult& result) {
    std::vector<CurvePoint> curve;
    for (const auto& pt : result.points)
        if (!pt.censored())
            curve.push_back({pt.rho_db, pt.estimate->p_hat});
    return curve;
}

inline SlopeEstimate fit_diversity(const SweepResult& result, ProbabilityWindow window = {}) {
    const auto curve = uncensored_curve(result);
    return fit_diversity(std::span<const CurvePoint>(curve), window);
}

enum class ReferenceKind {
    l2_bound,  // slope (N + 1) / 2
    full,      // slope N
};

inline double reference_slope(int n_elements, ReferenceKind kind) {
    return kind == ReferenceKind::full ? n_elements : 0.5 * (n_elements + 1);
}

// Power-law guide line value(rho) = anchor.value * (rho / rho_anchor)^(-slope).
inline std::vector<CurvePoint> reference_curves(int n_elements, ReferenceKind kind,
                                                std::span<const double> rho_grid_db,
                                                CurvePoint anchor) {
    if (n_elements < 1)
        throw DomainError("reference_curves: n_elements must be positive");
    const double slope = reference_slope(n_elements, kind);
    std::vector<CurvePoint> out;
    out.reserve(rho_grid_db.size());
    for (double db : rho_grid_db)
        out.push_back({db, anchor.value * std::pow(10.0, -slope * (db - anchor.rho_db) / 10.0)});
    return out;
}

// The last uncensored point of a sweep, used to anchor guide lines.
inline CurvePoint last_uncensored(const SweepResult& result) {
    for (auto it = result.points.rbegin(); it != result.points.rend(); ++it)
        if (!it->censored())
            return {it->rho_db, it->estimate->p_hat};
    throw EmptyResultError("sweep has no uncensored point");
}

} // namespace ris
