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

// Outage estimation by direct simulation.
//
// Trials are split into fixed-size blocks and block b draws from the stream
// (seed, stream_base + b). Workers claim blocks dynamically but only integer
// failure counts are reduced, so an estimate depends on (seed, trials,
// block_size, stream_base) and never on the number of threads.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "ris/channel.hpp"
#include "ris/config.hpp"
#include "ris/errors.hpp"
#include "ris/link.hpp"
#include "ris/quantizer.hpp"
#include "ris/rng.hpp"
#include "ris/stats.hpp"

namespace ris {

enum class SimulationPath {
    // |g_n| from the product-of-exponentials law and Theta_n ~ U[-pi/L, pi/L].
    phase_error_shortcut,
    // Explicit h_SI, h_ID (and h_SD), nearest-point quantization of the optimal phases.
    full_channel,
};

struct EstimatorOptions {
    std::size_t block_size = std::size_t{1} << 16;
    unsigned threads = 0;  // 0: hardware concurrency
    std::size_t min_failures = 10;
    bool allow_rare = false;  // accept estimates below min_failures
    SimulationPath path = SimulationPath::phase_error_shortcut;
    std::uint64_t stream_base = 0;
};

struct OutageEstimate {
    std::size_t trials = 0;
    std::size_t failures = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
    double rho = 0.0;

    // Plug-in binomial standard error.
    double sigma() const { return stats::binomial_sigma(p_hat, trials); }
};

enum class EventKind { eps1, eps2 };

// One element's phase error in the low strip [-pi/2, -pi/2 + theta] and all
// others in the high strip [pi/2 - theta, pi/2]. eps1 is the two-element case.
struct EventSpec {
    EventKind kind = EventKind::eps2;
    int n_elements = 2;
    double theta = 0.1;

    static EventSpec at_snr(EventKind kind, int n_elements, double rho) {
        require_snr(rho);
        return {kind, n_elements, 1.0 / std::sqrt(rho)};
    }

    void validate() const {
        if (n_elements < 2)
            throw DomainError("EventSpec: at least two elements required");
        if (kind == EventKind::eps1 && n_elements != 2)
            throw DomainError("EventSpec: eps1 is defined for two elements");
        if (!(theta > 0.0) || theta > 0.5 * std::numbers::pi)
            throw DomainError("EventSpec: theta must lie in (0, pi/2], got " + std::to_string(theta));
    }
};

namespace detail {

template <typename BlockFn>
std::size_t count_in_blocks(std::size_t trials, std::uint64_t seed, const EstimatorOptions& opts,
                            BlockFn&& block_fn) {
    if (opts.block_size == 0)
        throw DomainError("block_size must be positive");
    const std::size_t n_blocks = (trials + opts.block_size - 1) / opts.block_size;
    std::vector<std::size_t> counts(n_blocks, 0);
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (std::size_t b = next++; b < n_blocks; b = next++) {
            const std::size_t begin = b * opts.block_size;
            const std::size_t len = std::min(opts.block_size, trials - begin);
            RngStream rng(seed, opts.stream_base + b);
            counts[b] = block_fn(rng, len);
        }
    };

    unsigned n_threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, n_blocks));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
    }
    std::size_t total = 0;
    for (auto c : counts)
        total += c;
    return total;
}

inline OutageEstimate make_estimate(std::size_t trials, std::size_t failures, std::uint64_t seed,
                                    double rho, const EstimatorOptions& opts) {
    if (failures < opts.min_failures && !opts.allow_rare)
        throw RareEventGuardError(trials, failures, opts.min_failures);
    const auto ci = stats::wilson_interval(failures, trials);
    return {trials, failures, static_cast<double>(failures) / static_cast<double>(trials),
            ci.low, ci.high, seed, rho};
}

inline void require_trials(std::size_t trials) {
    if (trials == 0)
        throw DomainError("at least one trial is required");
}

// Outage test shared by the trial kernels; g is the aggregate for one trial.
struct OutageTest {
    bool direct_link;
    double g_threshold;    // epsilon0 / rho, no direct link
    double snr_threshold;  // 2^R0 - 1
    double rho;
    double scale;          // eta sqrt(Omega_S Omega_I)

    OutageTest(const SystemConfig& cfg, double rho_)
        : direct_link(cfg.direct_link),
          g_threshold(OutageThreshold::from(cfg).at(rho_)),
          snr_threshold(std::exp2(cfg.rate_bpcu) - 1.0),
          rho(rho_),
          scale(cfg.eta * std::sqrt(cfg.omega_s * cfg.omega_i)) {}

    bool operator()(cplx g, double h_sd_mag) const {
        if (direct_link)
            return rho * std::norm(h_sd_mag + scale * g) < snr_threshold;
        return std::norm(g) < g_threshold;
    }
};

inline double sample_direct_magnitude(const SystemConfig& cfg, RngStream& rng) {
    return cfg.direct_link ? std::sqrt(cfg.omega_d * rng.exponential()) : 0.0;
}

inline std::size_t shortcut_block(const SystemConfig& cfg, const OutageTest& test, RngStream& rng,
                                  std::size_t len) {
    const bool perfect = cfg.levels.is_perfect();
    const double half = cfg.levels.max_error();
    std::size_t failures = 0;
    for (std::size_t t = 0; t < len; ++t) {
        double re = 0.0;
        double im = 0.0;
        for (int n = 0; n < cfg.n_elements; ++n) {
            const double m = sample_cascaded_magnitude(rng);
            // always consume the phase draw so perfect and quantized runs share magnitudes
            const double u = rng.uniform();
            if (perfect) {
                re += m;
            } else {
                const double th = half * (2.0 * u - 1.0);
                re += m * std::cos(th);
                im += m * std::sin(th);
            }
        }
        if (test({re, im}, sample_direct_magnitude(cfg, rng)))
            ++failures;
    }
    return failures;
}

inline std::size_t full_channel_block(const SystemConfig& cfg, const OutageTest& test,
                                      RngStream& rng, std::size_t len) {
    std::size_t failures = 0;
    for (std::size_t t = 0; t < len; ++t) {
        const ChannelRealization real = draw_realization(cfg, rng);
        const auto coeffs = apply_phase_shifts(cfg.levels, cascade(cfg, real));
        const AggregateG g = aggregate(coeffs);
        const double hd = real.h_sd ? std::abs(*real.h_sd) : 0.0;
        if (test(g.value, hd))
            ++failures;
    }
    return failures;
}

} // namespace detail

// Frequency estimate of Pr{|G_N|^2 < epsilon0 / rho} (or of gamma_D < 2^R0 - 1
// with a direct link), with a 95% Wilson interval.
inline OutageEstimate estimate_outage(const SystemConfig& cfg, double rho, std::size_t trials,
                                      std::uint64_t seed, const EstimatorOptions& opts = {}) {
    cfg.validate();
    require_snr(rho);
    detail::require_trials(trials);
    const detail::OutageTest test(cfg, rho);
    const std::size_t failures =
        detail::count_in_blocks(trials, seed, opts, [&](RngStream& rng, std::size_t len) {
            return opts.path == SimulationPath::full_channel
                       ? detail::full_channel_block(cfg, test, rng, len)
                       : detail::shortcut_block(cfg, test, rng, len);
        });
    return detail::make_estimate(trials, failures, seed, rho, opts);
}

// Draws the N phase errors of one trial conditioned on the event: the element
// in the low strip is chosen uniformly.
inline void sample_event_phases(const EventSpec& event, RngStream& rng, std::span<double> out) {
    const auto low = rng.below(static_cast<std::uint32_t>(event.n_elements));
    for (std::size_t n = 0; n < out.size(); ++n)
        out[n] = conditional_phase_error(2, n == low ? StripSide::low : StripSide::high, event.theta, rng);
}

// Outage probability conditioned on the event, for a two-level quantizer.
inline OutageEstimate estimate_conditional_outage(const SystemConfig& cfg, const EventSpec& event,
                                                  double rho, std::size_t trials, std::uint64_t seed,
                                                  const EstimatorOptions& opts = {}) {
    cfg.validate();
    event.validate();
    require_snr(rho);
    detail::require_trials(trials);
    if (cfg.levels.is_perfect() || cfg.levels.count() != 2)
        throw DomainError("conditional outage is defined for two quantization levels");
    if (cfg.n_elements != event.n_elements)
        throw DomainError("event and configuration disagree on the number of elements");
    const detail::OutageTest test(cfg, rho);
    const std::size_t failures =
        detail::count_in_blocks(trials, seed, opts, [&](RngStream& rng, std::size_t len) {
            std::vector<double> phases(static_cast<std::size_t>(cfg.n_elements));
            std::size_t count = 0;
            for (std::size_t t = 0; t < len; ++t) {
                sample_event_phases(event, rng, phases);
                cplx g{0.0, 0.0};
                for (double th : phases)
                    g += std::polar(sample_cascaded_magnitude(rng), th);
                if (test(g, detail::sample_direct_magnitude(cfg, rng)))
                    ++count;
            }
            return count;
        });
    return detail::make_estimate(trials, failures, seed, rho, opts);
}

// Pr{eps1} = 2 (theta/pi)^2, Pr{eps2} = N (theta/pi)^N under uniform two-level errors.
inline double event_probability(const EventSpec& event) {
    event.validate();
    const double r = event.theta / std::numbers::pi;
    if (event.kind == EventKind::eps1)
        return 2.0 * r * r;
    return event.n_elements * std::pow(r, event.n_elements);
}

// Membership of a vector of two-level phase errors in the event.
inline bool in_event(const EventSpec& event, std::span<const double> phases) {
    constexpr double half_pi = 0.5 * std::numbers::pi;
    if (phases.size() != static_cast<std::size_t>(event.n_elements))
        throw DomainError("in_event: phase vector length differs from n_elements");
    int low = 0;
    int high = 0;
    for (double th : phases) {
        if (th >= -half_pi && th <= -half_pi + event.theta)
            ++low;
        else if (th >= half_pi - event.theta && th <= half_pi)
            ++high;
    }
    return low == 1 && high == event.n_elements - 1;
}

struct EventFrequency {
    std::size_t trials = 0;
    std::size_t hits = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

// Monte-Carlo frequency of the event under unconditional Uniform[-pi/2, pi/2] errors.
inline EventFrequency event_frequency(const EventSpec& event, std::size_t trials, std::uint64_t seed,
                                      const EstimatorOptions& opts = {}) {
    event.validate();
    detail::require_trials(trials);
    const std::size_t hits =
        detail::count_in_blocks(trials, seed, opts, [&](RngStream& rng, std::size_t len) {
            std::vector<double> phases(static_cast<std::size_t>(event.n_elements));
            std::size_t count = 0;
            for (std::size_t t = 0; t < len; ++t) {
                for (double& th : phases)
                    th = sample_phase_error(2, rng);
                if (in_event(event, phases))
                    ++count;
            }
            return count;
        });
    const auto ci = stats::wilson_interval(hits, trials);
    return {trials, hits, static_cast<double>(hits) / static_cast<double>(trials), ci.low, ci.high};
}

struct LowerBoundEstimate {
    double event_probability = 0.0;
    OutageEstimate conditional;
    double value = 0.0;  // event_probability * conditional.p_hat
    double ci_low = 0.0;
    double ci_high = 0.0;
};

// Pr{eps2} * Pr{outage | eps2}, a lower bound on the two-level outage probability.
// theta defaults to rho^{-1/2}.
inline LowerBoundEstimate lower_bound_outage(const SystemConfig& cfg, double rho, std::size_t trials,
                                             std::uint64_t seed, const EstimatorOptions& opts = {},
                                             std::optional<double> theta = std::nullopt) {
    EventSpec event = EventSpec::at_snr(EventKind::eps2, cfg.n_elements, rho);
    if (theta)
        event.theta = *theta;
    const double pe = event_probability(event);
    const OutageEstimate cond = estimate_conditional_outage(cfg, event, rho, trials, seed, opts);
    return {pe, cond, pe * cond.p_hat, pe * cond.ci_low, pe * cond.ci_high};
}

} // namespace ris
