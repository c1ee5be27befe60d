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

// Command-line front end. Every subcommand writes a CSV file plus a key=value
// manifest next to it (<out>.manifest).
//
// Exit codes: 0 success, 2 usage error, 3 every point censored, 4 numeric failure.

#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ris/analysis.hpp"
#include "ris/config.hpp"
#include "ris/errors.hpp"
#include "ris/montecarlo.hpp"
#include "ris/specfun.hpp"

namespace ris::cli {

enum ExitCode : int { ok = 0, usage = 2, all_censored = 3, numeric = 4 };

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Shortest round-trip decimal representation, independent of the C locale.
inline std::string format_number(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, end);
}

inline std::string format_number(std::size_t v) { return std::to_string(v); }

// 64-bit FNV-1a, hex encoded.
inline std::string digest(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// Ordered key=value record; the canonical text of the resolved settings feeds the digest.
class Settings {
  public:
    void set(const std::string& key, const std::string& value) { entries_[key] = value; }
    void set(const std::string& key, double value) { entries_[key] = format_number(value); }

    std::string canonical() const {
        std::string out;
        for (const auto& [k, v] : entries_)
            out += k + "=" + v + "\n";
        return out;
    }

  private:
    std::map<std::string, std::string> entries_;
};

struct RunManifest {
    std::string command;
    std::string config_digest;
    std::uint64_t seed = 0;
    std::vector<std::string> output_paths;
    double duration = 0.0;
};

inline void write_manifest(const RunManifest& m, const Settings& settings, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write manifest " + path);
    f << "command=" << m.command << "\n";
    f << "config_digest=" << m.config_digest << "\n";
    f << "seed=" << m.seed << "\n";
    std::string outputs;
    for (const auto& p : m.output_paths)
        outputs += (outputs.empty() ? "" : ",") + p;
    f << "output_paths=" << outputs << "\n";
    f << "duration=" << format_number(m.duration) << "\n";
    f << "version=" << version << "\n";
    f << settings.canonical();
}

class CsvWriter {
  public:
    CsvWriter(const std::string& path, const std::string& header) : f_(path, std::ios::binary) {
        if (!f_)
            throw std::runtime_error("cannot write " + path);
        f_ << header << "\n";
    }

    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i)
            f_ << (i ? "," : "") << fields[i];
        f_ << "\n";
    }

  private:
    std::ofstream f_;
};

// Reads a flat key=value file; '#' starts a comment.
inline std::vector<std::string> config_file_arguments(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw UsageError("cannot read config file " + path);
    std::vector<std::string> args;
    std::string line;
    while (std::getline(f, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError("config line without '=': " + line);
        args.push_back("--" + trim(line.substr(0, eq)) + "=" + trim(line.substr(eq + 1)));
    }
    return args;
}

inline QuantLevels parse_levels(const std::string& text) {
    if (text == "perfect")
        return QuantLevels::perfect();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 2)
        throw UsageError("--levels must be an integer >= 2 or 'perfect', got '" + text + "'");
    return QuantLevels(value);
}

// Options shared by the simulation subcommands.
struct ScenarioArgs {
    int n_elements = 1;
    std::string levels = "perfect";
    double rate_bpcu = 1.0;
    double eta = 0.8;
    double omega_s = 1.0;
    double omega_i = 0.5;
    bool direct_link = false;
    double omega_d = 1.0;
    CLI::Option* omega_d_opt = nullptr;

    void attach(CLI::App& app) {
        app.add_option("--n-elements", n_elements, "Number of reflecting elements N")->capture_default_str();
        app.add_option("--levels", levels, "Quantization levels L, or 'perfect'")->capture_default_str();
        app.add_option("--rate-bpcu", rate_bpcu, "Target rate R0 in bits per channel use")->capture_default_str();
        app.add_option("--eta", eta, "Amplitude reflection coefficient")->capture_default_str();
        app.add_option("--omega-s", omega_s, "Variance of the source-RIS channel")->capture_default_str();
        app.add_option("--omega-i", omega_i, "Variance of the RIS-destination channel")->capture_default_str();
        app.add_flag("--direct-link", direct_link, "Include the source-destination link");
        omega_d_opt = app.add_option("--omega-d", omega_d, "Variance of the direct link");
    }

    SystemConfig resolve() const {
        if (omega_d_opt && omega_d_opt->count() > 0 && !direct_link)
            throw UsageError("--omega-d requires --direct-link");
        SystemConfig cfg;
        cfg.n_elements = n_elements;
        cfg.levels = parse_levels(levels);
        cfg.rate_bpcu = rate_bpcu;
        cfg.eta = eta;
        cfg.omega_s = omega_s;
        cfg.omega_i = omega_i;
        cfg.direct_link = direct_link;
        cfg.omega_d = omega_d;
        try {
            cfg.validate();
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        return cfg;
    }

    static void record(Settings& s, const SystemConfig& cfg) {
        s.set("n_elements", std::to_string(cfg.n_elements));
        s.set("levels", cfg.levels.to_string());
        s.set("rate_bpcu", cfg.rate_bpcu);
        s.set("eta", cfg.eta);
        s.set("omega_s", cfg.omega_s);
        s.set("omega_i", cfg.omega_i);
        s.set("direct_link", cfg.direct_link ? "1" : "0");
        if (cfg.direct_link)
            s.set("omega_d", cfg.omega_d);
        s.set("epsilon0", OutageThreshold::from(cfg).epsilon0);
    }
};

struct RunArgs {
    std::size_t trials = 1000000;
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::size_t block_size = std::size_t{1} << 16;
    bool allow_rare = false;
    bool full_channel = false;
    std::string out;

    void attach(CLI::App& app) {
        app.add_option("--trials", trials, "Monte-Carlo trials per point")->capture_default_str();
        app.add_option("--seed", seed, "Base seed")->envname("RIS_SIM_SEED")->capture_default_str();
        app.add_option("--threads", threads, "Worker threads (0: all cores)")->capture_default_str();
        app.add_option("--block-size", block_size, "Trials per random substream")->capture_default_str();
        app.add_flag("--allow-rare", allow_rare, "Keep points with fewer than 10 outage events");
        app.add_flag("--full-channel", full_channel, "Simulate explicit channels instead of the phase-error shortcut");
        app.add_option("--out", out, "Output CSV path")->required();
    }

    EstimatorOptions options() const {
        if (trials == 0)
            throw UsageError("--trials must be positive");
        if (block_size == 0)
            throw UsageError("--block-size must be positive");
        EstimatorOptions o;
        o.block_size = block_size;
        o.threads = threads;
        o.allow_rare = allow_rare;
        o.path = full_channel ? SimulationPath::full_channel : SimulationPath::phase_error_shortcut;
        return o;
    }

    // threads is left out: it never changes the output.
    void record(Settings& s) const {
        s.set("trials", std::to_string(trials));
        s.set("seed", std::to_string(seed));
        s.set("block_size", std::to_string(block_size));
        s.set("allow_rare", allow_rare ? "1" : "0");
        s.set("path", full_channel ? "full_channel" : "phase_error_shortcut");
    }
};

struct GridArgs {
    double min_db;
    double max_db;
    double step_db;

    void attach(CLI::App& app) {
        app.add_option("--snr-db-min", min_db, "First SNR point in dB")->capture_default_str();
        app.add_option("--snr-db-max", max_db, "Last SNR point in dB")->capture_default_str();
        app.add_option("--snr-db-step", step_db, "SNR step in dB")->capture_default_str();
    }

    std::vector<double> grid() const {
        try {
            return db_grid(min_db, max_db, step_db);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
    }

    void record(Settings& s) const {
        s.set("snr_db_min", min_db);
        s.set("snr_db_max", max_db);
        s.set("snr_db_step", step_db);
    }
};

inline std::string manifest_path(const std::string& out) { return out + ".manifest"; }

inline void finish(const std::string& command, const Settings& settings, std::uint64_t seed,
                   const std::string& out, std::chrono::steady_clock::time_point start) {
    RunManifest m;
    m.command = command;
    m.config_digest = digest(command + "\n" + settings.canonical());
    m.seed = seed;
    m.output_paths = {out};
    m.duration = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    write_manifest(m, settings, manifest_path(out));
}

inline int cmd_sweep(const ScenarioArgs& sc, const RunArgs& run, const GridArgs& grid) {
    const auto start = std::chrono::steady_clock::now();
    const SystemConfig cfg = sc.resolve();
    const auto opts = run.options();
    const auto rho_db = grid.grid();
    const SweepResult result = sweep(cfg, rho_db, run.trials, run.seed, opts);

    CsvWriter csv(run.out, "rho_db,trials,failures,p_hat,ci_low,ci_high,censored");
    for (const auto& pt : result.points) {
        if (pt.censored()) {
            csv.row({format_number(pt.rho_db), format_number(pt.trials), format_number(pt.failures),
                     "", "", "", "1"});
        } else {
            const auto& e = *pt.estimate;
            csv.row({format_number(pt.rho_db), format_number(e.trials), format_number(e.failures),
                     format_number(e.p_hat), format_number(e.ci_low), format_number(e.ci_high), "0"});
        }
    }
    Settings s;
    ScenarioArgs::record(s, cfg);
    run.record(s);
    grid.record(s);
    finish("sweep", s, run.seed, run.out, start);
    return ok;
}

inline int cmd_levels_sweep(const ScenarioArgs& sc, const RunArgs& run, int levels_min,
                            int levels_max, std::vector<double> snr_db) {
    const auto start = std::chrono::steady_clock::now();
    if (levels_min < 2 || levels_max < levels_min)
        throw UsageError("need 2 <= --levels-min <= --levels-max");
    if (snr_db.empty())
        throw UsageError("--snr-db needs at least one value");
    SystemConfig cfg = sc.resolve();
    const auto base_opts = run.options();

    CsvWriter csv(run.out, "snr_db,levels,p_hat,ci_low,ci_high,censored");
    bool any = false;
    for (std::size_t s = 0; s < snr_db.size(); ++s) {
        EstimatorOptions opts = base_opts;
        // common random numbers across L at one SNR
        opts.stream_base = static_cast<std::uint64_t>(s) << 32;
        std::vector<QuantLevels> rows;
        for (int l = levels_min; l <= levels_max; ++l)
            rows.emplace_back(l);
        rows.push_back(QuantLevels::perfect());
        for (const auto& lv : rows) {
            cfg.levels = lv;
            const std::string snr = format_number(snr_db[s]);
            try {
                const auto e = estimate_outage(cfg, db_to_linear(snr_db[s]), run.trials, run.seed, opts);
                csv.row({snr, lv.to_string(), format_number(e.p_hat), format_number(e.ci_low),
                         format_number(e.ci_high), "0"});
                any = true;
            } catch (const RareEventGuardError&) {
                csv.row({snr, lv.to_string(), "", "", "", "1"});
            }
        }
    }
    Settings st;
    ScenarioArgs::record(st, cfg);
    st.set("levels", "swept");
    run.record(st);
    st.set("levels_min", std::to_string(levels_min));
    st.set("levels_max", std::to_string(levels_max));
    std::string snrs;
    for (double v : snr_db)
        snrs += (snrs.empty() ? "" : ";") + format_number(v);
    st.set("snr_db", snrs);
    finish("levels-sweep", st, run.seed, run.out, start);
    return any ? ok : all_censored;
}

inline int cmd_conditional(const ScenarioArgs& sc, const RunArgs& run, const GridArgs& grid,
                           const std::string& event_name, std::optional<double> theta) {
    const auto start = std::chrono::steady_clock::now();
    const SystemConfig cfg = sc.resolve();
    if (cfg.levels.is_perfect() || cfg.levels.count() != 2)
        throw UsageError("conditional experiments require --levels 2");
    EventKind kind;
    if (event_name == "eps1")
        kind = EventKind::eps1;
    else if (event_name == "eps2")
        kind = EventKind::eps2;
    else
        throw UsageError("--event must be eps1 or eps2");
    if (kind == EventKind::eps1 && cfg.n_elements != 2)
        throw UsageError("--event eps1 requires --n-elements 2");
    if (cfg.n_elements < 2)
        throw UsageError("conditional experiments require --n-elements >= 2");
    if (theta && (!(*theta > 0.0) || *theta > 0.5 * std::numbers::pi))
        throw UsageError("--theta must lie in (0, pi/2]");
    const auto base_opts = run.options();
    const auto rho_db = grid.grid();

    CsvWriter csv(run.out, "rho_db,event_prob,cond_p_hat,lower_bound,ci_low,ci_high");
    bool any = false;
    for (std::size_t i = 0; i < rho_db.size(); ++i) {
        EstimatorOptions opts = base_opts;
        opts.stream_base = static_cast<std::uint64_t>(i) << 32;
        const double rho = db_to_linear(rho_db[i]);
        EventSpec event = EventSpec::at_snr(kind, cfg.n_elements, rho);
        if (theta)
            event.theta = *theta;
        const double pe = event_probability(event);
        try {
            const auto c = estimate_conditional_outage(cfg, event, rho, run.trials, run.seed, opts);
            csv.row({format_number(rho_db[i]), format_number(pe), format_number(c.p_hat),
                     format_number(pe * c.p_hat), format_number(pe * c.ci_low),
                     format_number(pe * c.ci_high)});
            any = true;
        } catch (const RareEventGuardError&) {
            csv.row({format_number(rho_db[i]), format_number(pe), "", "", "", ""});
        }
    }
    Settings st;
    ScenarioArgs::record(st, cfg);
    run.record(st);
    grid.record(st);
    st.set("event", event_name);
    st.set("theta", theta ? format_number(*theta) : std::string("rho^-1/2"));
    finish("conditional", st, run.seed, run.out, start);
    return any ? ok : all_censored;
}

struct AnalyticArgs {
    double x_min = 0.0;
    double x_max = 1e-2;
    std::size_t points = 11;
    bool log_x = false;
    bool outage = false;
    std::string reference;
    double anchor_db = 0.0;
    double anchor_p = 1.0;
    std::string out;
};

// cdf_gsq table (default), single-element outage cdf_gsq(epsilon0 / rho) over an SNR
// grid (--outage), or a power-law guide line (--reference full|l2-bound).
inline int cmd_analytic(const ScenarioArgs& sc, const GridArgs& grid, const AnalyticArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    if (a.outage && !a.reference.empty())
        throw UsageError("--outage and --reference are mutually exclusive");
    Settings st;
    if (a.outage) {
        SystemConfig cfg = sc.resolve();
        const double eps0 = OutageThreshold::from(cfg).epsilon0;
        CsvWriter csv(a.out, "rho_db,epsilon_over_rho,outage_n1");
        for (double db : grid.grid()) {
            const double x = eps0 / db_to_linear(db);
            csv.row({format_number(db), format_number(x), format_number(specfun::cdf_gsq(x))});
        }
        ScenarioArgs::record(st, cfg);
        grid.record(st);
        st.set("mode", "outage");
    } else if (!a.reference.empty()) {
        ReferenceKind kind;
        if (a.reference == "full")
            kind = ReferenceKind::full;
        else if (a.reference == "l2-bound")
            kind = ReferenceKind::l2_bound;
        else
            throw UsageError("--reference must be full or l2-bound");
        if (sc.n_elements < 1)
            throw UsageError("--n-elements must be positive");
        if (!(a.anchor_p > 0.0))
            throw UsageError("--anchor-p must be positive");
        const auto g = grid.grid();
        CsvWriter csv(a.out, "rho_db,reference");
        for (const auto& pt : reference_curves(sc.n_elements, kind, g, {a.anchor_db, a.anchor_p}))
            csv.row({format_number(pt.rho_db), format_number(pt.value)});
        grid.record(st);
        st.set("mode", "reference");
        st.set("reference", a.reference);
        st.set("n_elements", std::to_string(sc.n_elements));
        st.set("anchor_db", a.anchor_db);
        st.set("anchor_p", a.anchor_p);
    } else {
        if (a.points < 1)
            throw UsageError("--points must be positive");
        if (a.x_min < 0.0 || a.x_max < a.x_min)
            throw UsageError("need 0 <= --x-min <= --x-max");
        if (a.log_x && !(a.x_min > 0.0))
            throw UsageError("--log-x requires --x-min > 0");
        CsvWriter csv(a.out, "x,cdf_gsq,neg_x_ln_x");
        for (std::size_t i = 0; i < a.points; ++i) {
            const double t = a.points == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(a.points - 1);
            const double x = a.log_x ? a.x_min * std::pow(a.x_max / a.x_min, t)
                                     : a.x_min + (a.x_max - a.x_min) * t;
            const double approx = x > 0.0 ? -x * std::log(x) : 0.0;
            csv.row({format_number(x), format_number(specfun::cdf_gsq(x)), format_number(approx)});
        }
        st.set("mode", "cdf");
        st.set("x_min", a.x_min);
        st.set("x_max", a.x_max);
        st.set("points", std::to_string(a.points));
        st.set("log_x", a.log_x ? "1" : "0");
    }
    finish("analytic", st, 0, a.out, start);
    return ok;
}

// Entry point shared by the executable and the tests.
inline int run(const std::vector<std::string>& argv_in, std::ostream& err = std::cerr) {
    // a --config file is spliced in right after the subcommand so explicit flags win
    std::vector<std::string> argv;
    try {
        for (std::size_t i = 0; i < argv_in.size(); ++i) {
            const std::string& arg = argv_in[i];
            std::optional<std::string> path;
            if (arg == "--config" && i + 1 < argv_in.size())
                path = argv_in[++i];
            else if (arg.rfind("--config=", 0) == 0)
                path = arg.substr(9);
            if (!path) {
                argv.push_back(arg);
                continue;
            }
            auto extra = config_file_arguments(*path);
            const std::size_t insert_at = std::min<std::size_t>(2, argv.size());
            argv.insert(argv.begin() + static_cast<std::ptrdiff_t>(insert_at), extra.begin(), extra.end());
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    }

    CLI::App app{"Outage simulator for RIS-assisted links with discrete phase shifts", "ris_sim"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", version);

    ScenarioArgs sc;
    RunArgs run;
    GridArgs sweep_grid{0.0, 40.0, 2.5};
    GridArgs cond_grid{20.0, 40.0, 10.0};
    GridArgs analytic_grid{0.0, 40.0, 10.0};

    auto* sweep_cmd = app.add_subcommand("sweep", "Outage probability versus SNR");
    sc.attach(*sweep_cmd);
    run.attach(*sweep_cmd);
    sweep_grid.attach(*sweep_cmd);

    ScenarioArgs sc_levels;
    RunArgs run_levels;
    int levels_min = 2;
    int levels_max = 8;
    std::vector<double> levels_snr{20.0, 30.0};
    auto* levels_cmd = app.add_subcommand("levels-sweep", "Outage probability versus quantization levels");
    sc_levels.attach(*levels_cmd);
    run_levels.attach(*levels_cmd);
    levels_cmd->add_option("--levels-min", levels_min)->capture_default_str();
    levels_cmd->add_option("--levels-max", levels_max)->capture_default_str();
    levels_cmd->add_option("--snr-db", levels_snr, "Fixed SNR values in dB")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->capture_default_str();

    ScenarioArgs sc_cond;
    sc_cond.n_elements = 2;
    sc_cond.levels = "2";
    RunArgs run_cond;
    std::string event_name = "eps2";
    std::optional<double> theta;
    auto* cond_cmd = app.add_subcommand("conditional", "Boundary-strip conditioned outage and lower bound");
    sc_cond.attach(*cond_cmd);
    run_cond.attach(*cond_cmd);
    cond_grid.attach(*cond_cmd);
    cond_cmd->add_option("--event", event_name, "eps1 or eps2")->capture_default_str();
    cond_cmd->add_option("--theta", theta, "Strip width override (default rho^-1/2)");

    ScenarioArgs sc_an;
    AnalyticArgs an;
    auto* an_cmd = app.add_subcommand("analytic", "Closed-form CDF, single-element outage, guide lines");
    sc_an.attach(*an_cmd);
    analytic_grid.attach(*an_cmd);
    an_cmd->add_option("--x-min", an.x_min)->capture_default_str();
    an_cmd->add_option("--x-max", an.x_max)->capture_default_str();
    an_cmd->add_option("--points", an.points)->capture_default_str();
    an_cmd->add_flag("--log-x", an.log_x, "Logarithmic x spacing");
    an_cmd->add_flag("--outage", an.outage, "Tabulate cdf_gsq(epsilon0/rho) over the SNR grid");
    an_cmd->add_option("--reference", an.reference, "Guide line: full or l2-bound");
    an_cmd->add_option("--anchor-db", an.anchor_db)->capture_default_str();
    an_cmd->add_option("--anchor-p", an.anchor_p)->capture_default_str();
    an_cmd->add_option("--out", an.out, "Output CSV path")->required();

    std::vector<const char*> cargv;
    cargv.reserve(argv.size());
    for (const auto& a : argv)
        cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::Success& e) {
        return app.exit(e, std::cout, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    }

    try {
        if (sweep_cmd->parsed())
            return cmd_sweep(sc, run, sweep_grid);
        if (levels_cmd->parsed())
            return cmd_levels_sweep(sc_levels, run_levels, levels_min, levels_max, levels_snr);
        if (cond_cmd->parsed())
            return cmd_conditional(sc_cond, run_cond, cond_grid, event_name, theta);
        return cmd_analytic(sc_an, analytic_grid, an);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return usage;
    } catch (const EmptyResultError& e) {
        err << "no result: " << e.what() << "\n";
        return all_censored;
    } catch (const DomainError& e) {
        err << "numeric error: " << e.what() << "\n";
        return numeric;
    } catch (const AccuracyError& e) {
        err << "numeric error: " << e.what() << "\n";
        return numeric;
    }
}

} // namespace ris::cli
