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

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ris/specfun.hpp"
#include "ris_cli.hpp"

namespace fs = std::filesystem;
using Catch::Approx;

namespace {

class TempDir {
  public:
    TempDir() {
        path_ = fs::temp_directory_path() / ("ris_cli_test_" + std::to_string(::getpid()) + "_" +
                                             std::to_string(counter_++));
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

  private:
    static inline int counter_ = 0;
    fs::path path_;
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const std::string& path) {
    std::vector<std::string> out;
    std::ifstream f(path);
    for (std::string l; std::getline(f, l);)
        out.push_back(l);
    return out;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');)
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

std::map<std::string, std::string> manifest(const std::string& out) {
    std::map<std::string, std::string> m;
    for (const auto& l : lines(out + ".manifest")) {
        const auto eq = l.find('=');
        m[l.substr(0, eq)] = l.substr(eq + 1);
    }
    return m;
}

int run(std::vector<std::string> args) {
    args.insert(args.begin(), "ris_sim");
    std::ostringstream err;
    const int code = ris::cli::run(args, err);
    if (code != 0)
        UNSCOPED_INFO("stderr: " << err.str());
    return code;
}

} // namespace

TEST_CASE("usage errors exit with 2") {
    TempDir tmp;
    const auto out = tmp.file("x.csv");
    CHECK(run({}) == 2);
    CHECK(run({"bogus"}) == 2);
    CHECK(run({"sweep"}) == 2);  // --out missing
    CHECK(run({"sweep", "--out", out, "--omega-d", "2"}) == 2);
    CHECK(run({"sweep", "--out", out, "--levels", "1"}) == 2);
    CHECK(run({"sweep", "--out", out, "--levels", "three"}) == 2);
    CHECK(run({"sweep", "--out", out, "--trials", "0"}) == 2);
    CHECK(run({"sweep", "--out", out, "--eta", "1.5"}) == 2);
    CHECK(run({"sweep", "--out", out, "--snr-db-step", "0"}) == 2);
    CHECK(run({"conditional", "--out", out, "--levels", "3"}) == 2);
    CHECK(run({"conditional", "--out", out, "--n-elements", "3", "--event", "eps1"}) == 2);
    CHECK(run({"conditional", "--out", out, "--event", "eps3"}) == 2);
    CHECK(run({"analytic", "--out", out, "--reference", "half"}) == 2);
    CHECK(run({"sweep", "--config", tmp.file("missing.cfg"), "--out", out}) == 2);
}

TEST_CASE("help and version exit cleanly") {
    CHECK(run({"--help"}) == 0);
    CHECK(run({"--version"}) == 0);
}

TEST_CASE("all-censored sweep exits with 3") {
    TempDir tmp;
    const auto out = tmp.file("c.csv");
    CHECK(run({"sweep", "--n-elements", "4", "--levels", "3", "--snr-db-min", "60", "--snr-db-max", "70",
               "--snr-db-step", "10", "--trials", "1000", "--out", out}) == 3);
}

TEST_CASE("numeric failures exit with 4") {
    TempDir tmp;
    CHECK(run({"analytic", "--x-min", "0", "--x-max", "nan", "--points", "3", "--out", tmp.file("n.csv")}) == 4);
}

TEST_CASE("sweep CSV layout and manifest") {
    TempDir tmp;
    const auto out = tmp.file("s.csv");
    REQUIRE(run({"sweep", "--n-elements", "2", "--levels", "3", "--snr-db-min", "0", "--snr-db-max", "60",
                 "--snr-db-step", "30", "--trials", "20000", "--seed", "5", "--out", out}) == 0);
    const auto rows = lines(out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "rho_db,trials,failures,p_hat,ci_low,ci_high,censored");
    const auto first = split(rows[1]);
    REQUIRE(first.size() == 7);
    CHECK(first[0] == "0");
    CHECK(first[1] == "20000");
    CHECK(first[6] == "0");
    const auto last = split(rows[3]);
    REQUIRE(last.size() == 7);
    CHECK(last[0] == "60");
    CHECK(last[3].empty());
    CHECK(last[6] == "1");

    const auto m = manifest(out);
    CHECK(m.at("command") == "sweep");
    CHECK(m.at("seed") == "5");
    CHECK(m.at("output_paths") == out);
    CHECK(m.at("config_digest").size() == 16);
    CHECK(m.at("version") == ris::version);
    CHECK(std::stod(m.at("epsilon0")) == Approx(3.125));
    CHECK(m.count("duration") == 1);
}

TEST_CASE("reruns are byte-identical across thread counts") {
    TempDir tmp;
    const std::vector<std::string> base{"sweep", "--n-elements", "3", "--levels", "2", "--snr-db-min", "5",
                                        "--snr-db-max", "20", "--snr-db-step", "5", "--trials", "300000",
                                        "--block-size", "20000", "--seed", "77"};
    auto with = [&](const std::string& threads, const std::string& name) {
        auto a = base;
        a.insert(a.end(), {"--threads", threads, "--out", tmp.file(name)});
        return run(a);
    };
    REQUIRE(with("1", "a.csv") == 0);
    REQUIRE(with("3", "b.csv") == 0);
    REQUIRE(with("1", "c.csv") == 0);
    CHECK(slurp(tmp.file("a.csv")) == slurp(tmp.file("b.csv")));
    CHECK(slurp(tmp.file("a.csv")) == slurp(tmp.file("c.csv")));
    CHECK(manifest(tmp.file("a.csv")).at("config_digest") == manifest(tmp.file("b.csv")).at("config_digest"));

    auto other = base;
    other[other.size() - 1] = "78";
    other.insert(other.end(), {"--out", tmp.file("d.csv")});
    REQUIRE(run(other) == 0);
    CHECK(slurp(tmp.file("a.csv")) != slurp(tmp.file("d.csv")));
    CHECK(manifest(tmp.file("a.csv")).at("config_digest") != manifest(tmp.file("d.csv")).at("config_digest"));
}

TEST_CASE("config file values yield to explicit flags") {
    TempDir tmp;
    const auto cfg = tmp.file("run.cfg");
    {
        std::ofstream f(cfg);
        f << "# scenario\nn-elements = 2\nlevels = 4\nrate-bpcu = 2\ntrials = 10000\nseed = 9\n";
    }
    const auto a = tmp.file("a.csv");
    REQUIRE(run({"sweep", "--config", cfg, "--snr-db-min", "0", "--snr-db-max", "0", "--out", a}) == 0);
    auto m = manifest(a);
    CHECK(m.at("n_elements") == "2");
    CHECK(m.at("levels") == "4");
    CHECK(std::stod(m.at("epsilon0")) == Approx(9.375));
    CHECK(m.at("seed") == "9");

    const auto b = tmp.file("b.csv");
    REQUIRE(run({"sweep", "--config", cfg, "--seed", "10", "--levels", "3", "--snr-db-min", "0",
                 "--snr-db-max", "0", "--out", b}) == 0);
    m = manifest(b);
    CHECK(m.at("seed") == "10");
    CHECK(m.at("levels") == "3");
    CHECK(m.at("n_elements") == "2");
}

TEST_CASE("seed from the environment") {
    TempDir tmp;
    const auto out = tmp.file("e.csv");
    ::setenv("RIS_SIM_SEED", "1234", 1);
    const int code = run({"sweep", "--snr-db-min", "0", "--snr-db-max", "0", "--trials", "1000", "--out", out});
    const auto m = manifest(out);
    const auto explicit_out = tmp.file("f.csv");
    const int code2 = run({"sweep", "--snr-db-min", "0", "--snr-db-max", "0", "--trials", "1000", "--seed",
                           "3", "--out", explicit_out});
    ::unsetenv("RIS_SIM_SEED");
    REQUIRE(code == 0);
    REQUIRE(code2 == 0);
    CHECK(m.at("seed") == "1234");
    CHECK(manifest(explicit_out).at("seed") == "3");
}

TEST_CASE("single-element sweep tracks the analytic outage") {
    TempDir tmp;
    const auto sim = tmp.file("sim.csv");
    const auto ana = tmp.file("ana.csv");
    const std::vector<std::string> grid{"--snr-db-min", "0", "--snr-db-max", "30", "--snr-db-step", "10"};
    auto a = std::vector<std::string>{"sweep", "--trials", "1000000", "--out", sim};
    a.insert(a.end(), grid.begin(), grid.end());
    auto b = std::vector<std::string>{"analytic", "--outage", "--out", ana};
    b.insert(b.end(), grid.begin(), grid.end());
    REQUIRE(run(a) == 0);
    REQUIRE(run(b) == 0);
    const auto s = lines(sim);
    const auto t = lines(ana);
    REQUIRE(s.size() == 5);
    REQUIRE(t.size() == 5);
    CHECK(t[0] == "rho_db,epsilon_over_rho,outage_n1");
    for (std::size_t i = 1; i < s.size(); ++i) {
        const auto sr = split(s[i]);
        const auto tr = split(t[i]);
        CHECK(sr[0] == tr[0]);
        const double p = std::stod(tr[2]);
        CHECK(std::abs(std::stod(sr[3]) - p) < 4.0 * ris::stats::binomial_sigma(p, 1000000));
    }
    CHECK(std::stod(split(t[3])[2]) == Approx(0.105841934089107201).epsilon(1e-13));
}

TEST_CASE("analytic table of the CDF") {
    TempDir tmp;
    const auto out = tmp.file("cdf.csv");
    REQUIRE(run({"analytic", "--x-min", "0", "--x-max", "0.01", "--points", "3", "--out", out}) == 0);
    const auto rows = lines(out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "x,cdf_gsq,neg_x_ln_x");
    CHECK(rows[1] == "0,0,0");
    const auto mid = split(rows[2]);
    CHECK(std::stod(mid[0]) == Approx(0.005));

    const auto logx = tmp.file("log.csv");
    REQUIRE(run({"analytic", "--x-min", "1e-6", "--x-max", "1e-2", "--points", "5", "--log-x", "--out", logx}) ==
            0);
    CHECK(split(lines(logx)[1])[0] == "1e-06");
    CHECK(run({"analytic", "--x-min", "0", "--log-x", "--out", logx}) == 2);
}

TEST_CASE("analytic guide lines") {
    TempDir tmp;
    const auto out = tmp.file("ref.csv");
    REQUIRE(run({"analytic", "--reference", "l2-bound", "--n-elements", "3", "--anchor-db", "20", "--anchor-p",
                 "0.001", "--snr-db-min", "20", "--snr-db-max", "30", "--snr-db-step", "10", "--out", out}) == 0);
    const auto rows = lines(out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == "rho_db,reference");
    CHECK(rows[1] == "20,0.001");
    CHECK(std::stod(split(rows[2])[1]) == Approx(1e-5));
}

TEST_CASE("levels sweep") {
    TempDir tmp;
    const auto out = tmp.file("lv.csv");
    REQUIRE(run({"levels-sweep", "--n-elements", "2", "--rate-bpcu", "2", "--levels-min", "2", "--levels-max",
                 "4", "--snr-db", "10", "--snr-db", "20", "--trials", "200000", "--out", out}) == 0);
    const auto rows = lines(out);
    REQUIRE(rows.size() == 1 + 2 * 4);
    CHECK(rows[0] == "snr_db,levels,p_hat,ci_low,ci_high,censored");
    CHECK(split(rows[1])[0] == "10");
    CHECK(split(rows[1])[1] == "2");
    CHECK(split(rows[4])[1] == "perfect");
    CHECK(split(rows[5])[0] == "20");
    // common random numbers keep the counts ordered exactly
    for (int block : {0, 4}) {
        double prev = 2.0;
        for (int i = 1; i <= 4; ++i) {
            const double p = std::stod(split(rows[block + i])[2]);
            CHECK(p <= prev);
            prev = p;
        }
    }
    CHECK(std::stod(manifest(out).at("epsilon0")) == Approx(9.375));
    CHECK(run({"levels-sweep", "--levels-min", "5", "--levels-max", "4", "--out", out}) == 2);
}

TEST_CASE("conditional experiment") {
    TempDir tmp;
    const auto out = tmp.file("cond.csv");
    REQUIRE(run({"conditional", "--trials", "200000", "--out", out}) == 0);
    const auto rows = lines(out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == "rho_db,event_prob,cond_p_hat,lower_bound,ci_low,ci_high");
    const auto r = split(rows[1]);
    CHECK(r[0] == "20");
    CHECK(std::stod(r[1]) == Approx(2.02642367284675543e-3).epsilon(1e-12));
    CHECK(std::stod(r[3]) == Approx(std::stod(r[1]) * std::stod(r[2])).epsilon(1e-12));
    CHECK(std::stod(r[4]) <= std::stod(r[3]));
    CHECK(std::stod(r[3]) <= std::stod(r[5]));

    const auto fixed = tmp.file("theta.csv");
    REQUIRE(run({"conditional", "--n-elements", "3", "--theta", "0.5", "--trials", "100000", "--snr-db-min",
                 "10", "--snr-db-max", "10", "--out", fixed}) == 0);
    CHECK(std::stod(split(lines(fixed)[1])[1]) == Approx(3.0 * std::pow(0.5 / std::numbers::pi, 3)));
    CHECK(manifest(fixed).at("theta") == "0.5");
}
