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

#include <cmath>

#include "oracles/oracles.hpp"
#include "ris/montecarlo.hpp"
#include "ris/specfun.hpp"

using namespace ris;
using Catch::Approx;

TEST_CASE("quadrature K1 matches the library on a log grid") {
    const int n = 200;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = 1e-8 * std::pow(50.0 / 1e-8, i / double(n - 1));
        const double ref = oracles::oracle_k1(x).computed_value;
        worst = std::max(worst, std::abs(specfun::bessel_k1(x) / ref - 1.0));
    }
    CHECK(worst <= 1e-10);
    CHECK(oracles::oracle_k1(2.0).computed_value == Approx(0.139865881816522427).epsilon(1e-12));
}

TEST_CASE("quadrature K1 limits and shape") {
    CHECK(std::abs(oracles::oracle_k1(1e-6).computed_value * 1e-6 - 1.0) < 1e-5);
    double prev = oracles::oracle_k1(0.5).computed_value;
    for (double x : {1.0, 2.0, 4.0}) {
        const double v = oracles::oracle_k1(x).computed_value;
        CHECK(v < prev);
        prev = v;
    }
    const auto r = oracles::oracle_k1(1.0);
    CHECK(r.method == "quadrature");
    CHECK(r.samples_or_terms > 0);
    CHECK(oracles::oracle_k0(1.0).computed_value == Approx(0.421024438240708333).epsilon(1e-12));
    CHECK_THROWS_AS(oracles::oracle_k1(0.0), oracles::OracleFailure);
    CHECK_THROWS_AS(oracles::oracle_k1(60.0), oracles::OracleFailure);
}

TEST_CASE("single-element outage oracle reduces to the closed form") {
    const auto cfg = SystemConfig::reference(1, QuantLevels::perfect());
    for (double db : {0.0, 10.0, 20.0, 30.0}) {
        const double rho = db_to_linear(db);
        const double p = oracles::oracle_outage_small_n(cfg, rho).computed_value;
        CHECK(p == Approx(specfun::cdf_gsq(3.125 / rho)).epsilon(1e-8));
    }
    CHECK(oracles::oracle_outage_small_n(cfg, 100.0).computed_value ==
          Approx(0.105841934089107201).epsilon(1e-8));
}

TEST_CASE("two-element oracle agrees with simulation") {
    const auto cfg = SystemConfig::reference(2, QuantLevels::perfect());
    // p is near 1e-2 around 17 dB for two coherent elements
    const double rho = db_to_linear(17.0);
    const double q = oracles::oracle_outage_small_n(cfg, rho).computed_value;
    INFO("oracle " << q);
    CHECK(q > 5e-3);
    CHECK(q < 2e-2);
    const auto mc = estimate_outage(cfg, rho, 4'000'000, 99);
    CHECK(std::abs(mc.p_hat / q - 1.0) < 0.02);
}

TEST_CASE("two-element oracle for two levels") {
    const double rho = db_to_linear(15.0);
    const auto perfect = SystemConfig::reference(2, QuantLevels::perfect());
    const auto two = SystemConfig::reference(2, QuantLevels(2));
    const double p_perfect = oracles::oracle_outage_small_n(perfect, rho).computed_value;
    const double p_two = oracles::oracle_outage_small_n(two, rho).computed_value;
    CHECK(p_two > p_perfect);
    const auto mc = estimate_outage(two, rho, 4'000'000, 7);
    CHECK(std::abs(mc.p_hat - p_two) < 4.0 * mc.sigma());
}

TEST_CASE("oracle rejects unsupported configurations") {
    CHECK_THROWS_AS(oracles::oracle_outage_small_n(SystemConfig::reference(3, QuantLevels(3)), 10.0),
                    oracles::OracleFailure);
    auto direct = SystemConfig::reference(1, QuantLevels::perfect());
    direct.direct_link = true;
    CHECK_THROWS_AS(oracles::oracle_outage_small_n(direct, 10.0), oracles::OracleFailure);
}
