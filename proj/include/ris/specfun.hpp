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

// Modified Bessel function K1 and the double-Rayleigh CDF built on it.
//
// Small arguments use the ascending series of x*K1(x),
//
//   x K1(x) = 1 - sum_k 2 (x/2)^(2k+2) (A(k) - ln(x/2)) / (k! (k+1)!),
//   A(k)    = (psi(k+1) + psi(k+2)) / 2,
//
// and arguments above 2 use Steed's continued fraction (Temme's CF2).

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ris/errors.hpp"

namespace ris::specfun {

struct SeriesAccuracy {
    double relative_tolerance = 1e-12;
    int max_terms = 60;

    void validate() const {
        if (!(relative_tolerance > 0.0) || !std::isfinite(relative_tolerance))
            throw DomainError("SeriesAccuracy: relative_tolerance must be positive");
        if (max_terms < 1)
            throw DomainError("SeriesAccuracy: max_terms must be at least 1");
    }
};

// Euler-Mascheroni constant to 20 significant digits.
inline constexpr double euler_gamma = 0.57721566490153286061;

// Argument at which K1 switches from the series to the continued fraction.
inline constexpr double series_crossover = 2.0;

// Upper end of the range where the derivative uses the differentiated series.
inline constexpr double derivative_series_limit = 4.0;

namespace detail {

inline void require_positive(double x, const char* who) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw DomainError(std::string(who) + ": argument must be positive and finite, got " +
                          std::to_string(x));
}

// psi(n) for integer n >= 1 by upward recurrence from psi(1) = -gamma.
inline double digamma_int(int n) {
    double psi = -euler_gamma;
    for (int k = 1; k < n; ++k)
        psi += 1.0 / k;
    return psi;
}

// A(k) = (psi(k+1) + psi(k+2)) / 2.
inline double series_coefficient_a(int k) {
    return 0.5 * (digamma_int(k + 1) + digamma_int(k + 2));
}

// S(u) = 2 sum_k u^(2k+2) (A(k) - ln u) / (k! (k+1)!), so that x K1(x) = 1 - S(x/2)
// and F(x) = S(sqrt(x)) for the double-Rayleigh CDF. Evaluating S directly keeps
// full relative precision when the CDF is tiny.
inline double k1_series_tail(double u, const SeriesAccuracy& acc) {
    const double log_u = std::log(u);
    const double u2 = u * u;
    double power = u2;  // u^(2k+2) / (k! (k+1)!)
    double a = series_coefficient_a(0);
    double sum = 0.0;
    for (int k = 0; k < acc.max_terms; ++k) {
        const double term = 2.0 * power * (a - log_u);
        sum += term;
        // bound on the term magnitude; guards against an accidental zero of (A(k) - ln u)
        const double bound = 2.0 * power * (std::abs(a) + std::abs(log_u));
        const double scale = std::min(std::abs(sum), std::abs(1.0 - sum));
        if (bound <= acc.relative_tolerance * scale)
            return sum;
        power *= u2 / ((k + 1.0) * (k + 2.0));
        a += 0.5 * (1.0 / (k + 1.0) + 1.0 / (k + 2.0));
    }
    throw AccuracyError("x*K1(x) series did not converge within " + std::to_string(acc.max_terms) +
                        " terms at x = " + std::to_string(2.0 * u));
}

inline double tilde_k1_series(double x, const SeriesAccuracy& acc = {}) {
    return 1.0 - k1_series_tail(0.5 * x, acc);
}

// d/dx [x K1(x)] = -sum_k u^(2k+1) (2(k+1)(A(k) - ln u) - 1) / (k! (k+1)!), u = x/2.
inline double tilde_k1_derivative_series(double x, const SeriesAccuracy& acc = {}) {
    const double u = 0.5 * x;
    const double log_u = std::log(u);
    const double u2 = u * u;
    double power = u;  // u^(2k+1) / (k! (k+1)!)
    double a = series_coefficient_a(0);
    double sum = 0.0;
    for (int k = 0; k < acc.max_terms; ++k) {
        const double kk = k + 1.0;
        sum -= power * (2.0 * kk * (a - log_u) - 1.0);
        const double bound = power * (2.0 * kk * (std::abs(a) + std::abs(log_u)) + 1.0);
        if (bound <= acc.relative_tolerance * std::abs(sum))
            return sum;
        power *= u2 / ((k + 1.0) * (k + 2.0));
        a += 0.5 * (1.0 / (k + 1.0) + 1.0 / (k + 2.0));
    }
    throw AccuracyError("derivative series of x*K1(x) did not converge within " +
                        std::to_string(acc.max_terms) + " terms at x = " + std::to_string(x));
}

struct BesselK01 {
    double k0;
    double k1;
};

// Steed's method for K0 and K1 (Temme's CF2 with nu = 0). Converges quickly for
// x >= 2; usable down to x ~ 0.1 at the cost of more iterations.
inline BesselK01 bessel_k01_continued_fraction(double x) {
    constexpr int max_iterations = 100000;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double a1 = 0.25;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 1;
    for (; i < max_iterations; ++i) {
        a -= 2.0 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        if (std::abs(c) > 1e100) {
            // c grows factorially while q1, q2 decay; only their product enters q
            c *= 1e-100;
            q1 *= 1e100;
            q2 *= 1e100;
        }
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < eps)
            break;
    }
    if (i == max_iterations)
        throw AccuracyError("K1 continued fraction did not converge at x = " + std::to_string(x));
    h *= a1;
    const double k0 = std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
    const double k1 = k0 * (x + 0.5 - h) / x;
    return {k0, k1};
}

inline double tilde_k1_continued_fraction(double x) {
    return x * bessel_k01_continued_fraction(x).k1;
}

} // namespace detail

// K1(x) for x > 0. Underflows to zero beyond x ~ 700.
inline double bessel_k1(double x) {
    detail::require_positive(x, "bessel_k1");
    if (x <= series_crossover)
        return detail::tilde_k1_series(x) / x;
    return detail::bessel_k01_continued_fraction(x).k1;
}

// x K1(x), the function whose series appears in the outage analysis.
inline double tilde_k1(double x, const SeriesAccuracy& acc = {}) {
    detail::require_positive(x, "tilde_k1");
    acc.validate();
    if (x <= series_crossover)
        return detail::tilde_k1_series(x, acc);
    return detail::tilde_k1_continued_fraction(x);
}

// d/dx [x K1(x)]. Uses the termwise-differentiated series up to x = 4 and the
// identity (x K1(x))' = -x K0(x) beyond.
inline double tilde_k1_derivative(double x, const SeriesAccuracy& acc = {}) {
    detail::require_positive(x, "tilde_k1_derivative");
    acc.validate();
    if (x <= derivative_series_limit)
        return detail::tilde_k1_derivative_series(x, acc);
    return -x * detail::bessel_k01_continued_fraction(x).k0;
}

// CDF of |g|^2 where g is the normalized product of two independent unit-variance
// circular Gaussians: F(x) = 1 - 2 sqrt(x) K1(2 sqrt(x)).
inline double cdf_gsq(double x) {
    if (std::isnan(x) || x < 0.0)
        throw DomainError("cdf_gsq: argument must be nonnegative, got " + std::to_string(x));
    if (x < 1e-300)
        return 0.0;
    if (std::isinf(x))
        return 1.0;
    const double root = std::sqrt(x);
    if (2.0 * root <= series_crossover)
        return detail::k1_series_tail(root, SeriesAccuracy{});
    return 1.0 - detail::tilde_k1_continued_fraction(2.0 * root);
}

} // namespace ris::specfun
