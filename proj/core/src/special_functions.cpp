/*
   Copyright 2026 The hetcran Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hetcran/numerics.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>

namespace hetcran {

double exponential_integral_e1(double x) {
    if (!(x > 0.0)) throw DomainError("exponential_integral_e1: x must be > 0");
    if (x > 700.0) return std::exp(-x) * exp_scaled_e1(x);
    return boost::math::expint(1, x);
}

double exp_scaled_e1(double x) {
    if (!(x > 0.0)) throw DomainError("exp_scaled_e1: x must be > 0");
    if (x <= 1.0) return std::exp(x) * boost::math::expint(1, x);
    // Lentz evaluation of the continued fraction for e^x E1(x).
    constexpr double tiny = 1e-300;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 1000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) <= eps) return h;
    }
    throw NumericalError("exp_scaled_e1", "continued fraction did not converge");
}

double upper_incomplete_gamma(double a, double x) {
    if (a > 0.0) {
        if (x < 0.0) throw DomainError("upper_incomplete_gamma: x must be >= 0");
        if (x == 0.0) return std::tgamma(a);
        return boost::math::tgamma(a, x);
    }
    if (!(x > 0.0)) throw DomainError("upper_incomplete_gamma: x must be > 0 when a <= 0");
    if (a == 0.0) return exponential_integral_e1(x);
    // Gamma(a, x) = (Gamma(a + 1, x) - x^a e^-x) / a
    const double lifted = upper_incomplete_gamma(a + 1.0, x);
    return (lifted - std::pow(x, a) * std::exp(-x)) / a;
}

double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma: argument must be > 0");
    return boost::math::digamma(x);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double out = 1.0;
    for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
    return out < 9e15 ? std::round(out) : out;
}

double incomplete_beta_general(double x, double a, double b, const QuadratureSpec& spec) {
    if (!(a > 0.0)) throw DomainError("incomplete_beta_general: a must be > 0");
    if (!std::isfinite(x) || !std::isfinite(b))
        throw DomainError("incomplete_beta_general: non-finite argument");
    if (x == 0.0) return 0.0;
    const bool b_integer = std::floor(b) == b;
    if (x > 0.0) {
        if (x >= 1.0 && b < 1.0)
            throw DomainError("incomplete_beta_general: path crosses the singularity at t = 1");
        if (x > 1.0 && !b_integer)
            throw DomainError("incomplete_beta_general: (1 - t)^(b - 1) is not real for t > 1");
        const double head_end = std::min(x, 1.0);
        // v = t^a removes the endpoint singularity at t = 0.
        auto head = [&](double v) {
            const double t = std::pow(v, 1.0 / a);
            return std::pow(1.0 - t, b - 1.0) / a;
        };
        double out = integrate(head, 0.0, std::pow(head_end, a), spec, "incomplete beta (head)");
        if (x > 1.0) {
            auto tail = [&](double t) { return std::pow(t, a - 1.0) * std::pow(1.0 - t, b - 1.0); };
            out += integrate(tail, 1.0, x, spec, "incomplete beta (tail)");
        }
        return out;
    }
    const double ax = -x;
    const double head_end = std::min(ax, 1.0);
    auto head = [&](double v) {
        const double u = std::pow(v, 1.0 / a);
        return std::pow(1.0 + u, b - 1.0) / a;
    };
    double out = integrate(head, 0.0, std::pow(head_end, a), spec, "incomplete beta (head)");
    if (ax > 1.0) {
        // u = e^z spreads a long power-law tail over a short interval.
        auto tail = [&](double z) {
            const double u = std::exp(z);
            return std::exp(a * z) * std::pow(1.0 + u, b - 1.0);
        };
        out += integrate(tail, 0.0, std::log(ax), spec, "incomplete beta (tail)");
    }
    return -out;
}

}  // namespace hetcran
