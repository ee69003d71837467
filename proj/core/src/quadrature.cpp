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

#include "hetcran/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

#include <cstdint>
#include <sstream>

namespace hetcran {

void QuadratureSpec::validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("QuadratureSpec: rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw DomainError("QuadratureSpec: abs_tol must be >= 0");
    if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
    if (!(truncation_guard >= 0.0))
        throw DomainError("QuadratureSpec: truncation_guard must be >= 0");
}

QuadratureSpec QuadratureSpec::tightened(double factor) const {
    QuadratureSpec out = *this;
    out.rel_tol = std::max(rel_tol / factor, 1e-14);
    out.abs_tol = abs_tol / factor;
    return out;
}

namespace detail {

const Gk15Table& gk15() {
    static const Gk15Table table = [] {
        using boost::math::quadrature::gauss;
        using boost::math::quadrature::gauss_kronrod;
        Gk15Table t{};
        const auto& x = gauss_kronrod<double, 15>::abscissa();
        const auto& w = gauss_kronrod<double, 15>::weights();
        const auto& g = gauss<double, 7>::weights();
        for (int i = 0; i < 8; ++i) {
            t.xk[i] = x[i];
            t.wk[i] = w[i];
        }
        for (int i = 0; i < 4; ++i) t.wg[i] = g[i];
        return t;
    }();
    return table;
}

void throw_non_finite(std::string_view name, double x) {
    std::ostringstream os;
    os.precision(17);
    os << "non-finite integrand value at x = " << x;
    throw NumericalError(std::string(name), os.str());
}

void throw_no_convergence(std::string_view name, double error, double target, int subdivisions) {
    std::ostringstream os;
    os << "no convergence after " << subdivisions << " subdivisions (error estimate " << error
       << ", target " << target << ")";
    throw NumericalError(std::string(name), os.str());
}

}  // namespace detail

namespace {

constexpr int kAccelerationOrder = 12;
constexpr int kScanPerPeriod = 8;
constexpr int kMaxGapPeriods = 64;

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

double binomial_average(const std::vector<double>& sums, int order) {
    const int n = static_cast<int>(sums.size());
    double acc = 0.0;
    double coef = 1.0;
    for (int j = 0; j <= order; ++j) {
        acc += coef * sums[n - 1 - j];
        coef = coef * (order - j) / (j + 1);
    }
    return std::ldexp(acc, -order);
}

}  // namespace

double integrate_oscillatory(const std::function<double(double)>& f, const QuadratureSpec& spec,
                             double period, std::string_view name) {
    spec.validate();
    if (!(period > 0.0) || !std::isfinite(period))
        throw DomainError("integrate_oscillatory: period must be positive and finite");
    const double near_zero = f(1e-9 * period);
    if (!std::isfinite(near_zero))
        throw NumericalError(std::string(name), "integrand singular at 0");

    QuadratureSpec lobe_spec = spec.tightened(10.0);
    auto checked = [&](double x) {
        const double v = f(x);
        if (!std::isfinite(v)) detail::throw_non_finite(name, x);
        return v;
    };

    const double step = period / kScanPerPeriod;
    const long max_gap_steps = static_cast<long>(kMaxGapPeriods) * kScanPerPeriod;
    std::vector<double> sums;
    std::vector<double> accelerated;
    double partial = 0.0;
    double lobe_start = 0.0;
    long since_root = 0;
    int small_lobes = 0;
    int agreements = 0;

    double x_prev = 0.5 * step;
    double f_prev = checked(x_prev);
    int s_prev = sign_of(f_prev);
    for (long i = 1;; ++i) {
        const double x = (static_cast<double>(i) + 0.5) * step;
        const double fx = checked(x);
        const int s = sign_of(fx);
        ++since_root;
        if (s != 0 && s_prev != 0 && s != s_prev) {
            boost::uintmax_t iters = 100;
            auto tol = boost::math::tools::eps_tolerance<double>(48);
            auto bracket = boost::math::tools::toms748_solve(checked, x_prev, x, f_prev, fx, tol,
                                                             iters);
            const double root = 0.5 * (bracket.first + bracket.second);
            const double lobe = integrate(checked, lobe_start, root, lobe_spec, name);
            partial += lobe;
            sums.push_back(partial);
            lobe_start = root;
            since_root = 0;

            small_lobes = std::abs(lobe) < spec.abs_tol ? small_lobes + 1 : 0;
            if (small_lobes >= 2) return partial;

            const int n = static_cast<int>(sums.size());
            const int order = std::min(kAccelerationOrder, n - 1);
            const double e = binomial_average(sums, order);
            if (!accelerated.empty() && order == kAccelerationOrder) {
                const double diff = std::abs(e - accelerated.back());
                agreements = diff <= std::max(spec.abs_tol, spec.rel_tol * std::abs(e))
                                 ? agreements + 1
                                 : 0;
                if (agreements >= 2) return e;
            }
            accelerated.push_back(e);
            if (n > spec.max_subdivisions) {
                std::ostringstream os;
                os << "lobe series did not converge after " << n << " lobes";
                throw NumericalError(std::string(name), os.str());
            }
        } else if (since_root >= max_gap_steps) {
            QuadratureSpec tail_spec = spec.tightened(10.0);
            const double tail = integrate_semi_infinite(checked, lobe_start, tail_spec, name, period);
            return partial + tail;
        }
        if (s != 0) s_prev = s;
        x_prev = x;
        f_prev = fx;
    }
}

double gil_pelaez_cdf(const std::function<ComplexValue(double)>& phi, double t,
                      const QuadratureSpec& spec, double scale, std::string_view name) {
    if (!(scale > 0.0) || !std::isfinite(scale))
        throw DomainError("gil_pelaez_cdf: scale must be positive and finite");
    auto integrand = [&](double v) {
        const double w = v * scale;
        const ComplexValue rot = std::polar(1.0, -w * t);
        return (rot * phi(w)).imag() / v;
    };
    const double integral = integrate_oscillatory(integrand, spec, 2.0 * std::numbers::pi, name);
    const double cdf = 0.5 - integral / std::numbers::pi;
    return std::clamp(cdf, 0.0, 1.0);
}

}  // namespace hetcran
