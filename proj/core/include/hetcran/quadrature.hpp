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

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <queue>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "hetcran/errors.hpp"

namespace hetcran {

using ComplexValue = std::complex<double>;

/// Tolerances shared by every integral in the library.
struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 2000;
    /// Tail-mass bound used when a semi-infinite transform is cut off.
    double truncation_guard = 1e-12;

    /// Throws DomainError when a field violates its invariant.
    void validate() const;

    /// Copy with both tolerances divided by `factor`.
    QuadratureSpec tightened(double factor = 10.0) const;
};

template <class T>
struct QuadratureResult {
    T value{};
    double error = 0.0;
    int subdivisions = 0;
};

namespace detail {

struct Gk15Table {
    std::array<double, 8> xk;  // Kronrod abscissae, xk[0] = 0
    std::array<double, 8> wk;
    std::array<double, 4> wg;  // Gauss weights for xk[0], xk[2], xk[4], xk[6]
};

const Gk15Table& gk15();

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const ComplexValue& v) { return std::abs(v); }
inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(const ComplexValue& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

[[noreturn]] void throw_non_finite(std::string_view name, double x);
[[noreturn]] void throw_no_convergence(std::string_view name, double error, double target,
                                       int subdivisions);

template <class T>
struct Panel {
    double a;
    double b;
    T value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <class T, class F>
Panel<T> gk15_panel(F& f, double a, double b, std::string_view name) {
    const Gk15Table& t = gk15();
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    std::array<T, 15> fv;
    fv[0] = f(c);
    if (!is_finite(fv[0])) throw_non_finite(name, c);
    for (int i = 1; i < 8; ++i) {
        const double dx = h * t.xk[i];
        fv[2 * i - 1] = f(c - dx);
        fv[2 * i] = f(c + dx);
        if (!is_finite(fv[2 * i - 1])) throw_non_finite(name, c - dx);
        if (!is_finite(fv[2 * i])) throw_non_finite(name, c + dx);
    }
    T resk = fv[0] * t.wk[0];
    T resg = fv[0] * t.wg[0];
    double resabs = magnitude(fv[0]) * t.wk[0];
    for (int i = 1; i < 8; ++i) {
        const T pair = fv[2 * i - 1] + fv[2 * i];
        resk += pair * t.wk[i];
        resabs += (magnitude(fv[2 * i - 1]) + magnitude(fv[2 * i])) * t.wk[i];
        if (i % 2 == 0) resg += pair * t.wg[i / 2];
    }
    const T mean = resk * 0.5;
    double resasc = magnitude(fv[0] - mean) * t.wk[0];
    for (int i = 1; i < 8; ++i)
        resasc += (magnitude(fv[2 * i - 1] - mean) + magnitude(fv[2 * i] - mean)) * t.wk[i];
    const double ah = std::abs(h);
    resabs *= ah;
    resasc *= ah;
    double err = magnitude((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
        err = std::max(50.0 * eps * resabs, err);
    return {a, b, resk * h, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) quadrature of f over [a, b].
template <class F, class T = std::invoke_result_t<F&, double>>
QuadratureResult<T> integrate_detailed(F&& f, double a, double b, const QuadratureSpec& spec,
                                       std::string_view name = "integral") {
    spec.validate();
    if (a == b) return {};
    std::priority_queue<detail::Panel<T>> heap;
    std::vector<detail::Panel<T>> frozen;
    heap.push(detail::gk15_panel<T>(f, a, b, name));
    T total = heap.top().value;
    double error = heap.top().error;
    int subdivisions = 0;
    constexpr double eps = std::numeric_limits<double>::epsilon();
    while (!heap.empty()) {
        const double target = std::max(spec.abs_tol, spec.rel_tol * detail::magnitude(total));
        if (error <= target) break;
        if (subdivisions >= spec.max_subdivisions)
            detail::throw_no_convergence(name, error, target, subdivisions);
        detail::Panel<T> worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (std::abs(worst.b - worst.a) <= 100.0 * eps * std::max(1.0, std::abs(mid))) {
            frozen.push_back(worst);
            continue;
        }
        auto left = detail::gk15_panel<T>(f, worst.a, mid, name);
        auto right = detail::gk15_panel<T>(f, mid, worst.b, name);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++subdivisions;
    }
    QuadratureResult<T> out;
    out.subdivisions = subdivisions;
    std::vector<detail::Panel<T>> all = std::move(frozen);
    while (!heap.empty()) {
        all.push_back(heap.top());
        heap.pop();
    }
    std::sort(all.begin(), all.end(), [](const auto& l, const auto& r) { return l.a < r.a; });
    for (const auto& p : all) {
        out.value += p.value;
        out.error += p.error;
    }
    const double target = std::max(spec.abs_tol, spec.rel_tol * detail::magnitude(out.value));
    if (out.error > 100.0 * target)
        detail::throw_no_convergence(name, out.error, target, subdivisions);
    return out;
}

template <class F>
auto integrate(F&& f, double a, double b, const QuadratureSpec& spec,
               std::string_view name = "integral") {
    return integrate_detailed(std::forward<F>(f), a, b, spec, name).value;
}

/// Integral of f over [a, inf) via x = a + scale * t / (1 - t).
template <class F>
auto integrate_semi_infinite(F&& f, double a, const QuadratureSpec& spec,
                             std::string_view name = "integral", double scale = 1.0) {
    using T = std::invoke_result_t<F&, double>;
    if (!(scale > 0.0)) throw DomainError("integrate_semi_infinite: scale must be positive");
    auto g = [&](double t) -> T {
        const double om = 1.0 - t;
        const double x = a + scale * t / om;
        const T v = f(x);
        if (v == T{}) return T{};
        return v * (scale / (om * om));
    };
    return integrate_detailed(g, 0.0, 1.0, spec, name).value;
}

/// Integral over [0, inf) of an integrand that changes sign with roughly
/// the given period. Lobes between successive zeros are summed and the
/// alternating series is accelerated by repeated averaging.
double integrate_oscillatory(const std::function<double(double)>& f, const QuadratureSpec& spec,
                             double period = 2.0 * std::numbers::pi,
                             std::string_view name = "oscillatory integral");

/// CDF at t of a real random variable with characteristic function phi.
/// `scale` sets the w-axis unit; choose it near the reciprocal of the
/// distance between t and the bulk of the distribution.
double gil_pelaez_cdf(const std::function<ComplexValue(double)>& phi, double t,
                      const QuadratureSpec& spec, double scale,
                      std::string_view name = "gil-pelaez inversion");

}  // namespace hetcran
