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

#include <cmath>
#include <numbers>

namespace hetcran {

void InterferenceField::validate() const {
    if (!(eta > 2.0)) throw DomainError("interference field: eta must be > 2");
    if (!(density >= 0.0)) throw DomainError("interference field: density must be >= 0");
    if (!(power_scale > 0.0)) throw DomainError("interference field: power scale must be > 0");
    if (!(r_min >= 0.0) || !std::isfinite(r_min))
        throw DomainError("interference field: r_min must be finite and >= 0");
    if (kind == MarkKind::gamma && shape < 1)
        throw DomainError("interference field: shape must be >= 1");
}

namespace {

constexpr double kPi = std::numbers::pi;

// (1 - (1 + y)^-S) / y
double ratio(double y, int S) {
    if (std::abs(y) < 1e-6) {
        const double s = S;
        return s - 0.5 * s * (s + 1.0) * y + s * (s + 1.0) * (s + 2.0) / 6.0 * y * y;
    }
    return -std::expm1(-S * std::log1p(y)) / y;
}

ComplexValue ratio(ComplexValue y, int S) {
    const double s = S;
    if (std::abs(y) * s < 1e-3) {
        ComplexValue acc = 0.0;
        ComplexValue pw = 1.0;
        for (int k = 0; k < 6; ++k) {
            const double c = binomial(S + k, k + 1);
            acc += (k % 2 == 0 ? c : -c) * pw;
            pw *= y;
        }
        return acc;
    }
    return (1.0 - std::exp(-s * std::log(1.0 + y))) / y;
}

double one_minus_pow(double y, int S) { return -std::expm1(-S * std::log1p(y)); }

ComplexValue one_minus_pow(ComplexValue y, int S) {
    if (std::abs(y) * S < 1e-3) return y * ratio(y, S);
    return 1.0 - std::exp(-static_cast<double>(S) * std::log(1.0 + y));
}

// (1 / (eta - 2)) int_0^1 b q(b u^p) du with p = eta / (eta - 2).
template <class T>
T outer_tail(T b, double eta, int S, const QuadratureSpec& spec) {
    const double p = eta / (eta - 2.0);
    const double mag = std::abs(b);
    auto in_u = [&](double u) -> T { return b * ratio(b * std::pow(u, p), S); };
    T out{};
    const double u0 = mag > 1.0 ? std::pow(mag, -1.0 / p) : 1.0;
    if (u0 >= 1.0) {
        out = integrate(in_u, 0.0, 1.0, spec, "laplace exponent (outer)");
    } else {
        // u = u0 v maps b u^p onto the unit-modulus phase b / |b|.
        const T phase = b / mag;
        auto in_v = [&](double v) -> T { return ratio(phase * std::pow(v, p), S); };
        out = b * u0 * integrate(in_v, 0.0, 1.0, spec, "laplace exponent (outer core)");
        auto in_z = [&](double z) -> T {
            const double u = std::exp(z);
            return b * ratio(b * std::exp(p * z), S) * u;
        };
        out += integrate(in_z, std::log(u0), 0.0, spec, "laplace exponent (outer log)");
    }
    return out / (eta - 2.0);
}

template <class T>
T direct(const InterferenceField& field, T s, const QuadratureSpec& spec) {
    field.validate();
    if (s == T{} || field.density == 0.0) return T{};
    const int S = field.effective_shape();
    const double eta = field.eta;
    const T a = s * field.power_scale;
    if (field.r_min > 0.0) {
        const double rm = field.r_min;
        const T b = a * std::pow(rm, -eta);
        return 2.0 * kPi * field.density * rm * rm * outer_tail(b, eta, S, spec);
    }
    // r = |a|^(1/eta) rho leaves a unit-modulus mark scale.
    const double mag = std::abs(a);
    const T phase = a / mag;
    auto inner = [&](double rho) -> T {
        return one_minus_pow(phase * std::pow(rho, -eta), S) * rho;
    };
    const T core = integrate(inner, 0.0, 1.0, spec, "laplace exponent (core)");
    const T tail = outer_tail(phase, eta, S, spec);
    return 2.0 * kPi * field.density * std::pow(mag, 2.0 / eta) * (core + tail);
}

}  // namespace

double laplace_exponent_integral(const InterferenceField& field, double s,
                                 const QuadratureSpec& spec) {
    if (!(s >= 0.0)) throw DomainError("laplace_exponent_integral: s must be >= 0");
    return direct<double>(field, s, spec);
}

ComplexValue laplace_exponent_integral(const InterferenceField& field, ComplexValue s,
                                       const QuadratureSpec& spec) {
    if (!(s.real() >= 0.0)) throw DomainError("laplace_exponent_integral: Re(s) must be >= 0");
    if (s.imag() == 0.0) return direct<double>(field, s.real(), spec);
    return direct<ComplexValue>(field, s, spec);
}

double laplace_exponent_closed_form(const InterferenceField& field, double s) {
    field.validate();
    if (field.r_min != 0.0)
        throw DomainError("laplace_exponent_closed_form: requires r_min = 0");
    if (!(s >= 0.0)) throw DomainError("laplace_exponent_closed_form: s must be >= 0");
    if (s == 0.0) return 0.0;
    const double d = 2.0 / field.eta;
    const double S = field.effective_shape();
    const double g = std::tgamma(1.0 - d) * std::exp(std::lgamma(S + d) - std::lgamma(S));
    return kPi * field.density * std::pow(s * field.power_scale, d) * g;
}

double laplace_exponent_binomial_sum(const InterferenceField& field, double s) {
    field.validate();
    if (field.r_min != 0.0)
        throw DomainError("laplace_exponent_binomial_sum: requires r_min = 0");
    if (!(s >= 0.0)) throw DomainError("laplace_exponent_binomial_sum: s must be >= 0");
    if (s == 0.0) return 0.0;
    const double d = 2.0 / field.eta;
    const int S = field.effective_shape();
    double sum = 0.0;
    for (int mu = 1; mu <= S; ++mu)
        sum += binomial(S, mu) *
               std::exp(std::lgamma(mu - d) + std::lgamma(S - mu + d) - std::lgamma(S));
    return 2.0 * kPi * field.density * std::pow(s * field.power_scale, d) * sum / field.eta;
}

double laplace_exponent_incomplete_beta(const InterferenceField& field, double s,
                                        const QuadratureSpec& spec) {
    field.validate();
    if (!(field.r_min > 0.0))
        throw DomainError("laplace_exponent_incomplete_beta: requires r_min > 0");
    if (!(s >= 0.0)) throw DomainError("laplace_exponent_incomplete_beta: s must be >= 0");
    if (s == 0.0) return 0.0;
    const double d = 2.0 / field.eta;
    const int S = field.effective_shape();
    const double a = s * field.power_scale;
    const double x = -a * std::pow(field.r_min, -field.eta);
    double sum = 0.0;
    for (int mu = 1; mu <= S; ++mu)
        sum += binomial(S, mu) * incomplete_beta_general(x, mu - d, 1.0 - S, spec);
    return -2.0 * kPi * field.density * std::pow(a, d) * sum / field.eta;
}

double unit_interference_constant(double eta, int shape, const QuadratureSpec& spec) {
    InterferenceField unit;
    unit.kind = MarkKind::gamma;
    unit.density = 1.0;
    unit.power_scale = 1.0;
    unit.eta = eta;
    unit.shape = shape;
    unit.r_min = 0.0;
    return laplace_exponent_integral(unit, 1.0, spec);
}

}  // namespace hetcran
