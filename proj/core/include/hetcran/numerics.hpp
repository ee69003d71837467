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

#include "hetcran/quadrature.hpp"

namespace hetcran {

/// Upper incomplete gamma function; negative a uses downward recurrence.
double upper_incomplete_gamma(double a, double x);

/// Exponential integral E1(x) for x > 0.
double exponential_integral_e1(double x);

/// exp(x) * E1(x), stable for large x.
double exp_scaled_e1(double x);

double digamma(double x);

/// Integral of t^(a-1) (1-t)^(b-1) over [0, x].
///
/// For x < 0 the path is t = -u, and the value is
/// -integral over [0, |x|] of u^(a-1) (1+u)^(b-1) du.
double incomplete_beta_general(double x, double a, double b,
                               const QuadratureSpec& spec = QuadratureSpec{});

enum class MarkKind {
    exponential,  // unit-mean exponential marks (shape 1)
    gamma,        // Gamma(shape, 1) marks
};

/// Parameters of 2 pi lambda int_{r_min}^inf (1 - (1 + s c r^-eta)^-S) r dr.
struct InterferenceField {
    MarkKind kind = MarkKind::exponential;
    double density = 0.0;      // per m^2
    double power_scale = 1.0;  // c, W m^eta
    double eta = 4.0;
    int shape = 1;             // S, forced to 1 for exponential marks
    double r_min = 0.0;        // m

    int effective_shape() const { return kind == MarkKind::exponential ? 1 : shape; }
    void validate() const;
};

/// Exponent of the Laplace functional evaluated by direct quadrature.
double laplace_exponent_integral(const InterferenceField& field, double s,
                                 const QuadratureSpec& spec = QuadratureSpec{});
ComplexValue laplace_exponent_integral(const InterferenceField& field, ComplexValue s,
                                       const QuadratureSpec& spec = QuadratureSpec{});

/// Whole-plane closed form pi lambda (s c)^(2/eta) Gamma(1-d) Gamma(S+d) / Gamma(S).
/// Requires r_min = 0.
double laplace_exponent_closed_form(const InterferenceField& field, double s);

/// Whole-plane closed form as the binomial sum of Gamma products.
double laplace_exponent_binomial_sum(const InterferenceField& field, double s);

/// Closed form through incomplete beta functions of negative argument.
/// Requires r_min > 0.
double laplace_exponent_incomplete_beta(const InterferenceField& field, double s,
                                        const QuadratureSpec& spec = QuadratureSpec{});

/// 2 pi int_0^inf (1 - (1 + rho^-eta)^-S) rho d rho by quadrature.
double unit_interference_constant(double eta, int shape,
                                  const QuadratureSpec& spec = QuadratureSpec{});

/// Binomial coefficient as a double.
double binomial(int n, int k);

}  // namespace hetcran
