#pragma once

#include "mixdiff/vecmat.hpp"

namespace mixdiff {

/// Linear noise schedule of the forward diffusion process on t in [0, 1].
///
/// beta(t) = beta0 + (beta1 - beta0) * t drives the variance-preserving SDE;
/// the closed-form integral gives the marginal scale alpha(t) = exp(-I/2) and
/// variance lambda(t) = 1 - exp(-I), so alpha(t)^2 + lambda(t) = 1.
/// Discretization (step count) is a sampler parameter, not a schedule one.
struct NoiseSchedule {
    double beta0 = 0.05;
    double beta1 = 20.0;

    static constexpr double horizon = 1.0;

    NoiseSchedule() = default;
    NoiseSchedule(double b0, double b1);

    double beta_at(double t) const;
    double beta_integral(double t) const;
    double alpha(double t) const;
    double lambda_var(double t) const;

    /// alpha(t) * x0 + sqrt(lambda(t)) * eps, eps a standard normal draw.
    Vec forward_sample(const Vec& x0, double t, const Vec& eps) const;

    /// Conditional score -noise / lambda(t), where noise = x_t - alpha(t) * x0
    /// is the noise actually injected by the forward process (covariance
    /// lambda(t) * I). Singular at t = 0.
    Vec score_target(const Vec& noise, double t) const;
};

} // namespace mixdiff
