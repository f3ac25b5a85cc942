#pragma once

#include <functional>
#include <vector>

namespace roughvol {

// Adaptive Gauss-Kronrod (G7,K15) on a finite interval.  Subdivides until the
// local error estimate is below max(abs_tol, rel_tol * |total|) distributed
// over the interval, or the depth cap is reached.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-10, double abs_tol = 0.0);

// Same, with a list of interior break points that seed the subdivision.
// Useful when the mass of the integrand sits far from the endpoints.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& knots, double rel_tol = 1e-10,
                 double abs_tol = 0.0);

// Integral over (0, inf) through the substitution x = e^t, for integrands
// with power-law behaviour x^p near zero (p > -1) and either power-law decay
// x^-q (q > 1) or exponential decay e^{-r x} at infinity.  The transformed
// integrand decays exponentially at both ends of the t axis with rates
// (p + 1) and (q - 1) respectively, so the integration window can be chosen
// from those rates alone.  `knots` are x-locations seeding the subdivision.
double integrate_zero_inf(const std::function<double(double)>& f,
                          double power_at_zero, double power_decay,
                          double exp_decay_rate,
                          const std::vector<double>& knots = {},
                          double rel_tol = 1e-10);

}  // namespace roughvol
