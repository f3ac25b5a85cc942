#pragma once

namespace roughvol {

// Modified Bessel function of the second kind K_nu(x), nu >= 0, x > 0.
// Temme's series for x <= 2 and a Steed continued fraction for x > 2,
// with upward recurrence in the order.  Relative accuracy ~1e-13 over
// the range used here; underflows to 0 for x beyond ~705.
double bessel_k(double nu, double x);

// Euler beta function B(a, b) for a, b > 0.
double beta_function(double a, double b);

double normal_cdf(double x);
double normal_pdf(double x);

// Inverse standard normal CDF (Acklam's rational approximation plus one
// Halley refinement step).
double normal_quantile(double p);

}  // namespace roughvol
