#pragma once

#include <string>
#include <vector>

namespace roughvol {

enum class Family { Cauchy, PowerBss, GammaBss };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

// A stationary model for log volatility X, with sigma = xi * exp(X).
// `memory` is beta for Cauchy, gamma for Power-BSS, lambda for Gamma-BSS.
struct ModelSpec {
    Family family = Family::Cauchy;
    double alpha = -0.3;
    double memory = 0.5;
    double variance = 1.0;
    double xi = 1.0;
};

// Throws InvalidSpec when a field is outside its family domain.
void validate(const ModelSpec& spec);

// Moving-average kernel g of the BSS families, evaluated at x > 0.
//   Power-BSS: g(x) = x^alpha (1+x)^(-gamma-alpha)
//   Gamma-BSS: g(x) = x^alpha e^(-lambda x)
double kernel_value(const ModelSpec& spec, double x);

// Autocorrelation rho(h), h >= 0.  Cauchy and Gamma-BSS are closed forms
// (the latter the Matern function); Power-BSS is numerical with relative
// tolerance `kPowerAcfTol`.
double acf(const ModelSpec& spec, double h);

// 1 - rho(h) evaluated without cancellation; needed when rho(h) is close
// to 1, e.g. in small-lag roughness checks.
double one_minus_acf(const ModelSpec& spec, double h);

// Autocovariance variance * rho(h).
double autocovariance(const ModelSpec& spec, double h);

// Stationary variance implied by the kernel and the squared volatility of
// volatility:  Power-BSS: v2 * B(2a+1, 2g-1);  Gamma-BSS: v2 * (2l)^(-2a-1)
// * Gamma(2a+1).  Cauchy has no kernel and is unsupported.
double variance_closed_form(const ModelSpec& spec, double vol_of_vol_sq);

enum class LongMemoryMode { Polynomial, Exponential };

struct AsymptoticSlopes {
    double short_slope;      // 2 alpha + 1
    LongMemoryMode long_mode;
    double long_value;       // polynomial exponent, or exponential rate
};

// Short-lag slope of log(1-rho) and the long-lag decay mode/value.
// Throws CriticalGamma for Power-BSS with gamma == 1 (indeterminate case).
AsymptoticSlopes asymptotic_slopes(const ModelSpec& spec);

// Long-run polynomial exponent implied by a Power-BSS gamma:
// gamma for gamma > 1, 2*gamma - 1 for gamma in (1/2, 1).
double beta_equivalent(double gamma);

// Exact ACF of exp(X) for Gaussian X with Var(X) = var_x and Corr = rho_x:
//   (exp(var_x * rho_x) - 1) / (exp(var_x) - 1)
double lognormal_acf_transform(double rho_x, double var_x);

// 1 - lognormal_acf_transform(1 - one_minus_rho, var_x), cancellation-safe.
double one_minus_lognormal_acf(double one_minus_rho, double var_x);

// rho at the lags h_i (convenience; Power-BSS results are cached).
std::vector<double> acf_at(const ModelSpec& spec, const std::vector<double>& lags);

// Relative tolerance of the Power-BSS ACF quadrature.
inline constexpr double kPowerAcfTol = 1e-9;

}  // namespace roughvol
