#include "roughvol/kernels_acf.hpp"

#include <cmath>
#include <mutex>
#include <unordered_map>

#include "roughvol/errors.hpp"
#include "roughvol/quadrature.hpp"
#include "roughvol/special_functions.hpp"

namespace roughvol {

namespace {

constexpr double kSqrtPi = 1.772453850905516027298167483341;

double power_kernel(double alpha, double gamma, double x) {
    return std::pow(x, alpha) * std::pow(1.0 + x, -gamma - alpha);
}

// integral of g(x) g(x+h) over (0, inf) for the power-law kernel
double power_autocov_integral(double alpha, double gamma, double h,
                              double rel_tol) {
    auto f = [alpha, gamma, h](double x) {
        return power_kernel(alpha, gamma, x) * power_kernel(alpha, gamma, x + h);
    };
    std::vector<double> knots{1.0};
    if (h > 0.0) {
        knots.push_back(h);
        knots.push_back(h + 1.0);
    }
    // near 0 the integrand is ~ x^alpha, beyond max(1,h) it is ~ x^(-2 gamma)
    return integrate_zero_inf(f, alpha, 2.0 * gamma, 0.0, knots, rel_tol,
                              std::max(1.0, h));
}

// Variogram of the power-law BSS process divided by E[v0^2]:
//   int_0^h g^2 + int_0^inf (g(x+h) - g(x))^2 dx
// computed in rescaled coordinates x = h u so that small h never cancels.
double power_variogram_integral(double alpha, double gamma, double h,
                                double rel_tol) {
    const double a1 = 2.0 * alpha + 1.0;
    // T1 = h^(2a+1) int_0^1 u^2a (1+hu)^(-2g-2a) du; substitute u = w^(1/(2a+1))
    auto t1_integrand = [alpha, gamma, h, a1](double w) {
        const double u = std::pow(w, 1.0 / a1);
        return std::pow(1.0 + h * u, -2.0 * gamma - 2.0 * alpha) / a1;
    };
    const double t1 = integrate(t1_integrand, 0.0, 1.0, rel_tol);
    // T2 = h^(2a+1) int_0^inf D(u)^2 du
    auto diff = [alpha, gamma, h](double u) {
        const double d = std::pow(u + 1.0, alpha) *
                             std::pow(1.0 + h * (u + 1.0), -gamma - alpha) -
                         std::pow(u, alpha) * std::pow(1.0 + h * u, -gamma - alpha);
        return d * d;
    };
    const double onset = std::max(1.0, 1.0 / h);
    const double t2 = integrate_zero_inf(diff, 2.0 * alpha, 2.0 * gamma + 2.0,
                                         0.0, {1.0, onset}, rel_tol, onset);
    return std::pow(h, a1) * (t1 + t2);
}

double gamma_bss_acf(double alpha, double lambda, double h) {
    if (h == 0.0) return 1.0;
    const double nu = alpha + 0.5;
    const double x = lambda * h;
    if (x > 705.0) return 0.0;
    const double k = bessel_k(nu, x);
    // Matern form: Gamma(a+1)/sqrt(pi) (h/2l)^(a+1/2) K_(a+1/2)(l h),
    // normalized by (2l)^(-2a-1) Gamma(2a+1)
    const double log_pref = std::lgamma(alpha + 1.0) - std::log(kSqrtPi) +
                            nu * std::log(h / (2.0 * lambda)) +
                            (2.0 * alpha + 1.0) * std::log(2.0 * lambda) -
                            std::lgamma(2.0 * alpha + 1.0);
    return std::exp(log_pref) * k;
}

struct PowerKey {
    double alpha, gamma, h;
    bool operator==(const PowerKey&) const = default;
};
struct PowerKeyHash {
    std::size_t operator()(const PowerKey& k) const {
        auto mix = [](std::size_t s, double v) {
            return s ^ (std::hash<double>{}(v) + 0x9e3779b97f4a7c15ULL + (s << 6) +
                        (s >> 2));
        };
        return mix(mix(std::hash<double>{}(k.alpha), k.gamma), k.h);
    }
};

double power_acf_cached(double alpha, double gamma, double h) {
    static std::mutex mu;
    static std::unordered_map<PowerKey, double, PowerKeyHash> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({alpha, gamma, h});
        if (it != cache.end()) return it->second;
    }
    const double denom = beta_function(2.0 * alpha + 1.0, 2.0 * gamma - 1.0);
    const double value =
        power_autocov_integral(alpha, gamma, h, kPowerAcfTol) / denom;
    std::lock_guard lock(mu);
    if (cache.size() > 200000) cache.clear();
    cache.emplace(PowerKey{alpha, gamma, h}, value);
    return value;
}

}  // namespace

const char* family_name(Family f) {
    switch (f) {
        case Family::Cauchy: return "cauchy";
        case Family::PowerBss: return "power-bss";
        case Family::GammaBss: return "gamma-bss";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "cauchy") return Family::Cauchy;
    if (name == "power-bss" || name == "power") return Family::PowerBss;
    if (name == "gamma-bss" || name == "gamma") return Family::GammaBss;
    throw ConfigError("unknown model family: " + name);
}

void validate(const ModelSpec& spec) {
    if (!(spec.alpha > -0.5 && spec.alpha < 0.5))
        throw InvalidSpec("alpha must lie in (-1/2, 1/2)");
    if (!(spec.variance > 0.0)) throw InvalidSpec("variance must be positive");
    if (!(spec.xi > 0.0)) throw InvalidSpec("xi must be positive");
    switch (spec.family) {
        case Family::Cauchy:
            if (!(spec.memory > 0.0)) throw InvalidSpec("Cauchy beta must be positive");
            break;
        case Family::PowerBss:
            if (!(spec.memory > 0.5)) throw InvalidSpec("Power-BSS gamma must exceed 1/2");
            break;
        case Family::GammaBss:
            if (!(spec.memory > 0.0))
                throw InvalidSpec("Gamma-BSS lambda must be positive");
            break;
    }
}

double kernel_value(const ModelSpec& spec, double x) {
    if (!(x > 0.0)) throw DomainError("kernel_value: requires x > 0");
    switch (spec.family) {
        case Family::PowerBss: return power_kernel(spec.alpha, spec.memory, x);
        case Family::GammaBss:
            return std::pow(x, spec.alpha) * std::exp(-spec.memory * x);
        case Family::Cauchy: break;
    }
    throw UnsupportedFamily("the Cauchy family has no moving-average kernel");
}

double acf(const ModelSpec& spec, double h) {
    if (!(h >= 0.0)) throw DomainError("acf: requires h >= 0");
    if (h == 0.0) return 1.0;
    const double a1 = 2.0 * spec.alpha + 1.0;
    switch (spec.family) {
        case Family::Cauchy:
            return std::exp(-(spec.memory / a1) * std::log1p(std::pow(h, a1)));
        case Family::GammaBss: return gamma_bss_acf(spec.alpha, spec.memory, h);
        case Family::PowerBss:
            return power_acf_cached(spec.alpha, spec.memory, h);
    }
    throw UnsupportedFamily("acf: unknown family");
}

double one_minus_acf(const ModelSpec& spec, double h) {
    if (!(h >= 0.0)) throw DomainError("one_minus_acf: requires h >= 0");
    if (h == 0.0) return 0.0;
    const double a1 = 2.0 * spec.alpha + 1.0;
    switch (spec.family) {
        case Family::Cauchy:
            return -std::expm1(-(spec.memory / a1) * std::log1p(std::pow(h, a1)));
        case Family::GammaBss:
            // the closed form keeps enough precision: 1 - rho >= O(h^(2a+1))
            // while the Matern evaluation is accurate to ~1e-13
            return 1.0 - gamma_bss_acf(spec.alpha, spec.memory, h);
        case Family::PowerBss: {
            const double denom =
                2.0 * beta_function(a1, 2.0 * spec.memory - 1.0);
            return power_variogram_integral(spec.alpha, spec.memory, h,
                                            kPowerAcfTol) /
                   denom;
        }
    }
    throw UnsupportedFamily("one_minus_acf: unknown family");
}

double autocovariance(const ModelSpec& spec, double h) {
    return spec.variance * acf(spec, h);
}

double variance_closed_form(const ModelSpec& spec, double vol_of_vol_sq) {
    if (!(vol_of_vol_sq > 0.0))
        throw DomainError("variance_closed_form: requires positive v^2");
    const double a1 = 2.0 * spec.alpha + 1.0;
    switch (spec.family) {
        case Family::PowerBss:
            return vol_of_vol_sq * beta_function(a1, 2.0 * spec.memory - 1.0);
        case Family::GammaBss:
            return vol_of_vol_sq * std::pow(2.0 * spec.memory, -a1) *
                   std::tgamma(a1);
        case Family::Cauchy: break;
    }
    throw UnsupportedFamily("variance_closed_form: Cauchy has no kernel");
}

double beta_equivalent(double gamma) {
    if (gamma == 1.0)
        throw CriticalGamma("gamma == 1: polynomial decay exponent indeterminate");
    if (!(gamma > 0.5)) throw DomainError("beta_equivalent: requires gamma > 1/2");
    return gamma > 1.0 ? gamma : 2.0 * gamma - 1.0;
}

AsymptoticSlopes asymptotic_slopes(const ModelSpec& spec) {
    validate(spec);
    AsymptoticSlopes out;
    out.short_slope = 2.0 * spec.alpha + 1.0;
    switch (spec.family) {
        case Family::Cauchy:
            out.long_mode = LongMemoryMode::Polynomial;
            out.long_value = spec.memory;
            break;
        case Family::PowerBss:
            out.long_mode = LongMemoryMode::Polynomial;
            out.long_value = beta_equivalent(spec.memory);
            break;
        case Family::GammaBss:
            out.long_mode = LongMemoryMode::Exponential;
            out.long_value = spec.memory;
            break;
    }
    return out;
}

double lognormal_acf_transform(double rho_x, double var_x) {
    if (!(std::abs(rho_x) <= 1.0))
        throw DomainError("lognormal_acf_transform: |rho| must be <= 1");
    if (!(var_x > 0.0))
        throw DomainError("lognormal_acf_transform: variance must be positive");
    return std::expm1(var_x * rho_x) / std::expm1(var_x);
}

double one_minus_lognormal_acf(double one_minus_rho, double var_x) {
    // exp(v rho) (exp(v (1-rho)) - 1) / (exp(v) - 1)
    return std::exp(var_x * (1.0 - one_minus_rho)) *
           std::expm1(var_x * one_minus_rho) / std::expm1(var_x);
}

std::vector<double> acf_at(const ModelSpec& spec, const std::vector<double>& lags) {
    std::vector<double> out(lags.size());
    for (std::size_t i = 0; i < lags.size(); ++i) out[i] = acf(spec, lags[i]);
    return out;
}

}  // namespace roughvol
