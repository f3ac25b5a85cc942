#include "roughvol/special_functions.hpp"

#include <cmath>
#include <limits>

#include "roughvol/errors.hpp"

namespace roughvol {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = 3.141592653589793238462643383279503;

double chebev(const double* c, int m, double x) {
    double d = 0.0, dd = 0.0;
    const double x2 = 2.0 * x;
    for (int j = m - 1; j >= 1; --j) {
        const double sv = d;
        d = x2 * d - dd + c[j];
        dd = sv;
    }
    return x * d - dd + 0.5 * c[0];
}

// Chebyshev expansions of Temme's auxiliary functions
//   Gamma1(mu) = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
//   Gamma2(mu) = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
// for |mu| <= 1/2.
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl,
                  double& gammi) {
    static const double c1[] = {-1.142022680371168e0, 6.5165112670737e-3,
                                3.087090173086e-4,    -3.4706269649e-6,
                                6.9437664e-9,         3.67795e-11,
                                -1.356e-13};
    static const double c2[] = {1.843740587300905e0, -7.68528408447867e-2,
                                1.2719271366546e-3,  -4.9717367042e-6,
                                -3.31261198e-8,      2.423096e-10,
                                -1.702e-13,          -1.49e-15};
    const double xx = 8.0 * mu * mu - 1.0;
    gam1 = chebev(c1, 7, xx);
    gam2 = chebev(c2, 8, xx);
    gampl = gam2 - mu * gam1;
    gammi = gam2 + mu * gam1;
}

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, 0 < x <= 2 (Temme 1975).
void bessel_k_temme(double mu, double x, double& kmu, double& kmup1) {
    const int max_iter = 20000;
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = (std::abs(pimu) < kEps) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = (std::abs(e) < kEps) ? 1.0 : std::sinh(e) / e;
    double gam1, gam2, gampl, gammi;
    temme_gammas(mu, gam1, gam2, gampl, gammi);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    int i = 1;
    for (; i <= max_iter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu * mu);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        const double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    if (i > max_iter) throw NumericalError("bessel_k: series did not converge");
    kmu = sum;
    kmup1 = sum1 * 2.0 / x;
}

// K_mu(x) and K_{mu+1}(x) for |mu| <= 1/2, x > 2 (Steed's CF2).
void bessel_k_cf2(double mu, double x, double& kmu, double& kmup1) {
    const int max_iter = 20000;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu * mu;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= max_iter; ++i) {
        a -= 2 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    if (i > max_iter)
        throw NumericalError("bessel_k: continued fraction did not converge");
    h = a1 * h;
    kmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    kmup1 = kmu * (mu + x + 0.5 - h) / x;
}

}  // namespace

double bessel_k(double nu, double x) {
    if (!(x > 0.0)) throw DomainError("bessel_k: requires x > 0");
    if (!(nu >= 0.0) || !std::isfinite(nu))
        throw DomainError("bessel_k: requires nu >= 0");
    if (x > 705.0) return 0.0;  // exp(-x) underflows

    // reduce to |mu| <= 1/2 plus integer steps
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;
    double kmu, kmup1;
    if (x <= 2.0)
        bessel_k_temme(mu, x, kmu, kmup1);
    else
        bessel_k_cf2(mu, x, kmu, kmup1);
    const double xi2 = 2.0 / x;
    for (int i = 1; i <= nl; ++i) {
        const double knext = (mu + i) * xi2 * kmup1 + kmu;
        kmu = kmup1;
        kmup1 = knext;
    }
    return kmu;
}

double beta_function(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw DomainError("beta_function: requires a, b > 0");
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x * 0.7071067811865475244); }

double normal_pdf(double x) {
    return 0.3989422804014326779399461 * std::exp(-0.5 * x * x);
}

double normal_quantile(double p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw DomainError("normal_quantile: requires p in (0,1)");
    // Acklam's approximation
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    // one Halley step
    const double e = normal_cdf(x) - p;
    const double u = e / normal_pdf(x);
    x -= u / (1.0 + 0.5 * x * u);
    return x;
}

}  // namespace roughvol
