#include "roughvol/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "roughvol/errors.hpp"

namespace roughvol {

namespace {

// Kronrod-15 nodes/weights on [-1,1] with the embedded Gauss-7 rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(c);
    double result_gauss = fc * kWg[3];
    double result_kronrod = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        result_kronrod += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
    }
    const double value = result_kronrod * half;
    const double err = std::abs((result_kronrod - result_gauss) * half);
    return {value, err};
}

struct Panel {
    double a, b, value, error;
};

double adaptive(const std::function<double(double)>& f, double a, double b,
                const std::vector<double>& knots, double rel_tol,
                double abs_tol) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double k : knots)
        if (k > a && k < b) pts.push_back(k);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());

    std::vector<Panel> heap;
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        auto r = gk15(f, pts[i], pts[i + 1]);
        heap.push_back({pts[i], pts[i + 1], r.value, r.error});
        total += r.value;
        total_err += r.error;
    }
    auto worse = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    std::make_heap(heap.begin(), heap.end(), worse);

    const int max_panels = 4000;
    while (static_cast<int>(heap.size()) < max_panels) {
        const double tol = std::max(abs_tol, rel_tol * std::abs(total));
        if (total_err <= tol) break;
        std::pop_heap(heap.begin(), heap.end(), worse);
        Panel p = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b) {
            // interval exhausted at machine precision; accept as-is
            heap.push_back({p.a, p.b, p.value, 0.0});
            std::push_heap(heap.begin(), heap.end(), worse);
            total_err -= p.error;
            continue;
        }
        auto r1 = gk15(f, p.a, mid);
        auto r2 = gk15(f, mid, p.b);
        total += r1.value + r2.value - p.value;
        total_err += r1.error + r2.error - p.error;
        heap.push_back({p.a, mid, r1.value, r1.error});
        std::push_heap(heap.begin(), heap.end(), worse);
        heap.push_back({mid, p.b, r2.value, r2.error});
        std::push_heap(heap.begin(), heap.end(), worse);
    }
    return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, double abs_tol) {
    return adaptive(f, a, b, {}, rel_tol, abs_tol);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& knots, double rel_tol,
                 double abs_tol) {
    return adaptive(f, a, b, knots, rel_tol, abs_tol);
}

double integrate_zero_inf(const std::function<double(double)>& f,
                          double power_at_zero, double power_decay,
                          double exp_decay_rate,
                          const std::vector<double>& knots, double rel_tol) {
    const double rate_lo = power_at_zero + 1.0;
    if (rate_lo <= 0.0)
        throw DomainError("integrate_zero_inf: integrand not integrable at 0");
    // After x = e^t the integrand carries a factor e^{(p+1)t} near -inf.
    // Truncate where the exponential factor alone is below 1e-18.
    const double t_lo = -42.0 / rate_lo;
    double t_hi;
    if (exp_decay_rate > 0.0) {
        // e^{-r x}: keep r * x ~ 745 inside; beyond that the factor underflows
        t_hi = std::log(745.0 / exp_decay_rate) + 1.0;
    } else {
        const double rate_hi = power_decay - 1.0;
        if (rate_hi <= 0.0)
            throw DomainError("integrate_zero_inf: integrand not integrable at inf");
        t_hi = 42.0 / rate_hi;
    }
    std::vector<double> tknots;
    tknots.push_back(0.0);
    for (double k : knots)
        if (k > 0.0) tknots.push_back(std::log(k));
    auto g = [&f](double t) {
        const double x = std::exp(t);
        return f(x) * x;
    };
    if (t_hi <= t_lo) t_hi = t_lo + 1.0;
    return adaptive(g, t_lo, t_hi, tknots, rel_tol, 0.0);
}

}  // namespace roughvol
