#include "nfstats/li.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace nf {

namespace {

// 40-point Gauss-Legendre rule on [-1,1], nodes by Newton on P_40.
struct GaussRule {
    std::array<double, 40> x{}, w{};
    GaussRule() {
        const int n = 40;
        for (int i = 0; i < n; ++i) {
            double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = t;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = p1 / dp;
                t -= dt;
                if (std::fabs(dt) < 1e-16) break;
            }
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = n * (t * p1 - p0) / (t * t - 1.0);
            x[static_cast<std::size_t>(i)] = t;
            w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GaussRule& rule() {
    static const GaussRule r;
    return r;
}

template <class F>
double gauss_panel(F f, double a, double b) {
    const auto& r = rule();
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 40; ++i) s += r.w[static_cast<std::size_t>(i)] * f(mid + half * r.x[static_cast<std::size_t>(i)]);
    return s * half;
}

template <class F>
double gauss_composite(F f, double a, double b, double panel_width) {
    if (b <= a) return 0.0;
    int panels = static_cast<int>(std::ceil((b - a) / panel_width));
    double s = 0.0, h = (b - a) / panels;
    for (int i = 0; i < panels; ++i) s += gauss_panel(f, a + i * h, a + (i + 1) * h);
    return s;
}

// 1/(e^w - 1) - e^{-w}/w, the paired principal-value integrand after
// the substitution u = 1 - e^{-w}; analytic at w = 0.
double pv_kernel(double w) {
    if (w < 1e-4) return 0.5 - 5.0 * w / 12.0 + w * w / 6.0;
    return 1.0 / std::expm1(w) - std::exp(-w) / w;
}

// 1/log(1+u) - 1/u, analytic at u = 0.
double log1p_kernel(double u) {
    if (u < 1e-4) {
        double u2 = u * u;
        return 0.5 - u / 12.0 + u2 / 24.0 - 19.0 * u2 * u / 720.0;
    }
    return 1.0 / std::log1p(u) - 1.0 / u;
}

// int_y^inf e^{-w}/w dw, y > 0.  Geometric panels: the integrand varies
// on the scale of w itself near small y.
double exp_tail(double y) {
    auto f = [](double w) { return std::exp(-w) / w; };
    double s = 0.0, a = y;
    while (a < y + 60.0) {
        double b = std::min(std::max(2.0 * a, a + 2.0), y + 60.0);
        s += gauss_composite(f, a, b, (b - a) / 2.0);
        a = b;
    }
    return s;
}

double li2_constant() {
    static const double v = gauss_composite(pv_kernel, 0.0, 60.0, 2.0) +
                            gauss_composite(log1p_kernel, 0.0, 1.0, 0.5);
    return v;
}

}  // namespace

double log_integral(double x) {
    if (!(x > 1.0)) throw std::domain_error("log_integral: x must exceed 1");
    if (x >= 2.0) {
        double t = gauss_composite([](double v) { return std::exp(v) / v; }, std::log(2.0), std::log(x), 0.5);
        return li2_constant() + t;
    }
    double W = -std::log(2.0 - x);
    double a = gauss_composite(pv_kernel, 0.0, std::max(W, 0.0), 2.0);
    double b = gauss_composite(log1p_kernel, 0.0, x - 1.0, 0.5);
    return a + b - exp_tail(W);
}

}  // namespace nf
