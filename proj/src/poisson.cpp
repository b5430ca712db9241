#include "nfstats/poisson.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace nf {

namespace {

constexpr std::int64_t kTableMax = 1 << 20;
std::vector<double> g_logfact;
std::once_flag g_logfact_once;

void build_table() {
    g_logfact.resize(kTableMax + 1);
    long double acc = 0.0L;
    g_logfact[0] = 0.0;
    for (std::int64_t k = 1; k <= kTableMax; ++k) {
        acc += std::log(static_cast<long double>(k));
        g_logfact[static_cast<std::size_t>(k)] = static_cast<double>(acc);
    }
}

}  // namespace

double log_factorial(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("log_factorial: negative k");
    std::call_once(g_logfact_once, build_table);
    if (k <= kTableMax) return g_logfact[static_cast<std::size_t>(k)];
    return static_cast<double>(std::lgammal(static_cast<long double>(k) + 1.0L));
}

double poisson_log_pmf(double lambda, std::int64_t k) {
    if (!(lambda > 0)) throw std::invalid_argument("poisson: lambda must be positive");
    if (k < 0) throw std::invalid_argument("poisson: negative k");
    return static_cast<double>(k) * std::log(lambda) - lambda - log_factorial(k);
}

double poisson_pmf(double lambda, std::int64_t k) { return std::exp(poisson_log_pmf(lambda, k)); }

double poisson_log_cdf(double lambda, std::int64_t x) {
    if (!(lambda > 0)) throw std::invalid_argument("poisson: lambda must be positive");
    if (x < 0) return -HUGE_VAL;
    if (static_cast<double>(x) <= lambda) {
        // Sum downward from j = x; term ratios j/lambda stay below 1.
        double acc = 1.0, prod = 1.0;
        for (std::int64_t j = x; j >= 1; --j) {
            prod *= static_cast<double>(j) / lambda;
            acc += prod;
            if (prod < 1e-22 * acc) break;
        }
        return poisson_log_pmf(lambda, x) + std::log(acc);
    }
    double ls = poisson_log_sf(lambda, x + 1);
    if (ls >= 0.0) return -HUGE_VAL;
    return std::log1p(-std::exp(ls));
}

double poisson_log_sf(double lambda, std::int64_t x) {
    if (!(lambda > 0)) throw std::invalid_argument("poisson: lambda must be positive");
    if (x <= 0) return 0.0;
    if (static_cast<double>(x) > lambda) {
        // Sum upward from j = x; term ratios lambda/(j+1) stay below 1.
        double acc = 1.0, prod = 1.0;
        for (std::int64_t j = x;; ++j) {
            prod *= lambda / static_cast<double>(j + 1);
            acc += prod;
            if (prod < 1e-22 * acc) break;
        }
        return poisson_log_pmf(lambda, x) + std::log(acc);
    }
    double lc = poisson_log_cdf(lambda, x - 1);
    if (lc >= 0.0) return -HUGE_VAL;
    return std::log1p(-std::exp(lc));
}

double poisson_cdf(double lambda, std::int64_t x) { return std::exp(poisson_log_cdf(lambda, x)); }

double rho(double lambda, std::int64_t x) {
    if (x < 0) throw std::invalid_argument("rho: x must be nonnegative");
    if (static_cast<double>(x) <= lambda) return poisson_cdf(lambda, x);
    return std::exp(poisson_log_sf(lambda, x));
}

double log10_rho(double lambda, std::int64_t x) {
    if (x < 0) throw std::invalid_argument("rho: x must be nonnegative");
    double l = (static_cast<double>(x) <= lambda) ? poisson_log_cdf(lambda, x) : poisson_log_sf(lambda, x);
    return l / std::log(10.0);
}

}  // namespace nf
