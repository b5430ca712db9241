#ifndef NFSTATS_POISSON_HPP
#define NFSTATS_POISSON_HPP

#include <cstdint>

namespace nf {

// Poisson kernels, all computed in log space: lambda = a*p^b spans many
// orders of magnitude in the analyses that use these.

double log_factorial(std::int64_t k);

// log Prob(Pois(lambda) = k), lambda > 0.
double poisson_log_pmf(double lambda, std::int64_t k);

double poisson_pmf(double lambda, std::int64_t k);

// Prob(Pois(lambda) <= x); x < 0 gives 0.
double poisson_cdf(double lambda, std::int64_t x);

// log of the cdf and of the upper tail Prob(Pois >= x), stable far into
// the tails.
double poisson_log_cdf(double lambda, std::int64_t x);
double poisson_log_sf(double lambda, std::int64_t x);  // log Prob(Pois >= x)

// Extremeness probability: F(x) if x <= lambda, else 1 - F(x-1).
double rho(double lambda, std::int64_t x);

// log10 of rho, usable where rho underflows a double.
double log10_rho(double lambda, std::int64_t x);

}  // namespace nf

#endif
