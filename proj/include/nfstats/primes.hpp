#ifndef NFSTATS_PRIMES_HPP
#define NFSTATS_PRIMES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace nf {

// Complete, strictly increasing list of primes up to `limit`.
// Immutable after construction; safe to share across threads.
class PrimeTable {
  public:
    explicit PrimeTable(std::int64_t limit);

    std::int64_t limit() const { return limit_; }
    const std::vector<std::int64_t>& primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }

    bool is_prime(std::int64_t n) const;

    // Number of primes p with lo < p < hi (open interval).
    std::size_t count_open(std::int64_t lo, std::int64_t hi) const;

    // Primes in the open interval (lo, hi), ascending.
    std::vector<std::int64_t> range_open(std::int64_t lo, std::int64_t hi) const;

  private:
    std::int64_t limit_;
    std::vector<std::int64_t> primes_;
    std::vector<bool> sieve_;
};

PrimeTable sieve(std::int64_t limit);

// Deterministic Miller-Rabin with the fixed witness set {2,...,41},
// valid for all n < 3.3e24.  Used for discriminant searches.
bool is_prime_u64(std::uint64_t n);
bool is_prime_mpz(const mpz_class& n);

}  // namespace nf

#endif
