#include "nfstats/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace nf {

PrimeTable::PrimeTable(std::int64_t limit) : limit_(limit) {
    if (limit < 2) throw std::invalid_argument("sieve limit must be at least 2");
    sieve_.assign(static_cast<std::size_t>(limit) + 1, true);
    sieve_[0] = sieve_[1] = false;
    for (std::int64_t p = 2; p * p <= limit; ++p) {
        if (!sieve_[static_cast<std::size_t>(p)]) continue;
        for (std::int64_t q = p * p; q <= limit; q += p) sieve_[static_cast<std::size_t>(q)] = false;
    }
    for (std::int64_t n = 2; n <= limit; ++n)
        if (sieve_[static_cast<std::size_t>(n)]) primes_.push_back(n);
}

bool PrimeTable::is_prime(std::int64_t n) const {
    if (n < 0 || n > limit_) throw std::invalid_argument("is_prime: value beyond table limit");
    return sieve_[static_cast<std::size_t>(n)];
}

std::size_t PrimeTable::count_open(std::int64_t lo, std::int64_t hi) const {
    auto a = std::upper_bound(primes_.begin(), primes_.end(), lo);
    auto b = std::lower_bound(primes_.begin(), primes_.end(), hi);
    return a < b ? static_cast<std::size_t>(b - a) : 0;
}

std::vector<std::int64_t> PrimeTable::range_open(std::int64_t lo, std::int64_t hi) const {
    auto a = std::upper_bound(primes_.begin(), primes_.end(), lo);
    auto b = std::lower_bound(primes_.begin(), primes_.end(), hi);
    return std::vector<std::int64_t>(a, b);
}

PrimeTable sieve(std::int64_t limit) { return PrimeTable(limit); }

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull, 41ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull, 41ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime_mpz(const mpz_class& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) return is_prime_u64(n.get_ui());
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return n == p;
    }
    mpz_class d = n - 1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    mpz_class nm1 = n - 1, x, base;
    for (unsigned long a : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul}) {
        base = a;
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == nm1) continue;
        bool composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == nm1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace nf
