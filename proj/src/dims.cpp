#include "nfstats/dims.hpp"

#include <cmath>
#include <stdexcept>

#include "nfstats/primes.hpp"

namespace nf {

long genus_x0(std::int64_t p) {
    if (!is_prime_u64(static_cast<std::uint64_t>(p))) throw std::invalid_argument("genus_x0: p must be prime");
    if (p == 2 || p == 3) return 0;
    // nu2 = 1 + (-1|p), nu3 = 1 + (-3|p), two cusps.
    long nu2 = (p % 4 == 1) ? 2 : 0;
    long nu3 = (p % 3 == 1) ? 2 : 0;
    // 12g = 12 + (p+1) - 3*nu2 - 4*nu3 - 12
    long g12 = static_cast<long>(p + 1) - 3 * nu2 - 4 * nu3;
    return g12 / 12;
}

DimSplit dim_split_exact(std::int64_t p, const ClassNumberTable& tab) {
    if (!is_prime_u64(static_cast<std::uint64_t>(p))) throw std::invalid_argument("dim_split: p must be prime");
    if (p <= 3) throw std::invalid_argument("dim_split exact mode needs p > 3");
    long g = genus_x0(p);
    long fixed = tab.h(-4 * p);
    if (p % 4 == 3) fixed += tab.h(-p);
    long delta = (fixed - 2) / 2;  // dim^- - dim^+
    DimSplit s;
    s.p = p;
    s.dim_plus = static_cast<double>((g - delta) / 2);
    s.dim_minus = static_cast<double>((g + delta) / 2);
    s.mode = DimMode::exact;
    return s;
}

DimSplit dim_split_approx(std::int64_t p) {
    DimSplit s;
    s.p = p;
    double sq = std::sqrt(static_cast<double>(p));
    s.dim_plus = static_cast<double>(p) / 24.0 - sq / 2.0;
    s.dim_minus = static_cast<double>(p) / 24.0 + sq / 2.0;
    s.mode = DimMode::approximate;
    return s;
}

DimTable::DimTable(std::int64_t max_level) : max_level_(max_level) {
    tab_ = std::make_unique<ClassNumberTable>(4 * max_level);
}

DimSplit DimTable::split(std::int64_t p, DimMode mode) const {
    if (mode == DimMode::approximate) return dim_split_approx(p);
    if (p > max_level_) throw std::invalid_argument("dim table: level beyond precomputed range");
    return dim_split_exact(p, *tab_);
}

}  // namespace nf
