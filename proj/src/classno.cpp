#include "nfstats/classno.hpp"

#include <numeric>
#include <stdexcept>

namespace nf {

namespace {

bool valid_disc(std::int64_t D) {
    if (D >= 0) return false;
    std::int64_t r = ((D % 4) + 4) % 4;
    return r == 0 || r == 1;
}

}  // namespace

long class_number(std::int64_t D) {
    if (!valid_disc(D)) throw std::invalid_argument("class_number: D must be negative and 0 or 1 mod 4");
    std::int64_t absD = -D;
    long h = 0;
    for (std::int64_t a = 1; 3 * a * a <= absD; ++a) {
        for (std::int64_t b = (absD & 1) ? 1 : 0; b <= a; b += 2) {
            std::int64_t num = b * b + absD;  // 4ac
            if (num % (4 * a) != 0) continue;
            std::int64_t c = num / (4 * a);
            if (c < a) continue;
            if (std::gcd(std::gcd(a, b), c) != 1) continue;
            // (a,b,c) with 0 <= b <= a <= c; -b gives a distinct reduced
            // form only when 0 < b < a < c.
            h += (b > 0 && b < a && a < c) ? 2 : 1;
        }
    }
    return h;
}

ClassNumberTable::ClassNumberTable(std::int64_t limit) : limit_(limit) {
    if (limit < 3) throw std::invalid_argument("class number table limit too small");
    counts_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t a = 1; 3 * a * a <= limit; ++a) {
        for (std::int64_t b = 0; b <= a; ++b) {
            std::int64_t g = std::gcd(a, b);
            std::int64_t D0 = 4 * a * a - b * b;  // |D| at c = a
            if (D0 > limit) continue;
            std::int64_t step = 4 * a;
            if (g == 1) {
                for (std::int64_t c = a, D = D0; D <= limit; ++c, D += step) {
                    counts_[static_cast<std::size_t>(D)] +=
                        static_cast<std::uint16_t>((b > 0 && b < a && a < c) ? 2 : 1);
                }
            } else {
                for (std::int64_t c = a, D = D0; D <= limit; ++c, D += step) {
                    if (std::gcd(g, c) != 1) continue;
                    counts_[static_cast<std::size_t>(D)] +=
                        static_cast<std::uint16_t>((b > 0 && b < a && a < c) ? 2 : 1);
                }
            }
        }
    }
}

long ClassNumberTable::h(std::int64_t D) const {
    if (!valid_disc(D) || -D > limit_) throw std::invalid_argument("class number table: D out of range");
    return counts_[static_cast<std::size_t>(-D)];
}

}  // namespace nf
