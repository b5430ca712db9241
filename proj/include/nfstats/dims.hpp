#ifndef NFSTATS_DIMS_HPP
#define NFSTATS_DIMS_HPP

#include <cstdint>
#include <memory>

#include "nfstats/classno.hpp"

namespace nf {

enum class DimMode { exact, approximate };

struct DimSplit {
    std::int64_t p = 0;
    double dim_plus = 0;   // dim of the +1 Atkin-Lehner eigenspace
    double dim_minus = 0;  // dim of the -1 eigenspace
    DimMode mode = DimMode::exact;
};

// Genus of X0(p), p prime.
long genus_x0(std::int64_t p);

// Exact split of dim S2(p) into Atkin-Lehner eigenspaces.  The
// difference dim^- - dim^+ equals (F - 2)/2 where F is the number of
// fixed points of the level-p involution on X0(p), expressed through
// class numbers: F = h(-4p) for p = 1 mod 4 and h(-4p) + h(-p) for
// p = 3 mod 4.  Requires a class-number table covering 4p.
DimSplit dim_split_exact(std::int64_t p, const ClassNumberTable& tab);

// p/24 -+ sqrt(p)/2, as reals.
DimSplit dim_split_approx(std::int64_t p);

// Convenience caching front-end; owns its class number table.
class DimTable {
  public:
    explicit DimTable(std::int64_t max_level);
    DimSplit split(std::int64_t p, DimMode mode) const;
    std::int64_t max_level() const { return max_level_; }

  private:
    std::int64_t max_level_;
    std::unique_ptr<ClassNumberTable> tab_;
};

}  // namespace nf

#endif
