#ifndef NFSTATS_CLASSNO_HPP
#define NFSTATS_CLASSNO_HPP

#include <cstdint>
#include <vector>

namespace nf {

// h(D): number of primitive reduced positive-definite binary quadratic
// forms of discriminant D < 0 (D = 0 or 1 mod 4).
long class_number(std::int64_t D);

// Batch table of h(D) for all valid D with |D| <= limit, built with a
// single pass over reduced forms (a,b,c), |b| <= a <= c.  A
// per-discriminant loop is quadratically slower over the ranges needed
// by the dimension statistics.
class ClassNumberTable {
  public:
    explicit ClassNumberTable(std::int64_t limit);
    std::int64_t limit() const { return limit_; }
    long h(std::int64_t D) const;  // D < 0, |D| <= limit

  private:
    std::int64_t limit_;
    std::vector<std::uint16_t> counts_;  // indexed by |D|
};

}  // namespace nf

#endif
