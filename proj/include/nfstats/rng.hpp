#ifndef NFSTATS_RNG_HPP
#define NFSTATS_RNG_HPP

#include <cstdint>

namespace nf {

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter), so parallel replicas and reruns agree.
struct CounterRng {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t bits(std::uint64_t counter) const {
        return mix(mix(seed ^ 0x243f6a8885a308d3ull) ^ mix(stream * 0x100000001b3ull + counter));
    }

    // uniform in [0,1)
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }
};

}  // namespace nf

#endif
