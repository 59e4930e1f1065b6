#ifndef TDEG_RNG_HPP
#define TDEG_RNG_HPP

#include <cstdint>

namespace tdeg {

// splitmix64: tiny, seed-deterministic and platform independent, which is all
// the randomized search schedules need.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [0, n); fine for search schedules.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    long int_in(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
    std::uint64_t state_;
};

} // namespace tdeg

#endif // TDEG_RNG_HPP
