#ifndef ISOELL_RNG_HPP
#define ISOELL_RNG_HPP

#include <cstdint>

namespace isoell {

/// Deterministic splitmix64 stream. Standard-library distributions are
/// implementation-defined, and suite output must be byte-identical across
/// platforms for a given seed.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

    std::uint64_t in(std::uint64_t lo, std::uint64_t hi) {  // inclusive range
        return lo + below(hi - lo + 1);
    }

    bool flip() { return (next() & 1) != 0; }
};

}  // namespace isoell

#endif
