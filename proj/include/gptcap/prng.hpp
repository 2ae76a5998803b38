#ifndef GPTCAP_PRNG_HPP
#define GPTCAP_PRNG_HPP

#include <cstdint>

#include "gptcap/rational.hpp"

namespace gptcap {

// SplitMix64. Standard library distributions are implementation-defined, and
// reports must be byte-reproducible across toolchains, so randomness is drawn
// from this fixed stream only.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Modulo bias is irrelevant at the ranges used here.
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    // Uniform integer in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

  private:
    std::uint64_t state_;
};

// Rational with numerator in [-max_num, max_num] and denominator in [1, max_den].
inline Rational random_small_rational(SplitMix64& rng, long long max_num = 10,
                                      long long max_den = 10) {
    long long num = rng.range(-max_num, max_num);
    long long den = rng.range(1, max_den);
    return ratio(num, den);
}

// Rational in [0, 1] with denominator in [1, max_den].
inline Rational random_unit_rational(SplitMix64& rng, long long max_den = 10) {
    long long den = rng.range(1, max_den);
    long long num = rng.range(0, den);
    return ratio(num, den);
}

} // namespace gptcap

#endif
