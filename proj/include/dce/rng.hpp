#ifndef DCE_RNG_HPP
#define DCE_RNG_HPP

/// @file rng.hpp
/// Counter-based random numbers for the Monte Carlo driver. Each variate is a
/// pure function of (seed, stream, trial), so results are bit-identical no
/// matter how trials are ordered or distributed across workers.

#include <cmath>
#include <cstdint>

namespace dce::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// SplitMix64 finalizer: bijective avalanche mix of a 64-bit word.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// The random word assigned to one trial of one stream.
constexpr std::uint64_t trial_word(std::uint64_t seed, std::uint64_t stream,
                                   std::uint64_t trial) {
    return mix64(mix64(seed + kGolden * (stream + 1)) + kGolden * (trial + 1));
}

/// Maps a word to the open interval (0, 1); both endpoints are unreachable,
/// so a logarithm of the result is always finite.
constexpr double uniform01(std::uint64_t word) {
    return (static_cast<double>(word >> 11) + 0.5) * 0x1.0p-53;
}

/// Unit-mean exponential variate.
inline double exponential(std::uint64_t word) { return -std::log(uniform01(word)); }

}  // namespace dce::rng

#endif  // DCE_RNG_HPP
