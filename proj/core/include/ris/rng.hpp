#pragma once

#include <complex>
#include <cstdint>

namespace ris {

/// Counter-based random numbers: every draw is a pure function of a seed
/// and up to three stream identifiers, so parallel and serial evaluation
/// orders produce identical results.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ a);
    s = splitmix64(s ^ b);
    s = splitmix64(s ^ c);
    return s;
}

/// Uniform in [0, 1).
inline double uniform(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                      std::uint64_t c = 0) {
    return static_cast<double>(hash(seed, a, b, c) >> 11) * 0x1.0p-53;
}

/// Circular complex Gaussian with total variance `variance`
/// (variance/2 per real component), via Box-Muller.
std::complex<double> complex_gaussian(double variance, std::uint64_t seed,
                                      std::uint64_t a, std::uint64_t b = 0,
                                      std::uint64_t c = 0);

}  // namespace rng
}  // namespace ris
