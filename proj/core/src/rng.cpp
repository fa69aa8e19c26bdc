#include "ris/rng.hpp"

#include <cmath>
#include <numbers>

namespace ris::rng {

std::complex<double> complex_gaussian(double variance, std::uint64_t seed,
                                      std::uint64_t a, std::uint64_t b,
                                      std::uint64_t c) {
    if (variance <= 0.0) return {0.0, 0.0};
    const double u1 = 1.0 - uniform(seed, a, b, c);  // (0, 1]
    const double u2 = uniform(seed ^ 0x5bf0a8b145fe89abULL, a, b, c);
    const double mag = std::sqrt(-variance * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    return std::polar(mag, ang);
}

}  // namespace ris::rng
