#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ris/geometry.hpp"
#include "ris/wave.hpp"

namespace ris {

/// Complex reflection coefficients of the two diode states. The default is
/// the ideal pair 1∠0° / 1∠180°; non-unity magnitudes model the measured
/// sub-dB ripple between states.
struct ElementStateModel {
    std::complex<double> state0{1.0, 0.0};
    std::complex<double> state1{-1.0, 0.0};

    std::complex<double> reflection(int bit) const { return bit ? state1 : state0; }

    static ElementStateModel from_phases_deg(double mag0, double phase0_deg,
                                             double mag1, double phase1_deg);
};

/// One 1-bit RIS configuration: per-element bits in geometry order
/// (x index fast), the design direction pair, and optional static dither
/// offsets reproducible from their seed.
struct Codeword {
    std::vector<std::uint8_t> bits;
    Direction design_incident;
    Direction design_reflect;
    std::vector<double> dither_deg;  // empty when dithering is off
    std::optional<std::uint64_t> dither_seed;

    bool has_dither() const { return !dither_deg.empty(); }
};

struct Codebook {
    std::vector<Direction> incident_set;
    std::vector<Direction> reflect_set;
    std::vector<Codeword> codewords;  // ordered reflect-major within incident
    std::optional<std::uint64_t> dither_seed;

    int index(int i, int d) const {
        return i * static_cast<int>(reflect_set.size()) + d;
    }
};

/// Continuous per-element phase (degrees, wrapped to (-180, 180]) that
/// reflects a plane wave from `incident` toward `reflect`.
std::vector<double> ideal_phase(const ArrayGeometry& geometry, const WaveParams& wave,
                                const Direction& incident, const Direction& reflect);

/// 1-bit quantization: 0 when the wrapped phase lies in [-90, +90], else 1.
int quantize_phase(double phi_deg);

/// Per-element dither offsets, uniform in [0, 360), reproducible from the seed.
std::vector<double> dither_offsets(const ArrayGeometry& geometry, std::uint64_t seed);

Codeword build_codeword(const ArrayGeometry& geometry, const WaveParams& wave,
                        const Direction& incident, const Direction& reflect,
                        std::optional<std::uint64_t> dither_seed = std::nullopt);

/// One codeword per (incident, reflect) pair. When a dither seed is given,
/// each codeword gets an independent offset stream derived from it.
Codebook build_codebook(const ArrayGeometry& geometry, const WaveParams& wave,
                        const std::vector<Direction>& incident_set,
                        const std::vector<Direction>& reflect_set,
                        std::optional<std::uint64_t> dither_seed = std::nullopt);

/// Signed 1-D azimuth sweep [start, stop] inclusive; signed angles map to
/// phi = 0 / 180.
std::vector<Direction> azimuth_sweep(double start_deg, double stop_deg, double step_deg);

/// Codebook file: header (frequency, geometry, direction sets, dither seed)
/// plus one bit-string record per codeword. Round-trips bit-exact.
struct CodebookFile {
    WaveParams wave;
    ArrayGeometry geometry;
    Codebook codebook;
};

void save_codebook(const std::string& path, const CodebookFile& file);
CodebookFile load_codebook(const std::string& path);

}  // namespace ris
