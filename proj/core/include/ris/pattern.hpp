#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "ris/codebook.hpp"
#include "ris/geometry.hpp"
#include "ris/vec3.hpp"
#include "ris/wave.hpp"

namespace ris {

/// Per-element complex aperture weights (the incident field sampled at the
/// elements). Plane-wave illumination has unit magnitudes.
struct Illumination {
    std::vector<std::complex<double>> weights;
};

/// Unit-magnitude weights with incident-wave phases exp(+j k0 (x u + y v)).
Illumination plane_wave_illumination(const ArrayGeometry& geometry,
                                     const WaveParams& wave,
                                     const Direction& incident);

/// Spherical-wavefront feed model: per-element magnitude
/// cos^q(angle off feed boresight) / r, normalized to peak 1, with phase
/// -k0 r for the exact element-feed distance. The feed boresight points at
/// the aperture center. When `taper_q` is not given, q is solved from the
/// feed gain via G = 2(2q + 1). feed_position is in the RIS local frame
/// (z along broadside); it must be in front of the surface.
Illumination feed_illumination(const ArrayGeometry& geometry, const WaveParams& wave,
                               const Vec3& feed_position, double feed_gain_dbi,
                               std::optional<double> taper_q = std::nullopt);

/// Array factor: sum over elements of the propagation phasor times
/// illumination times the element reflection state (bit plus dither).
/// Throws on illumination length mismatch.
std::complex<double> array_factor(const ArrayGeometry& geometry, const WaveParams& wave,
                                  const Codeword& codeword, const Illumination& illumination,
                                  const Direction& dir,
                                  const ElementStateModel& states = {});

enum class CutPlane { azimuth, elevation };

/// Maps a signed 1-D cut angle to a Direction in the given plane.
Direction cut_direction(CutPlane plane, double angle_deg);

/// Sampled 1-D pattern cut: complex AF per grid angle plus gain normalized
/// to the cut peak (0 dB).
struct PatternCut {
    CutPlane plane = CutPlane::azimuth;
    std::vector<double> angles_deg;
    std::vector<std::complex<double>> af;
    std::vector<double> gain_db;  // normalized, peak = 0 dB
};

PatternCut pattern_cut(const ArrayGeometry& geometry, const WaveParams& wave,
                       const Codeword& codeword, const Illumination& illumination,
                       CutPlane plane, const std::vector<double>& angle_grid,
                       const ElementStateModel& states = {});

/// Inclusive angle grid [lo, hi] at the given step.
std::vector<double> angle_grid(double lo_deg, double hi_deg, double step_deg = 0.25);

struct GratingLobe {
    double angle_deg = 0.0;
    double level_db = 0.0;  // relative to peak
};

struct PatternMetrics {
    double main_lobe_deg = 0.0;
    double peak_gain_db = 0.0;  // dB relative to a single element
    double hpbw_deg = 0.0;
    bool hpbw_is_lower_bound = false;
    double sll_db = 0.0;
    std::vector<GratingLobe> grating_lobes;  // sidelobes within 3 dB of peak
};

/// Peak, half-power beamwidth (-3 dB crossings, linearly interpolated),
/// side-lobe level outside the main-lobe null-to-null region, and grating
/// lobes. Requires >= 3 samples and a unique global peak.
PatternMetrics analyze_pattern(const PatternCut& cut);

/// Normalized RCS pattern: the cut under plane-wave illumination from
/// `incident`.
PatternCut rcs_pattern(const ArrayGeometry& geometry, const WaveParams& wave,
                       const Codeword& codeword, const Direction& incident,
                       const std::vector<double>& angle_grid,
                       const ElementStateModel& states = {});

}  // namespace ris
