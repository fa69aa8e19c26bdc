#include "ris/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ris {

Illumination plane_wave_illumination(const ArrayGeometry& geometry,
                                     const WaveParams& wave,
                                     const Direction& incident) {
    return Illumination{incident_response(geometry, wave, incident)};
}

Illumination feed_illumination(const ArrayGeometry& geometry, const WaveParams& wave,
                               const Vec3& feed_position, double feed_gain_dbi,
                               std::optional<double> taper_q) {
    geometry.validate();
    if (feed_position.z <= 0.0) {
        throw std::invalid_argument("feed_illumination: feed must be in front of the surface");
    }
    double q = taper_q.value_or((db_to_linear(feed_gain_dbi) / 2.0 - 1.0) / 2.0);
    q = std::max(q, 0.0);
    const Vec3 boresight = (Vec3{} - feed_position).normalized();
    Illumination illum;
    illum.weights.resize(geometry.size());
    double peak = 0.0;
    for (int n = 0; n < geometry.num_y; ++n) {
        for (int m = 0; m < geometry.num_x; ++m) {
            const Vec3 d = Vec3{geometry.element_x(m), geometry.element_y(n), 0.0} -
                           feed_position;
            const double r = d.norm();
            const double cosang = std::clamp(d.dot(boresight) / r, -1.0, 1.0);
            const double mag = (cosang > 0.0 ? std::pow(cosang, q) : 0.0) / r;
            peak = std::max(peak, mag);
            illum.weights[geometry.flat_index(m, n)] =
                std::polar(mag, -wave.wavenumber * r);
        }
    }
    for (auto& w : illum.weights) w /= peak;
    return illum;
}

std::complex<double> array_factor(const ArrayGeometry& geometry, const WaveParams& wave,
                                  const Codeword& codeword, const Illumination& illumination,
                                  const Direction& dir, const ElementStateModel& states) {
    const auto count = static_cast<std::size_t>(geometry.size());
    if (illumination.weights.size() != count || codeword.bits.size() != count) {
        throw std::invalid_argument("array_factor: illumination/codeword length mismatch");
    }
    const double u = dir_u(dir);
    const double v = dir_v(dir);
    std::complex<double> sum{0.0, 0.0};
    for (int n = 0; n < geometry.num_y; ++n) {
        const double yv = geometry.element_y(n) * v;
        for (int m = 0; m < geometry.num_x; ++m) {
            const int e = geometry.flat_index(m, n);
            const double green = -wave.wavenumber * (geometry.element_x(m) * u + yv);
            std::complex<double> term =
                std::polar(1.0, green) * illumination.weights[e] *
                states.reflection(codeword.bits[e]);
            if (codeword.has_dither()) {
                term *= std::polar(1.0, deg2rad(codeword.dither_deg[e]));
            }
            sum += term;
        }
    }
    return sum;
}

Direction cut_direction(CutPlane plane, double angle_deg) {
    const double t = std::abs(angle_deg);
    if (plane == CutPlane::azimuth) {
        return {t, angle_deg >= 0.0 ? 0.0 : 180.0};
    }
    return {t, angle_deg >= 0.0 ? 90.0 : 270.0};
}

PatternCut pattern_cut(const ArrayGeometry& geometry, const WaveParams& wave,
                       const Codeword& codeword, const Illumination& illumination,
                       CutPlane plane, const std::vector<double>& angle_grid,
                       const ElementStateModel& states) {
    if (angle_grid.empty()) {
        throw std::invalid_argument("pattern_cut: empty angle grid");
    }
    for (std::size_t i = 0; i + 1 < angle_grid.size(); ++i) {
        if (angle_grid[i + 1] <= angle_grid[i]) {
            throw std::invalid_argument("pattern_cut: angle grid must be strictly increasing");
        }
    }
    PatternCut cut;
    cut.plane = plane;
    cut.angles_deg = angle_grid;
    cut.af.reserve(angle_grid.size());
    double peak = 0.0;
    for (double a : angle_grid) {
        const auto af = array_factor(geometry, wave, codeword, illumination,
                                     cut_direction(plane, a), states);
        peak = std::max(peak, std::abs(af));
        cut.af.push_back(af);
    }
    cut.gain_db.reserve(cut.af.size());
    for (const auto& af : cut.af) {
        const double mag = std::abs(af);
        cut.gain_db.push_back(mag > 0.0 && peak > 0.0
                                  ? 20.0 * std::log10(mag / peak)
                                  : -std::numeric_limits<double>::infinity());
    }
    return cut;
}

std::vector<double> angle_grid(double lo_deg, double hi_deg, double step_deg) {
    if (step_deg <= 0.0 || hi_deg < lo_deg) {
        throw std::invalid_argument("angle_grid: bad bounds or step");
    }
    std::vector<double> grid;
    const int count = static_cast<int>(std::round((hi_deg - lo_deg) / step_deg)) + 1;
    grid.reserve(count);
    for (int i = 0; i < count; ++i) grid.push_back(lo_deg + i * step_deg);
    return grid;
}

namespace {

// Linear interpolation of the -3 dB crossing between adjacent samples.
double interp_crossing(double a0, double a1, double g0, double g1, double level) {
    if (g1 == g0) return a1;
    return a0 + (a1 - a0) * (level - g0) / (g1 - g0);
}

}  // namespace

PatternMetrics analyze_pattern(const PatternCut& cut) {
    const auto n = cut.angles_deg.size();
    if (n < 3) {
        throw std::invalid_argument("analyze_pattern: need at least 3 samples");
    }
    const auto& g = cut.gain_db;
    std::size_t ipk = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (g[i] > g[ipk]) ipk = i;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i != ipk && g[i] == g[ipk]) {
            throw std::invalid_argument("analyze_pattern: global peak is not unique");
        }
    }

    PatternMetrics m;
    m.main_lobe_deg = cut.angles_deg[ipk];
    m.peak_gain_db = 20.0 * std::log10(std::abs(cut.af[ipk]));

    // -3 dB crossings around the peak (gain is normalized so peak = 0 dB
    // only when the peak is the cut maximum; use peak-relative level).
    const double level = g[ipk] - 3.0;
    double left = cut.angles_deg.front();
    bool left_found = false;
    for (std::size_t i = ipk; i > 0; --i) {
        if (g[i - 1] < level) {
            left = interp_crossing(cut.angles_deg[i], cut.angles_deg[i - 1], g[i], g[i - 1],
                                   level);
            left_found = true;
            break;
        }
    }
    double right = cut.angles_deg.back();
    bool right_found = false;
    for (std::size_t i = ipk; i + 1 < n; ++i) {
        if (g[i + 1] < level) {
            right = interp_crossing(cut.angles_deg[i], cut.angles_deg[i + 1], g[i], g[i + 1],
                                    level);
            right_found = true;
            break;
        }
    }
    m.hpbw_deg = right - left;
    m.hpbw_is_lower_bound = !(left_found && right_found);
    if (m.hpbw_deg <= 0.0) {
        throw std::invalid_argument("analyze_pattern: degenerate main lobe");
    }

    // Main-lobe region: first local minima on either side of the peak.
    std::size_t lo = ipk;
    while (lo > 0 && g[lo - 1] < g[lo]) --lo;
    std::size_t hi = ipk;
    while (hi + 1 < n && g[hi + 1] < g[hi]) ++hi;

    m.sll_db = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (i >= lo && i <= hi) continue;
        if (g[i] >= g[i - 1] && g[i] >= g[i + 1]) {
            const double rel = g[i] - g[ipk];
            m.sll_db = std::max(m.sll_db, rel);
            if (rel >= -3.0) {
                m.grating_lobes.push_back({cut.angles_deg[i], rel});
            }
        }
    }
    return m;
}

PatternCut rcs_pattern(const ArrayGeometry& geometry, const WaveParams& wave,
                       const Codeword& codeword, const Direction& incident,
                       const std::vector<double>& angle_grid,
                       const ElementStateModel& states) {
    const auto illum = plane_wave_illumination(geometry, wave, incident);
    return pattern_cut(geometry, wave, codeword, illum, CutPlane::azimuth, angle_grid,
                       states);
}

}  // namespace ris
