#include <cmath>
#include <complex>
#include <stdexcept>

#include <doctest.h>

#include "ris/codebook.hpp"
#include "ris/pattern.hpp"
#include "ris/wave.hpp"

using namespace ris;

namespace {

const ArrayGeometry kGeom = ArrayGeometry::standard16x10();
const WaveParams kWave = wave_from_frequency(5.8e9);

Codeword zero_codeword(const ArrayGeometry& g) {
    Codeword cw;
    cw.bits.assign(g.size(), 0);
    return cw;
}

}  // namespace

TEST_SUITE_BEGIN("pattern");

TEST_CASE("plane wave illumination has unit magnitudes") {
    const auto illum = plane_wave_illumination(kGeom, kWave, Direction{35.0, 10.0});
    REQUIRE(illum.weights.size() == 160);
    for (const auto& w : illum.weights) CHECK(std::abs(w) == doctest::Approx(1.0));
}

TEST_CASE("feed illumination normalization and errors") {
    const auto illum = feed_illumination(kGeom, kWave, {0.0, 0.0, 1.0}, 12.5);
    double peak = 0.0;
    for (const auto& w : illum.weights) peak = std::max(peak, std::abs(w));
    CHECK(peak == doctest::Approx(1.0));
    CHECK_THROWS_AS(feed_illumination(kGeom, kWave, {0.0, 0.0, 0.0}, 12.5),
                    std::invalid_argument);
    CHECK_THROWS_AS(feed_illumination(kGeom, kWave, {0.1, 0.1, -1.0}, 12.5),
                    std::invalid_argument);
}

TEST_CASE("feed illumination spherical phase golden") {
    // Boresight feed at 5 m: the edge-center element (x = 0.193875 m) lags
    // the center by k0 (r_edge - 5) = 0.45674 rad.
    const auto illum = feed_illumination(kGeom, kWave, {0.0, 0.0, 5.0}, 12.5);
    ArrayGeometry g1 = kGeom;
    // Nearest element to the aperture center (x = +pitch/2, y = +pitch/2).
    const int center = kGeom.flat_index(8, 5);
    const int edge = kGeom.flat_index(15, 5);
    (void)g1;
    const double rel = std::arg(illum.weights[edge] * std::conj(illum.weights[center]));
    const double x_e = kGeom.element_x(15), y_e = kGeom.element_y(5);
    const double x_c = kGeom.element_x(8), y_c = kGeom.element_y(5);
    const double expected =
        -kWave.wavenumber * (std::sqrt(x_e * x_e + y_e * y_e + 25.0) -
                             std::sqrt(x_c * x_c + y_c * y_c + 25.0));
    CHECK(rel == doctest::Approx(expected).epsilon(1e-9));
    // Frozen magnitude of the edge-to-center lag along the x axis.
    const double lag = -kWave.wavenumber *
                       (std::sqrt(0.193875 * 0.193875 + y_e * y_e + 25.0) -
                        std::sqrt(y_e * y_e + 25.0));
    CHECK(lag == doctest::Approx(-0.45674).epsilon(2e-3));
}

TEST_CASE("feed illumination converges to a plane wave at large distance") {
    // Broadside feed far away: all weights share one phase up to a
    // vanishing curvature error, and magnitudes flatten.
    const auto near = feed_illumination(kGeom, kWave, {0.0, 0.0, 2.0}, 12.5);
    const auto far = feed_illumination(kGeom, kWave, {0.0, 0.0, 2000.0}, 12.5);
    double near_err = 0.0, far_err = 0.0;
    for (std::size_t e = 0; e < far.weights.size(); ++e) {
        near_err = std::max(near_err,
                            std::abs(std::arg(near.weights[e] * std::conj(near.weights[0]))));
        far_err = std::max(far_err,
                           std::abs(std::arg(far.weights[e] * std::conj(far.weights[0]))));
    }
    CHECK(far_err < 1e-2);
    CHECK(far_err < near_err / 100.0);
}

TEST_CASE("array factor triangle inequality and coherent bound") {
    const auto illum = feed_illumination(kGeom, kWave, {0.2, -0.1, 1.5}, 12.5);
    double bound = 0.0;
    for (const auto& w : illum.weights) bound += std::abs(w);
    const auto cw = build_codeword(kGeom, kWave, Direction{0, 0}, Direction{25, 0});
    for (double t : {-70.0, -12.5, 0.0, 25.0, 60.0}) {
        const auto af = array_factor(kGeom, kWave, cw, illum, cut_direction(CutPlane::azimuth, t));
        CHECK(std::abs(af) <= bound + 1e-9);
    }
}

TEST_CASE("bit complement leaves |AF| unchanged") {
    const auto illum = plane_wave_illumination(kGeom, kWave, Direction{0, 0});
    auto cw = build_codeword(kGeom, kWave, Direction{0, 0}, Direction{40, 0});
    Codeword flipped = cw;
    for (auto& b : flipped.bits) b = static_cast<std::uint8_t>(1 - b);
    for (double t : {-40.0, -7.0, 3.0, 40.0, 71.0}) {
        const Direction d = cut_direction(CutPlane::azimuth, t);
        CHECK(std::abs(array_factor(kGeom, kWave, flipped, illum, d)) ==
              doctest::Approx(std::abs(array_factor(kGeom, kWave, cw, illum, d))));
    }
}

TEST_CASE("array factor is linear in the illumination") {
    const auto cw = build_codeword(kGeom, kWave, Direction{0, 0}, Direction{30, 0});
    auto illum = plane_wave_illumination(kGeom, kWave, Direction{0, 0});
    const Direction d = cut_direction(CutPlane::azimuth, 17.0);
    const auto base = array_factor(kGeom, kWave, cw, illum, d);
    for (auto& w : illum.weights) w *= 2.0;
    const auto doubled = array_factor(kGeom, kWave, cw, illum, d);
    CHECK(std::abs(doubled) == doctest::Approx(2.0 * std::abs(base)));
}

TEST_CASE("array factor rejects mismatched lengths") {
    const auto cw = build_codeword(kGeom, kWave, Direction{0, 0}, Direction{30, 0});
    Illumination bad;
    bad.weights.assign(10, {1.0, 0.0});
    CHECK_THROWS_AS(array_factor(kGeom, kWave, cw, bad, Direction{0, 0}),
                    std::invalid_argument);
}

TEST_CASE("cut direction mapping") {
    CHECK(cut_direction(CutPlane::azimuth, 30.0).phi_deg == doctest::Approx(0.0));
    CHECK(cut_direction(CutPlane::azimuth, -30.0).phi_deg == doctest::Approx(180.0));
    CHECK(cut_direction(CutPlane::elevation, 30.0).phi_deg == doctest::Approx(90.0));
    CHECK(cut_direction(CutPlane::elevation, -30.0).phi_deg == doctest::Approx(270.0));
    CHECK(cut_direction(CutPlane::azimuth, -30.0).theta_deg == doctest::Approx(30.0));
}

TEST_CASE("pattern cut normalizes the peak to 0 dB") {
    const auto illum = plane_wave_illumination(kGeom, kWave, Direction{0, 0});
    const auto cw = zero_codeword(kGeom);
    const auto cut = pattern_cut(kGeom, kWave, cw, illum, CutPlane::azimuth,
                                 angle_grid(-90.0, 90.0, 0.25));
    double peak = -1e9;
    for (double g : cut.gain_db) peak = std::max(peak, g);
    CHECK(peak == doctest::Approx(0.0));
    CHECK(cut.angles_deg.size() == 721);
    CHECK_THROWS_AS(pattern_cut(kGeom, kWave, cw, illum, CutPlane::azimuth, {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        pattern_cut(kGeom, kWave, cw, illum, CutPlane::azimuth, {10.0, 5.0}),
        std::invalid_argument);
}

TEST_CASE("specular: all-zero codeword under broadside plane wave peaks at 0") {
    const auto illum = plane_wave_illumination(kGeom, kWave, Direction{0, 0});
    const auto cut = pattern_cut(kGeom, kWave, zero_codeword(kGeom), illum,
                                 CutPlane::azimuth, angle_grid(-90.0, 90.0, 0.25));
    const auto metrics = analyze_pattern(cut);
    CHECK(metrics.main_lobe_deg == doctest::Approx(0.0));
}

TEST_CASE("analyze_pattern HPBW matches the two-element closed form") {
    // Two lambda/2-spaced elements: AF = 2 cos(pi sin(t)/2); -3 dB at
    // sin(t) = 1/2, so HPBW = 60 degrees.
    ArrayGeometry g2;
    g2.num_x = 2;
    g2.num_y = 1;
    const WaveParams w = wave_from_frequency(5.8e9);
    g2.spacing_x_m = w.wavelength_m / 2.0;
    g2.spacing_y_m = g2.spacing_x_m;
    const auto illum = plane_wave_illumination(g2, w, Direction{0, 0});
    const auto cut = pattern_cut(g2, w, zero_codeword(g2), illum, CutPlane::azimuth,
                                 angle_grid(-90.0, 90.0, 0.25));
    const auto metrics = analyze_pattern(cut);
    CHECK(metrics.hpbw_deg == doctest::Approx(60.0).epsilon(0.01));
    CHECK_FALSE(metrics.hpbw_is_lower_bound);
}

TEST_CASE("analyze_pattern SLL of the uniform 16-element array") {
    ArrayGeometry g;
    g.num_x = 16;
    g.num_y = 1;
    g.spacing_x_m = g.spacing_y_m = 0.02585;
    const auto illum = plane_wave_illumination(g, kWave, Direction{0, 0});
    const auto cut = pattern_cut(g, kWave, zero_codeword(g), illum, CutPlane::azimuth,
                                 angle_grid(-90.0, 90.0, 0.25));
    const auto metrics = analyze_pattern(cut);
    // Classic uniform-array first sidelobe, brute-force frozen at -13.15 dB.
    CHECK(metrics.sll_db == doctest::Approx(-13.2).epsilon(0.03));
    CHECK(metrics.sll_db == doctest::Approx(-13.15).epsilon(0.01));
}

TEST_CASE("analyze_pattern input validation") {
    PatternCut tiny;
    tiny.angles_deg = {0.0};
    tiny.af = {{1.0, 0.0}};
    tiny.gain_db = {0.0};
    CHECK_THROWS_AS(analyze_pattern(tiny), std::invalid_argument);
}

TEST_CASE("peak on the grid boundary flags the HPBW as a lower bound") {
    const auto illum = plane_wave_illumination(kGeom, kWave, Direction{0, 0});
    const auto cw = build_codeword(kGeom, kWave, Direction{0, 0}, Direction{45, 0});
    // Scan only up to the design angle: the peak cannot be bracketed.
    const auto cut = pattern_cut(kGeom, kWave, cw, illum, CutPlane::azimuth,
                                 angle_grid(0.0, 45.0, 0.25));
    const auto metrics = analyze_pattern(cut);
    CHECK(metrics.main_lobe_deg == doctest::Approx(45.0).epsilon(0.1));
    CHECK(metrics.hpbw_is_lower_bound);
}

TEST_CASE("rcs pattern: quantization mirror lobe and dither") {
    const Direction incident{0.0, 0.0};
    const auto grid = angle_grid(-90.0, 90.0, 0.25);
    const auto cw = build_codeword(kGeom, kWave, incident, Direction{22.5, 0});
    const auto cut = rcs_pattern(kGeom, kWave, cw, incident, grid);

    const auto level_near = [&](const PatternCut& c, double angle) {
        double best = -1e9;
        for (std::size_t i = 0; i < c.angles_deg.size(); ++i) {
            if (std::abs(c.angles_deg[i] - angle) <= 2.0) best = std::max(best, c.gain_db[i]);
        }
        return best;
    };
    // Mirror lobe at -22.5 within 3 dB of the peak.
    CHECK(level_near(cut, -22.5) >= -3.0);

    const auto dithered = build_codeword(kGeom, kWave, incident, Direction{22.5, 0}, 11);
    const auto dcut = rcs_pattern(kGeom, kWave, dithered, incident, grid);
    // Dither preserves the main lobe and suppresses the mirror.
    CHECK(level_near(dcut, 22.5) >= -1.0);
    CHECK(level_near(dcut, -22.5) <= level_near(cut, -22.5) - 3.0);
}

TEST_CASE("rcs pattern: broadside design gives a single specular peak") {
    const Direction incident{0.0, 0.0};
    const auto cw = build_codeword(kGeom, kWave, incident, Direction{0, 0});
    const auto cut = rcs_pattern(kGeom, kWave, cw, incident, angle_grid(-90, 90, 0.25));
    const auto metrics = analyze_pattern(cut);
    CHECK(metrics.main_lobe_deg == doctest::Approx(0.0));
    CHECK(metrics.grating_lobes.empty());
}

TEST_CASE("angle grid is inclusive") {
    const auto g = angle_grid(-1.0, 1.0, 0.5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == doctest::Approx(-1.0));
    CHECK(g.back() == doctest::Approx(1.0));
}

TEST_SUITE_END();
