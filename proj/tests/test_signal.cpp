#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "ris/codebook.hpp"
#include "ris/geometry.hpp"
#include "ris/link.hpp"
#include "ris/pattern.hpp"
#include "ris/rng.hpp"
#include "ris/signal.hpp"

using namespace ris;

namespace {

const ArrayGeometry kGeom = ArrayGeometry::standard16x10();

// Broadside RIS at the origin with the BS 5 m in front and the UE on a
// 10 m arc, both at matched heights.
struct Fixture {
    Pose3D ris = Pose3D::make({0, 0, 0}, {0, 0, 1}, {1, 0, 0});
    LinkEnds ends;
    OfdmConfig ofdm;

    explicit Fixture(double ue_theta_deg = 40.0) {
        ends.bs_position = {0.0, 0.0, 5.0};
        ends.bs_gain_dbi = 18.5;
        const double t = deg2rad(ue_theta_deg);
        ends.ue_position = {10.0 * std::sin(t), 0.0, 10.0 * std::cos(t)};
        ends.ue_gain_dbi = 12.5;
    }
};

}  // namespace

TEST_SUITE_BEGIN("signal");

TEST_CASE("counter rng is a pure function of its stream") {
    CHECK(rng::uniform(1, 2, 3) == rng::uniform(1, 2, 3));
    CHECK(rng::uniform(1, 2, 3) != rng::uniform(1, 2, 4));
    double sum = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double u = rng::uniform(5, 0, i);
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    CHECK(sum / 10000.0 == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("complex gaussian statistics") {
    const double variance = 2.5;
    double p = 0.0;
    std::complex<double> mean{0.0, 0.0};
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
        const auto z = rng::complex_gaussian(variance, 9, 1, i);
        p += std::norm(z);
        mean += z;
    }
    CHECK(p / n == doctest::Approx(variance).epsilon(0.03));
    CHECK(std::abs(mean) / n < 0.02);
    CHECK(rng::complex_gaussian(0.0, 1, 2) == std::complex<double>{0.0, 0.0});
}

TEST_CASE("ofdm config accessors") {
    OfdmConfig c;
    CHECK(c.subcarrier_frequency(0) ==
          doctest::Approx(5.8e9 - 10e6 + 0.5 * 20e6 / 64));
    CHECK(c.subcarrier_frequency(63) ==
          doctest::Approx(5.8e9 + 10e6 - 0.5 * 20e6 / 64));
    CHECK(c.per_carrier_snr() == doctest::Approx(0.1 / (64 * 1e-12)));
    CHECK(c.pilot_amplitude() == doctest::Approx(std::sqrt(0.1 / 64)));
    c.narrowband = true;
    CHECK(c.subcarrier_frequency(0) == doctest::Approx(5.8e9));

    OfdmConfig bad;
    bad.num_subcarriers = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = OfdmConfig{};
    bad.total_power_w = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("interaction vector follows the state model and dither") {
    Codeword cw;
    cw.bits = {0, 1, 0, 1};
    const auto psi = interaction_from_codeword(cw).psi;
    REQUIRE(psi.size() == 4);
    CHECK(psi[0] == std::complex<double>{1.0, 0.0});
    CHECK(psi[1] == std::complex<double>{-1.0, 0.0});

    cw.dither_deg = {0.0, 90.0, 180.0, 270.0};
    const auto dithered = interaction_from_codeword(cw).psi;
    CHECK(std::arg(dithered[1]) == doctest::Approx(deg2rad(-90.0)));  // 180 + 90
    CHECK(std::abs(dithered[3]) == doctest::Approx(1.0));
}

TEST_CASE("antenna pattern factor") {
    const Vec3 z{0, 0, 1};
    CHECK(antenna_pattern_factor(12.5, z, {0, 0, 3}) == doctest::Approx(1.0));
    CHECK(antenna_pattern_factor(12.5, z, {0, 0, -3}) == doctest::Approx(0.0));
    CHECK(antenna_pattern_factor(12.5, z, {1, 0, 0}) == doctest::Approx(0.0));
    // Isotropic below 3 dBi, even backwards.
    CHECK(antenna_pattern_factor(0.0, z, {0, 0, -1}) == doctest::Approx(1.0));
    // Monotone in the off-axis angle.
    const double a = antenna_pattern_factor(18.5, z, {0.1, 0, 1});
    const double b = antenna_pattern_factor(18.5, z, {0.4, 0, 1});
    CHECK(a < 1.0);
    CHECK(b < a);
    CHECK_THROWS_AS(antenna_pattern_factor(12.5, {0, 0, 0}, z), std::invalid_argument);
}

TEST_CASE("narrowband single-carrier h_tx is proportional to the array response") {
    Fixture f;
    f.ofdm.num_subcarriers = 1;
    f.ofdm.narrowband = true;
    const auto ch = synthesize_channels(kGeom, f.ris, f.ends, f.ofdm, true);
    REQUIRE(ch.h_tx.size() == 1);
    const WaveParams w = wave_from_frequency(5.8e9);
    const auto resp = incident_response(kGeom, w, Direction{0.0, 0.0});
    const auto ratio0 = ch.h_tx[0][0] / resp[0];
    for (std::size_t e = 0; e < resp.size(); ++e) {
        const auto r = ch.h_tx[0][e] / resp[e];
        CHECK(r.real() == doctest::Approx(ratio0.real()).epsilon(1e-9));
        CHECK(r.imag() == doctest::Approx(ratio0.imag()).epsilon(1e-9));
    }
    CHECK(ch.h_tr[0] == std::complex<double>{0.0, 0.0});  // direct blocked
}

TEST_CASE("matched continuous configuration reproduces the radar equation") {
    Fixture f;
    f.ofdm.num_subcarriers = 1;
    f.ofdm.narrowband = true;
    const auto ch = synthesize_channels(kGeom, f.ris, f.ends, f.ofdm, true);
    // Conjugate-matched interaction: psi_e = conj(h_rx h_tx)/|h_rx h_tx|.
    InteractionVector psi;
    psi.psi.resize(kGeom.size());
    for (int e = 0; e < kGeom.size(); ++e) {
        const auto prod = ch.h_rx[0][e] * ch.h_tx[0][e];
        psi.psi[e] = std::conj(prod) / std::abs(prod);
    }
    const auto g = channel_coefficients(ch, psi);
    LinkParams p;
    p.theta_d_deg = 40.0;
    p.area_m2 = kGeom.area();
    const double expected = received_power(p, wave_from_frequency(5.8e9)) / p.tx_power_w;
    CHECK(std::norm(g[0]) == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("matched vs specular codeword power ratio equals the AF gain ratio") {
    Fixture f;
    f.ofdm.num_subcarriers = 1;
    f.ofdm.narrowband = true;
    const WaveParams w = wave_from_frequency(5.8e9);
    const auto ch = synthesize_channels(kGeom, f.ris, f.ends, f.ofdm, true);

    const auto matched = build_codeword(kGeom, w, Direction{0, 0}, Direction{40, 0});
    const Codeword specular{std::vector<std::uint8_t>(kGeom.size(), 0), {}, {}, {}, {}};
    const auto g_m = channel_coefficients(ch, interaction_from_codeword(matched));
    const auto g_s = channel_coefficients(ch, interaction_from_codeword(specular));

    const auto illum = plane_wave_illumination(kGeom, w, Direction{0, 0});
    const Direction ue_dir{40.0, 0.0};
    const double af_m = std::abs(array_factor(kGeom, w, matched, illum, ue_dir));
    const double af_s = std::abs(array_factor(kGeom, w, specular, illum, ue_dir));
    CHECK(std::norm(g_m[0]) / std::norm(g_s[0]) ==
          doctest::Approx((af_m * af_m) / (af_s * af_s)).epsilon(1e-9));
}

TEST_CASE("ue behind the RIS plane zeroes the RIS path with a flag") {
    Fixture f;
    f.ends.ue_position = {0.0, 0.0, -10.0};
    const auto ch = synthesize_channels(kGeom, f.ris, f.ends, f.ofdm, false);
    CHECK_FALSE(ch.ris_path_active);
    for (const auto& hk : ch.h_tx) {
        for (const auto& h : hk) CHECK(h == std::complex<double>{0.0, 0.0});
    }
    // The direct path survives.
    CHECK(std::abs(ch.h_tr[0]) > 0.0);
}

TEST_CASE("receive at zero noise matches an independent triple sum") {
    // Random 16x10 channels, random interaction, elementwise oracle.
    Fixture f;
    f.ofdm.noise_variance_w = 0.0;
    auto ch = synthesize_channels(kGeom, f.ris, f.ends, f.ofdm, false);
    for (int k = 0; k < f.ofdm.num_subcarriers; ++k) {
        for (int e = 0; e < kGeom.size(); ++e) {
            ch.h_tx[k][e] = {rng::uniform(1, k, e) - 0.5, rng::uniform(2, k, e) - 0.5};
            ch.h_rx[k][e] = {rng::uniform(3, k, e) - 0.5, rng::uniform(4, k, e) - 0.5};
        }
        ch.h_tr[k] = {rng::uniform(5, k) - 0.5, rng::uniform(6, k) - 0.5};
    }
    InteractionVector psi;
    psi.psi.resize(kGeom.size());
    for (int e = 0; e < kGeom.size(); ++e) {
        psi.psi[e] = std::polar(1.0, 2.0 * std::numbers::pi * rng::uniform(7, e));
    }
    std::vector<std::complex<double>> symbols(f.ofdm.num_subcarriers);
    for (int k = 0; k < f.ofdm.num_subcarriers; ++k) {
        symbols[k] = {rng::uniform(8, k) - 0.5, rng::uniform(9, k) - 0.5};
    }
    const auto r = receive(ch, psi, f.ofdm, symbols, 31337);
    for (int k = 0; k < f.ofdm.num_subcarriers; ++k) {
        std::complex<double> oracle{0.0, 0.0};
        for (int e = 0; e < kGeom.size(); ++e) {
            oracle += ch.h_rx[k][e] * psi.psi[e] * ch.h_tx[k][e];
        }
        oracle = oracle * symbols[k] + ch.h_tr[k] * symbols[k];
        CHECK(std::abs(r[k] - oracle) <= 1e-12 * std::abs(oracle));
    }
}

TEST_CASE("receive noise is deterministic per seed") {
    Fixture f;
    const auto ch = synthesize_channels(kGeom, f.ris, f.ends, f.ofdm, false);
    InteractionVector psi;
    psi.psi.assign(kGeom.size(), {1.0, 0.0});
    std::vector<std::complex<double>> symbols(f.ofdm.num_subcarriers, {1.0, 0.0});
    const auto a = receive(ch, psi, f.ofdm, symbols, 5);
    const auto b = receive(ch, psi, f.ofdm, symbols, 5);
    const auto c = receive(ch, psi, f.ofdm, symbols, 6);
    CHECK(a == b);
    CHECK(a != c);
    std::vector<std::complex<double>> short_symbols(3);
    CHECK_THROWS_AS(receive(ch, psi, f.ofdm, short_symbols, 5), std::invalid_argument);
}

TEST_CASE("achievable rate excludes the direct term and matches the formula") {
    Fixture f;
    f.ofdm.num_subcarriers = 4;
    const auto ch = synthesize_channels(kGeom, f.ris, f.ends, f.ofdm, false);
    InteractionVector psi;
    psi.psi.assign(kGeom.size(), {1.0, 0.0});
    const double rho = 100.0;
    double expected = 0.0;
    for (int k = 0; k < 4; ++k) {
        std::complex<double> sum{0.0, 0.0};
        for (int e = 0; e < kGeom.size(); ++e) {
            sum += ch.h_rx[k][e] * psi.psi[e] * ch.h_tx[k][e];
        }
        expected += std::log2(1.0 + rho * std::norm(sum)) / 4.0;
    }
    CHECK(achievable_rate(ch, psi, rho) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("beam sweep picks the design beam at the UE angle") {
    Fixture f(40.0);
    f.ofdm.noise_variance_w = 0.0;
    const WaveParams w = wave_from_frequency(5.8e9);
    const auto cb = build_codebook(kGeom, w, {Direction{0, 0}}, azimuth_sweep(0, 60, 5));
    const auto ch = synthesize_channels(kGeom, f.ris, f.ends, f.ofdm, true);
    const auto result = beam_sweep(cb, ch, f.ofdm, 1);
    CHECK(cb.codewords[result.selected].design_reflect.theta_deg == doctest::Approx(40.0));
    REQUIRE(result.powers_w.size() == cb.codewords.size());

    // Zero-noise selection equals the brute-force argmax of the powers.
    int argmax = 0;
    for (std::size_t c = 1; c < result.powers_w.size(); ++c) {
        if (result.powers_w[c] > result.powers_w[argmax]) argmax = static_cast<int>(c);
    }
    CHECK(result.selected == argmax);
}

TEST_CASE("beam sweep selection is invariant under channel scaling") {
    Fixture f(25.0);
    f.ofdm.noise_variance_w = 0.0;
    const WaveParams w = wave_from_frequency(5.8e9);
    const auto cb = build_codebook(kGeom, w, {Direction{0, 0}}, azimuth_sweep(0, 60, 2.5));
    auto ch = synthesize_channels(kGeom, f.ris, f.ends, f.ofdm, true);
    const auto base = beam_sweep(cb, ch, f.ofdm, 3);
    for (auto& hk : ch.h_tx) {
        for (auto& h : hk) h *= 7.0;
    }
    const auto scaled = beam_sweep(cb, ch, f.ofdm, 3);
    CHECK(scaled.selected == base.selected);
    for (std::size_t c = 0; c < base.powers_w.size(); ++c) {
        CHECK(scaled.powers_w[c] == doctest::Approx(49.0 * base.powers_w[c]).epsilon(1e-9));
    }
}

TEST_CASE("beam sweep breaks ties toward the lowest index") {
    // Two identical codewords: identical zero-noise measurements.
    Fixture f(30.0);
    f.ofdm.noise_variance_w = 0.0;
    const WaveParams w = wave_from_frequency(5.8e9);
    const auto cw = build_codeword(kGeom, w, Direction{0, 0}, Direction{30, 0});
    Codebook cb;
    cb.incident_set = {Direction{0, 0}};
    cb.reflect_set = {Direction{30, 0}, Direction{30, 0}};
    cb.codewords = {cw, cw};
    const auto ch = synthesize_channels(kGeom, f.ris, f.ends, f.ofdm, true);
    const auto result = beam_sweep(cb, ch, f.ofdm, 11);
    CHECK(result.selected == 0);
    CHECK(result.powers_w[0] == doctest::Approx(result.powers_w[1]));
}

TEST_SUITE_END();
