#include "ris/signal.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ris/link.hpp"
#include "ris/rng.hpp"

namespace ris {

namespace {
constexpr std::uint64_t kNoiseStream = 0x4015eULL;
}

double OfdmConfig::subcarrier_frequency(int k) const {
    if (narrowband || num_subcarriers == 1) return center_frequency_hz;
    const double lo = center_frequency_hz - bandwidth_hz / 2.0;
    const double step = bandwidth_hz / num_subcarriers;
    return lo + (k + 0.5) * step;
}

double OfdmConfig::per_carrier_snr() const {
    return total_power_w / (num_subcarriers * noise_variance_w);
}

double OfdmConfig::pilot_amplitude() const {
    return std::sqrt(total_power_w / num_subcarriers);
}

void OfdmConfig::validate() const {
    if (num_subcarriers < 1) throw std::invalid_argument("OfdmConfig: K must be >= 1");
    if (bandwidth_hz <= 0.0 || center_frequency_hz <= 0.0) {
        throw std::invalid_argument("OfdmConfig: frequencies must be positive");
    }
    if (total_power_w <= 0.0 || noise_variance_w < 0.0) {
        throw std::invalid_argument("OfdmConfig: bad power configuration");
    }
}

InteractionVector interaction_from_codeword(const Codeword& codeword,
                                            const ElementStateModel& states) {
    InteractionVector out;
    out.psi.resize(codeword.bits.size());
    for (std::size_t e = 0; e < codeword.bits.size(); ++e) {
        out.psi[e] = states.reflection(codeword.bits[e]);
        if (codeword.has_dither()) {
            out.psi[e] *= std::polar(1.0, deg2rad(codeword.dither_deg[e]));
        }
    }
    return out;
}

double antenna_pattern_factor(double gain_dbi, const Vec3& boresight, const Vec3& direction) {
    const double gain = db_to_linear(gain_dbi);
    if (gain <= 2.0) return 1.0;  // near-omni antennas have no useful taper
    const double bn = boresight.norm();
    const double dn = direction.norm();
    if (bn < 1e-12 || dn < 1e-12) {
        throw std::invalid_argument("antenna_pattern_factor: zero-length vector");
    }
    const double c = boresight.dot(direction) / (bn * dn);
    if (c <= 0.0) return 0.0;
    const double q = (gain / 2.0 - 1.0) / 2.0;
    return std::pow(c, q);
}

ChannelSet synthesize_channels(const ArrayGeometry& geometry, const Pose3D& ris_pose,
                               const LinkEnds& ends, const OfdmConfig& ofdm,
                               bool direct_blocked) {
    geometry.validate();
    ofdm.validate();
    const int count = geometry.size();
    const int num_k = ofdm.num_subcarriers;

    const LocalDirection bs = local_direction(ris_pose, ends.bs_position);
    const Vec3 bs_axis = ends.bs_boresight.value_or(ris_pose.position - ends.bs_position);
    const Vec3 ue_axis = ends.ue_boresight.value_or(ris_pose.position - ends.ue_position);

    ChannelSet ch;
    ch.h_tx.assign(num_k, std::vector<std::complex<double>>(count));
    ch.h_rx.assign(num_k, std::vector<std::complex<double>>(count));
    ch.h_tr.assign(num_k, {0.0, 0.0});

    LocalDirection ue;
    try {
        ue = local_direction(ris_pose, ends.ue_position);
    } catch (const std::domain_error&) {
        ch.ris_path_active = false;
    }

    const double gain_product =
        db_to_linear(ends.bs_gain_dbi) * db_to_linear(ends.ue_gain_dbi);
    const double direct_dist = (ends.ue_position - ends.bs_position).norm();

    // Horn directivity: full gain applies along each antenna's boresight;
    // off-axis paths (notably the direct TX-RX leg when both horns face the
    // RIS) are attenuated by the cos^q pattern solved from the gain.
    const double taper_ris =
        antenna_pattern_factor(ends.bs_gain_dbi, bs_axis, ris_pose.position - ends.bs_position) *
        antenna_pattern_factor(ends.ue_gain_dbi, ue_axis, ris_pose.position - ends.ue_position);
    double taper_direct = 0.0;
    if (direct_dist > 0.0) {
        taper_direct = antenna_pattern_factor(ends.bs_gain_dbi, bs_axis,
                                              ends.ue_position - ends.bs_position) *
                       antenna_pattern_factor(ends.ue_gain_dbi, ue_axis,
                                              ends.bs_position - ends.ue_position);
    }

    for (int k = 0; k < num_k; ++k) {
        const WaveParams wave = wave_from_frequency(ofdm.subcarrier_frequency(k));
        if (ch.ris_path_active) {
            const double sigma = bistatic_rcs(geometry.area(), ends.efficiency, wave,
                                              bs.dir.theta_deg, ue.dir.theta_deg);
            const double four_pi = 4.0 * std::numbers::pi;
            const double g2 = gain_product * wave.wavelength_m * wave.wavelength_m * sigma /
                              (four_pi * four_pi * four_pi * bs.range_m * bs.range_m *
                               ue.range_m * ue.range_m);
            // Geometric-mean split so a matched continuous configuration
            // yields |h_rx^T Psi h_tx| = sqrt(g2).
            const double alpha = std::sqrt(taper_ris * std::sqrt(g2) / count);
            const auto a_tx = incident_response(geometry, wave, bs.dir);
            const auto a_rx = array_response(geometry, wave, ue.dir);
            const auto phase_tx = std::polar(alpha, -wave.wavenumber * bs.range_m);
            const auto phase_rx = std::polar(alpha, -wave.wavenumber * ue.range_m);
            for (int e = 0; e < count; ++e) {
                ch.h_tx[k][e] = phase_tx * a_tx[e];
                ch.h_rx[k][e] = phase_rx * a_rx[e];
            }
        }
        if (!direct_blocked && direct_dist > 0.0) {
            const double mag = taper_direct * std::sqrt(gain_product) * wave.wavelength_m /
                               (4.0 * std::numbers::pi * direct_dist);
            ch.h_tr[k] = std::polar(mag, -wave.wavenumber * direct_dist);
        }
    }
    return ch;
}

std::vector<std::complex<double>> channel_coefficients(const ChannelSet& channels,
                                                       const InteractionVector& interaction) {
    const auto num_k = channels.h_tr.size();
    std::vector<std::complex<double>> g(num_k);
    for (std::size_t k = 0; k < num_k; ++k) {
        if (channels.h_tx[k].size() != interaction.psi.size() ||
            channels.h_rx[k].size() != interaction.psi.size()) {
            throw std::invalid_argument("channel_coefficients: dimension mismatch");
        }
        std::complex<double> sum{0.0, 0.0};
        for (std::size_t e = 0; e < interaction.psi.size(); ++e) {
            sum += channels.h_rx[k][e] * interaction.psi[e] * channels.h_tx[k][e];
        }
        g[k] = sum + channels.h_tr[k];
    }
    return g;
}

std::vector<std::complex<double>> receive(const ChannelSet& channels,
                                          const InteractionVector& interaction,
                                          const OfdmConfig& ofdm,
                                          const std::vector<std::complex<double>>& symbols,
                                          std::uint64_t noise_seed) {
    const auto g = channel_coefficients(channels, interaction);
    if (symbols.size() != g.size()) {
        throw std::invalid_argument("receive: symbol count mismatch");
    }
    std::vector<std::complex<double>> r(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        r[k] = g[k] * symbols[k] +
               rng::complex_gaussian(ofdm.noise_variance_w, noise_seed, kNoiseStream, k);
    }
    return r;
}

double achievable_rate(const ChannelSet& channels, const InteractionVector& interaction,
                       double rho) {
    if (rho <= 0.0) throw std::invalid_argument("achievable_rate: rho must be positive");
    ChannelSet ris_only = channels;
    for (auto& h : ris_only.h_tr) h = {0.0, 0.0};
    const auto g = channel_coefficients(ris_only, interaction);
    double rate = 0.0;
    for (const auto& gk : g) {
        rate += std::log2(1.0 + rho * std::norm(gk));
    }
    return rate / static_cast<double>(g.size());
}

SweepResult beam_sweep(const Codebook& codebook, const ChannelSet& channels,
                       const OfdmConfig& ofdm, std::uint64_t seed,
                       const ElementStateModel& states) {
    if (codebook.codewords.empty()) {
        throw std::invalid_argument("beam_sweep: empty codebook");
    }
    const double pilot = ofdm.pilot_amplitude();
    SweepResult result;
    result.powers_w.resize(codebook.codewords.size());
    for (std::size_t c = 0; c < codebook.codewords.size(); ++c) {
        const auto interaction = interaction_from_codeword(codebook.codewords[c], states);
        const auto g = channel_coefficients(channels, interaction);
        double power = 0.0;
        for (std::size_t k = 0; k < g.size(); ++k) {
            const auto r = g[k] * pilot +
                           rng::complex_gaussian(ofdm.noise_variance_w, seed, kNoiseStream,
                                                 c, k);
            power += std::norm(r);
        }
        result.powers_w[c] = power;
    }
    result.selected = 0;
    for (std::size_t c = 1; c < result.powers_w.size(); ++c) {
        if (result.powers_w[c] > result.powers_w[result.selected]) {
            result.selected = static_cast<int>(c);
        }
    }
    return result;
}

}  // namespace ris
