#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "ris/codebook.hpp"
#include "ris/geometry.hpp"
#include "ris/wave.hpp"

namespace ris {

/// OFDM waveform configuration. Defaults follow the testbed: 64 subcarriers
/// over 20 MHz at 5.8 GHz.
struct OfdmConfig {
    int num_subcarriers = 64;
    double bandwidth_hz = 20e6;
    double center_frequency_hz = 5.8e9;
    double total_power_w = 0.1;
    double noise_variance_w = 1e-12;
    bool narrowband = false;  // collapse all subcarriers to the center frequency

    /// Frequency of subcarrier k (0-based), uniformly spanning the bandwidth.
    double subcarrier_frequency(int k) const;
    /// Per-carrier SNR rho = P / (K sigma_n^2).
    double per_carrier_snr() const;
    /// Unit-power training pilot amplitude per subcarrier, sqrt(P/K).
    double pilot_amplitude() const;

    void validate() const;
};

/// LoS channels through and around the RIS, one vector per subcarrier.
struct ChannelSet {
    std::vector<std::vector<std::complex<double>>> h_tx;  // K x MN
    std::vector<std::vector<std::complex<double>>> h_rx;  // K x MN
    std::vector<std::complex<double>> h_tr;               // K
    bool ris_path_active = true;
};

/// Diagonal of the RIS interaction matrix: per-element reflection phasors.
struct InteractionVector {
    std::vector<std::complex<double>> psi;
};

InteractionVector interaction_from_codeword(const Codeword& codeword,
                                            const ElementStateModel& states = {});

/// Endpoint description for channel synthesis, in world coordinates. When a
/// boresight is not given the antenna is assumed to be aimed at the RIS.
struct LinkEnds {
    Vec3 bs_position;
    double bs_gain_dbi = 18.5;
    Vec3 ue_position;
    double ue_gain_dbi = 12.5;
    double efficiency = 1.0;
    std::optional<Vec3> bs_boresight;
    std::optional<Vec3> ue_boresight;
};

/// Amplitude factor of a cos^q antenna pattern (q solved from the gain via
/// G = 2(2q + 1)) for radiation along `direction` relative to `boresight`.
/// Gains at or below 3 dBi are treated as isotropic (factor 1); otherwise
/// the back half-space gets factor 0.
double antenna_pattern_factor(double gain_dbi, const Vec3& boresight, const Vec3& direction);

/// LoS channel synthesis. The RIS-path amplitudes are split geometrically
/// between the two hops and scaled so that a perfectly matched continuous
/// configuration reproduces the bistatic radar-equation received power.
/// Array phases are evaluated at each subcarrier's own frequency unless the
/// config is narrowband. The direct path is free-space LoS, zero when
/// blocked. A UE behind the RIS plane zeroes the RIS path and clears
/// ris_path_active.
ChannelSet synthesize_channels(const ArrayGeometry& geometry, const Pose3D& ris_pose,
                               const LinkEnds& ends, const OfdmConfig& ofdm,
                               bool direct_blocked);

/// Noiseless per-subcarrier through-channel coefficient
/// g_k = h_rx,k^T Psi h_tx,k + h_tr,k.
std::vector<std::complex<double>> channel_coefficients(const ChannelSet& channels,
                                                       const InteractionVector& interaction);

/// Received symbols r_k = g_k s_k + n_k with circular complex Gaussian
/// noise, deterministic per seed.
std::vector<std::complex<double>> receive(const ChannelSet& channels,
                                          const InteractionVector& interaction,
                                          const OfdmConfig& ofdm,
                                          const std::vector<std::complex<double>>& symbols,
                                          std::uint64_t noise_seed);

/// (1/K) sum_k log2(1 + rho |g_k|^2), with the direct term excluded
/// (rate of the RIS-assisted path).
double achievable_rate(const ChannelSet& channels, const InteractionVector& interaction,
                       double rho);

struct SweepResult {
    std::vector<double> powers_w;  // total received power per codeword
    int selected = 0;              // argmax, ties broken by lowest index
};

/// Beam training: measure sum_k |r_k|^2 for every codeword with unit pilots
/// and pick the maximum. Per-codeword noise streams are independent
/// functions of (seed, codeword, subcarrier).
SweepResult beam_sweep(const Codebook& codebook, const ChannelSet& channels,
                       const OfdmConfig& ofdm, std::uint64_t seed,
                       const ElementStateModel& states = {});

}  // namespace ris
