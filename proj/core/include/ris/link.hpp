#pragma once

#include <vector>

#include "ris/wave.hpp"

namespace ris {

/// Bistatic radar-equation inputs. Gains are accepted in dBi at this
/// boundary and converted to linear internally.
struct LinkParams {
    double tx_power_w = 0.1;
    double bs_gain_dbi = 18.5;
    double ue_gain_dbi = 12.5;
    double bs_ris_distance_m = 5.0;
    double ris_ue_distance_m = 10.0;
    double efficiency = 1.0;      // eta in (0, 1]
    double area_m2 = 0.414 * 0.259;
    double theta_i_deg = 0.0;
    double theta_d_deg = 0.0;
    double noise_power_w = 1e-12;  // -90 dBm

    void validate() const;  // throws std::invalid_argument
};

/// sigma = 4 pi eta A^2 / lambda^2.
double monostatic_rcs(double area_m2, double efficiency, const WaveParams& wave);

/// sigma = 4 pi eta cos(theta_i) cos(theta_d) A^2 / lambda^2. Angles must be
/// in [0, 90).
double bistatic_rcs(double area_m2, double efficiency, const WaveParams& wave,
                    double theta_i_deg, double theta_d_deg);

/// P_r = P_t G_BS G_UE lambda^2 sigma / ((4 pi)^3 R_i^2 R_d^2), with sigma
/// from bistatic_rcs.
double received_power(const LinkParams& params, const WaveParams& wave);

/// 10 log10(P_r / noise).
double snr_db(double received_power_w, double noise_power_w);

struct PathlossEntry {
    double angle_deg = 0.0;
    double distance_m = 0.0;
    double received_power_w = 0.0;
    double snr_db = 0.0;
};

/// Received power per (reflect angle, RIS-UE distance) pair, with the angle
/// entering through the bistatic RCS.
std::vector<PathlossEntry> pathloss_curve(const LinkParams& params_template,
                                          const WaveParams& wave,
                                          const std::vector<double>& distances_m,
                                          const std::vector<double>& reflect_angles_deg);

}  // namespace ris
