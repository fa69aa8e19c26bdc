#include "ris/link.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ris {

void LinkParams::validate() const {
    if (tx_power_w <= 0.0) throw std::invalid_argument("LinkParams: tx_power must be positive");
    if (bs_ris_distance_m <= 0.0 || ris_ue_distance_m <= 0.0) {
        throw std::invalid_argument("LinkParams: distances must be positive");
    }
    if (efficiency <= 0.0 || efficiency > 1.0) {
        throw std::invalid_argument("LinkParams: efficiency must be in (0, 1]");
    }
    if (area_m2 <= 0.0) throw std::invalid_argument("LinkParams: area must be positive");
    if (theta_i_deg < 0.0 || theta_i_deg >= 90.0 || theta_d_deg < 0.0 || theta_d_deg >= 90.0) {
        throw std::invalid_argument("LinkParams: angles must be in [0, 90)");
    }
    if (noise_power_w <= 0.0) {
        throw std::invalid_argument("LinkParams: noise power must be positive");
    }
}

double monostatic_rcs(double area_m2, double efficiency, const WaveParams& wave) {
    if (area_m2 <= 0.0) throw std::invalid_argument("monostatic_rcs: area must be positive");
    const double lam2 = wave.wavelength_m * wave.wavelength_m;
    return 4.0 * std::numbers::pi * efficiency * area_m2 * area_m2 / lam2;
}

double bistatic_rcs(double area_m2, double efficiency, const WaveParams& wave,
                    double theta_i_deg, double theta_d_deg) {
    if (theta_i_deg < 0.0 || theta_i_deg >= 90.0 || theta_d_deg < 0.0 ||
        theta_d_deg >= 90.0) {
        throw std::invalid_argument("bistatic_rcs: angles must be in [0, 90)");
    }
    return monostatic_rcs(area_m2, efficiency, wave) *
           std::cos(deg2rad(theta_i_deg)) * std::cos(deg2rad(theta_d_deg));
}

double received_power(const LinkParams& params, const WaveParams& wave) {
    params.validate();
    const double sigma = bistatic_rcs(params.area_m2, params.efficiency, wave,
                                      params.theta_i_deg, params.theta_d_deg);
    const double lam2 = wave.wavelength_m * wave.wavelength_m;
    const double four_pi = 4.0 * std::numbers::pi;
    return params.tx_power_w * db_to_linear(params.bs_gain_dbi) *
           db_to_linear(params.ue_gain_dbi) * lam2 * sigma /
           (four_pi * four_pi * four_pi * params.bs_ris_distance_m * params.bs_ris_distance_m *
            params.ris_ue_distance_m * params.ris_ue_distance_m);
}

double snr_db(double received_power_w, double noise_power_w) {
    if (noise_power_w <= 0.0) {
        throw std::invalid_argument("snr_db: noise power must be positive");
    }
    return linear_to_db(received_power_w / noise_power_w);
}

std::vector<PathlossEntry> pathloss_curve(const LinkParams& params_template,
                                          const WaveParams& wave,
                                          const std::vector<double>& distances_m,
                                          const std::vector<double>& reflect_angles_deg) {
    if (distances_m.empty() || reflect_angles_deg.empty()) {
        throw std::invalid_argument("pathloss_curve: lists must be non-empty");
    }
    std::vector<PathlossEntry> table;
    table.reserve(distances_m.size() * reflect_angles_deg.size());
    for (double angle : reflect_angles_deg) {
        for (double dist : distances_m) {
            LinkParams p = params_template;
            p.theta_d_deg = angle;
            p.ris_ue_distance_m = dist;
            PathlossEntry e;
            e.angle_deg = angle;
            e.distance_m = dist;
            e.received_power_w = received_power(p, wave);
            e.snr_db = snr_db(e.received_power_w, p.noise_power_w);
            table.push_back(e);
        }
    }
    return table;
}

}  // namespace ris
