#include "ris/wave.hpp"

#include <cmath>
#include <stdexcept>

namespace ris {

double wrap_phase_deg(double deg) {
    double w = std::fmod(deg, 360.0);
    if (w <= -180.0) w += 360.0;
    if (w > 180.0) w -= 360.0;
    return w;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

double watts_to_dbm(double watts) { return linear_to_db(watts * 1e3); }

WaveParams wave_from_frequency(double frequency_hz) {
    if (frequency_hz <= 0.0) {
        throw std::invalid_argument("wave_from_frequency: frequency must be positive");
    }
    WaveParams w;
    w.frequency_hz = frequency_hz;
    w.wavelength_m = kSpeedOfLight / frequency_hz;
    w.wavenumber = 2.0 * std::numbers::pi / w.wavelength_m;
    return w;
}

double dir_u(const Direction& d) {
    return std::sin(deg2rad(d.theta_deg)) * std::cos(deg2rad(d.phi_deg));
}

double dir_v(const Direction& d) {
    return std::sin(deg2rad(d.theta_deg)) * std::sin(deg2rad(d.phi_deg));
}

}  // namespace ris
