#pragma once

#include <numbers>

namespace ris {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

inline double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / std::numbers::pi; }

/// Wraps a phase in degrees to (-180, 180].
double wrap_phase_deg(double deg);

double db_to_linear(double db);
double linear_to_db(double lin);
double watts_to_dbm(double watts);

/// Carrier frequency together with the derived wavelength and free-space
/// wavenumber.
struct WaveParams {
    double frequency_hz = 0.0;
    double wavelength_m = 0.0;
    double wavenumber = 0.0;  // rad/m
};

/// Builds WaveParams from a carrier frequency. Throws std::invalid_argument
/// for non-positive frequencies.
WaveParams wave_from_frequency(double frequency_hz);

/// Propagation direction in the RIS local frame. theta is the elevation
/// angle off the broadside normal in [0, 90]; phi is the azimuth in the
/// surface plane in [0, 360). Signed 1-D cut angles map to phi = 0/180
/// (azimuth plane) or phi = 90/270 (elevation plane).
struct Direction {
    double theta_deg = 0.0;
    double phi_deg = 0.0;
};

/// Direction cosines u = sin(theta)cos(phi), v = sin(theta)sin(phi).
double dir_u(const Direction& d);
double dir_v(const Direction& d);

}  // namespace ris
