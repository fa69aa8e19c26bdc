#pragma once

#include <complex>
#include <vector>

#include "ris/vec3.hpp"
#include "ris/wave.hpp"

namespace ris {

/// Rectangular element grid of the RIS aperture, centered on the origin.
/// The x axis carries num_x elements (azimuth scan plane), the y axis
/// num_y elements (elevation plane). Element storage is row-major with the
/// x index m as the fast index: flat index = n * num_x + m.
struct ArrayGeometry {
    int num_x = 16;
    int num_y = 10;
    double spacing_x_m = 0.02585;
    double spacing_y_m = 0.02585;

    int size() const { return num_x * num_y; }
    int flat_index(int m, int n) const { return n * num_x + m; }

    /// Centered element coordinates.
    double element_x(int m) const { return (m - (num_x - 1) / 2.0) * spacing_x_m; }
    double element_y(int n) const { return (n - (num_y - 1) / 2.0) * spacing_y_m; }

    /// Physical aperture area in m^2.
    double area() const { return num_x * spacing_x_m * num_y * spacing_y_m; }

    void validate() const;  // throws std::invalid_argument

    /// The 160-element prototype: 16 x 10 at 25.85 mm pitch.
    static ArrayGeometry standard16x10() { return ArrayGeometry{}; }
};

/// Per-element propagation phasors exp(-j k0 (x_m u + y_n v)) for a
/// far-field direction, flattened in geometry order.
std::vector<std::complex<double>> array_response(const ArrayGeometry& geometry,
                                                 const WaveParams& wave,
                                                 const Direction& dir);

/// Per-element incident-wave phasors exp(+j k0 (x_m u + y_n v)); the
/// conjugate of array_response, matching the incident-phase sign convention.
std::vector<std::complex<double>> incident_response(const ArrayGeometry& geometry,
                                                    const WaveParams& wave,
                                                    const Direction& dir);

/// Position and orientation of a surface or antenna in world coordinates.
/// boresight is the outward unit normal; x_axis spans the azimuth plane of
/// the local frame and is re-orthogonalized against boresight on
/// construction. The elevation axis completes the right-handed frame.
struct Pose3D {
    Vec3 position;
    Vec3 boresight{0.0, 0.0, 1.0};
    Vec3 x_axis{1.0, 0.0, 0.0};

    Vec3 y_axis() const { return boresight.cross(x_axis); }

    /// Normalizes boresight and projects x_axis into the surface plane.
    static Pose3D make(const Vec3& position, const Vec3& boresight);
    static Pose3D make(const Vec3& position, const Vec3& boresight, const Vec3& x_axis);
};

struct LocalDirection {
    Direction dir;
    double range_m = 0.0;
};

/// Expresses a world point in the local frame of a pose as (direction,
/// range). Throws std::invalid_argument when the point coincides with the
/// pose position and std::domain_error when the point lies behind or in
/// the surface plane.
LocalDirection local_direction(const Pose3D& pose, const Vec3& point);

}  // namespace ris
