#include "ris/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ris {

void ArrayGeometry::validate() const {
    if (num_x <= 0 || num_y <= 0) {
        throw std::invalid_argument("ArrayGeometry: element counts must be positive");
    }
    if (spacing_x_m <= 0.0 || spacing_y_m <= 0.0) {
        throw std::invalid_argument("ArrayGeometry: spacing must be positive");
    }
}

std::vector<std::complex<double>> array_response(const ArrayGeometry& geometry,
                                                 const WaveParams& wave,
                                                 const Direction& dir) {
    geometry.validate();
    const double u = dir_u(dir);
    const double v = dir_v(dir);
    std::vector<std::complex<double>> out(geometry.size());
    for (int n = 0; n < geometry.num_y; ++n) {
        const double yv = geometry.element_y(n) * v;
        for (int m = 0; m < geometry.num_x; ++m) {
            const double phase = -wave.wavenumber * (geometry.element_x(m) * u + yv);
            out[geometry.flat_index(m, n)] = std::polar(1.0, phase);
        }
    }
    return out;
}

std::vector<std::complex<double>> incident_response(const ArrayGeometry& geometry,
                                                    const WaveParams& wave,
                                                    const Direction& dir) {
    auto out = array_response(geometry, wave, dir);
    for (auto& c : out) c = std::conj(c);
    return out;
}

Pose3D Pose3D::make(const Vec3& position, const Vec3& boresight) {
    // Default azimuth axis: horizontal, perpendicular to boresight.
    const Vec3 up{0.0, 0.0, 1.0};
    Vec3 x = up.cross(boresight);
    if (x.norm() < 1e-12) x = Vec3{1.0, 0.0, 0.0};
    return make(position, boresight, x);
}

Pose3D Pose3D::make(const Vec3& position, const Vec3& boresight, const Vec3& x_axis) {
    if (boresight.norm() < 1e-12) {
        throw std::invalid_argument("Pose3D: boresight must be nonzero");
    }
    Pose3D p;
    p.position = position;
    p.boresight = boresight.normalized();
    Vec3 x = x_axis - p.boresight * x_axis.dot(p.boresight);
    if (x.norm() < 1e-12) {
        throw std::invalid_argument("Pose3D: x_axis parallel to boresight");
    }
    p.x_axis = x.normalized();
    return p;
}

LocalDirection local_direction(const Pose3D& pose, const Vec3& point) {
    const Vec3 d = point - pose.position;
    const double range = d.norm();
    if (range < 1e-12) {
        throw std::invalid_argument("local_direction: point coincides with pose position");
    }
    const double lz = d.dot(pose.boresight);
    if (lz <= 1e-12 * range) {
        throw std::domain_error("local_direction: point behind or in the surface plane");
    }
    const double lx = d.dot(pose.x_axis);
    const double ly = d.dot(pose.y_axis());
    LocalDirection out;
    out.range_m = range;
    out.dir.theta_deg = rad2deg(std::acos(std::clamp(lz / range, -1.0, 1.0)));
    double phi = rad2deg(std::atan2(ly, lx));
    if (phi < 0.0) phi += 360.0;
    out.dir.phi_deg = phi;
    return out;
}

}  // namespace ris
