#include "ris/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ris/link.hpp"
#include "ris/rng.hpp"

namespace ris {

void Blocker::validate() const {
    if (half_extents.x <= 0.0 || half_extents.y <= 0.0 || half_extents.z <= 0.0) {
        throw std::invalid_argument("Blocker: extents must be positive");
    }
    const double tol = 1e-9;
    if (std::abs(axis_x.norm() - 1.0) > tol || std::abs(axis_y.norm() - 1.0) > tol ||
        std::abs(axis_z.norm() - 1.0) > tol || std::abs(axis_x.dot(axis_y)) > tol ||
        std::abs(axis_x.dot(axis_z)) > tol || std::abs(axis_y.dot(axis_z)) > tol) {
        throw std::invalid_argument("Blocker: orientation axes must be orthonormal");
    }
}

namespace {

// Slab test in the blocker's local frame; closed intervals so grazing
// contact counts as an intersection.
bool segment_hits_blocker(const Vec3& a, const Vec3& b, const Blocker& blk) {
    const Vec3 ra = a - blk.center;
    const Vec3 rb = b - blk.center;
    const double p0[3] = {ra.dot(blk.axis_x), ra.dot(blk.axis_y), ra.dot(blk.axis_z)};
    const double p1[3] = {rb.dot(blk.axis_x), rb.dot(blk.axis_y), rb.dot(blk.axis_z)};
    const double h[3] = {blk.half_extents.x, blk.half_extents.y, blk.half_extents.z};

    double tmin = 0.0, tmax = 1.0;
    for (int i = 0; i < 3; ++i) {
        const double d = p1[i] - p0[i];
        if (d == 0.0) {
            if (p0[i] < -h[i] || p0[i] > h[i]) return false;
            continue;
        }
        double t0 = (-h[i] - p0[i]) / d;
        double t1 = (h[i] - p0[i]) / d;
        if (t0 > t1) std::swap(t0, t1);
        tmin = std::max(tmin, t0);
        tmax = std::min(tmax, t1);
        if (tmin > tmax) return false;
    }
    return true;
}

}  // namespace

bool los_blocked(const Vec3& a, const Vec3& b, const std::vector<Blocker>& blockers) {
    if ((b - a).norm() < 1e-12) {
        throw std::invalid_argument("los_blocked: degenerate segment");
    }
    for (const auto& blk : blockers) {
        blk.validate();
        if (segment_hits_blocker(a, b, blk)) return true;
    }
    return false;
}

void Scenario::validate() const {
    ris_geometry.validate();
    ofdm.validate();
    if (ue_grid.empty()) throw std::invalid_argument("Scenario: UE grid must be non-empty");
    if (efficiency <= 0.0 || efficiency > 1.0) {
        throw std::invalid_argument("Scenario: efficiency must be in (0, 1]");
    }
    if (los_blocked(bs_pose.position, ris_pose.position, blockers)) {
        throw InfeasibleScenario("Scenario: the RIS-BS path is blocked");
    }
    bs_from_ris();  // throws when the BS is behind the RIS plane
}

Codebook Scenario::design_codebook() const {
    const Direction incident = bs_from_ris().dir;
    const auto reflect = azimuth_sweep(codebook_start_deg, codebook_stop_deg,
                                       codebook_step_deg);
    if (reflect.empty()) return Codebook{{incident}, {}, {}, std::nullopt};
    std::optional<std::uint64_t> dither;
    if (codebook_dither) dither = rng::hash(seed, 0xd1ceULL, 1);
    return build_codebook(ris_geometry, wave(), {incident}, reflect, dither);
}

namespace {

bool incident_set_covers(const Codebook& codebook, const Direction& bs_dir) {
    const double u = dir_u(bs_dir), v = dir_v(bs_dir);
    for (const auto& inc : codebook.incident_set) {
        if (std::hypot(dir_u(inc) - u, dir_v(inc) - v) < 0.02) return true;
    }
    return false;
}

double total_signal_snr_db(const std::vector<std::complex<double>>& coeffs,
                           const OfdmConfig& ofdm) {
    const double pilot2 = ofdm.total_power_w / ofdm.num_subcarriers;
    double power = 0.0;
    for (const auto& g : coeffs) power += std::norm(g) * pilot2;
    const double noise = ofdm.num_subcarriers * ofdm.noise_variance_w;
    if (power <= 0.0) return -std::numeric_limits<double>::infinity();
    return linear_to_db(power / noise);
}

}  // namespace

CoverageMap coverage_map(const Scenario& scenario, const Codebook& codebook) {
    scenario.validate();
    if (!codebook.codewords.empty() &&
        !incident_set_covers(codebook, scenario.bs_from_ris().dir)) {
        throw std::invalid_argument(
            "coverage_map: codebook incident set does not cover the BS direction");
    }

    const InteractionVector no_ris{std::vector<std::complex<double>>(
        scenario.ris_geometry.size(), {0.0, 0.0})};

    CoverageMap map;
    map.points.reserve(scenario.ue_grid.size());
    for (std::size_t idx = 0; idx < scenario.ue_grid.size(); ++idx) {
        const Vec3& ue = scenario.ue_grid[idx];
        CoveragePoint pt;
        pt.position = ue;
        pt.blocked = los_blocked(scenario.bs_pose.position, ue, scenario.blockers);

        LinkEnds ends;
        ends.bs_position = scenario.bs_pose.position;
        ends.bs_gain_dbi = scenario.bs_gain_dbi;
        ends.ue_position = ue;
        ends.ue_gain_dbi = scenario.ue_gain_dbi;
        ends.efficiency = scenario.efficiency;
        ends.bs_boresight = scenario.bs_pose.boresight;
        auto channels = synthesize_channels(scenario.ris_geometry, scenario.ris_pose, ends,
                                            scenario.ofdm, pt.blocked);
        if (channels.ris_path_active &&
            los_blocked(scenario.ris_pose.position, ue, scenario.blockers)) {
            for (auto& hk : channels.h_tx) std::fill(hk.begin(), hk.end(), std::complex<double>{});
            for (auto& hk : channels.h_rx) std::fill(hk.begin(), hk.end(), std::complex<double>{});
            channels.ris_path_active = false;
        }

        pt.snr_no_ris_db =
            total_signal_snr_db(channel_coefficients(channels, no_ris), scenario.ofdm);

        if (codebook.codewords.empty() || !channels.ris_path_active) {
            pt.snr_ris_db = pt.snr_no_ris_db;
            pt.best_codeword = -1;
            pt.improvement_db = 0.0;
        } else {
            const auto sweep = beam_sweep(codebook, channels, scenario.ofdm,
                                          rng::hash(scenario.seed, 0xc0eULL, idx),
                                          scenario.states);
            pt.best_codeword = sweep.selected;
            const auto interaction = interaction_from_codeword(
                codebook.codewords[sweep.selected], scenario.states);
            pt.snr_ris_db =
                total_signal_snr_db(channel_coefficients(channels, interaction), scenario.ofdm);
            // At fully blocked points the direct path carries no power, so
            // the improvement is reported as the with-RIS SNR itself (gain
            // over the noise floor).
            pt.improvement_db = std::isinf(pt.snr_no_ris_db)
                                    ? pt.snr_ris_db
                                    : pt.snr_ris_db - pt.snr_no_ris_db;
        }
        map.points.push_back(pt);
    }
    return map;
}

CoverageStats coverage_stats(const CoverageMap& map) {
    if (map.points.empty()) {
        throw std::invalid_argument("coverage_stats: empty map");
    }
    std::vector<const CoveragePoint*> pool;
    for (const auto& p : map.points) {
        if (p.blocked) pool.push_back(&p);
    }
    CoverageStats stats;
    if (pool.empty()) {
        stats.no_blocked_points = true;
        for (const auto& p : map.points) pool.push_back(&p);
    }
    stats.max_improvement_db = -std::numeric_limits<double>::infinity();
    double sum = 0.0;
    for (const auto* p : pool) {
        sum += p->improvement_db;
        stats.max_improvement_db = std::max(stats.max_improvement_db, p->improvement_db);
        if (p->improvement_db > 0.0) ++stats.improved_count;
    }
    stats.mean_improvement_db = sum / static_cast<double>(pool.size());
    return stats;
}

Scenario parking_preset() {
    Scenario s;
    s.name = "parking";
    s.ris_pose = Pose3D::make({0.0, 0.0, 2.0}, {0.0, 1.0, 0.0});
    s.ris_geometry = ArrayGeometry::standard16x10();
    // Transmit feed horn on the RIS boresight at 5 m.
    s.bs_pose = Pose3D::make({0.0, 5.0, 2.0}, {0.0, -1.0, 0.0});
    s.bs_gain_dbi = 12.5;
    // Receiver horn on a 10 m arc, 0-60 degrees off broadside.
    s.ue_gain_dbi = 18.5;
    for (int i = 0; i <= 24; ++i) {
        const double t = deg2rad(2.5 * i);
        // Arc along the RIS local +x half-plane (world -x for this pose).
        s.ue_grid.push_back({-10.0 * std::sin(t), 10.0 * std::cos(t), 2.0});
    }
    s.codebook_start_deg = 0.0;
    s.codebook_stop_deg = 60.0;
    s.codebook_step_deg = 2.5;
    return s;
}

Scenario gammage_preset() {
    Scenario s;
    s.name = "gammage";
    // Concrete wall: 20 m long, 2 m thick, 5 m tall.
    Blocker wall;
    wall.center = {0.0, 0.0, 2.5};
    wall.half_extents = {10.0, 1.0, 2.5};
    s.blockers.push_back(wall);

    // Aimed at the RIS across the open end of the wall.
    s.bs_pose = Pose3D::make({-2.0, -8.6, 2.0}, {17.0, 10.6, 0.0});
    s.bs_gain_dbi = 19.0;
    s.ris_pose = Pose3D::make({15.0, 2.0, 2.0}, {-1.0, 0.0, 0.0});
    s.ris_geometry = ArrayGeometry::standard16x10();
    s.ue_gain_dbi = 0.0;  // omni-directional mobile receiver

    // 28-point (4 x 7) grid at 1.5 m pitch in the occluded area. The
    // BS-RIS-UE path length stays within 30-40 m across the grid.
    for (int col = 0; col < 4; ++col) {
        for (int row = 0; row < 7; ++row) {
            s.ue_grid.push_back({-1.5 + 1.5 * col, 4.0 + 1.5 * row, 2.0});
        }
    }
    s.codebook_start_deg = -60.0;
    s.codebook_stop_deg = 0.0;
    s.codebook_step_deg = 2.5;
    // The wide bistatic separation puts part of the grid near the 1-bit
    // degeneracy (design phase step ~180 deg/element); dither removes it.
    s.codebook_dither = true;
    return s;
}

}  // namespace ris
