#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ris/codebook.hpp"
#include "ris/geometry.hpp"
#include "ris/signal.hpp"
#include "ris/vec3.hpp"

namespace ris {

/// Rectangular slab obstacle. The orientation axes form a right-handed
/// orthonormal frame; the defaults are world-aligned.
struct Blocker {
    Vec3 center;
    Vec3 half_extents{1.0, 1.0, 1.0};
    Vec3 axis_x{1.0, 0.0, 0.0};
    Vec3 axis_y{0.0, 1.0, 0.0};
    Vec3 axis_z{0.0, 0.0, 1.0};

    void validate() const;
};

/// Exact segment-slab intersection; grazing contact counts as blocked
/// (closed-set convention). Throws on a degenerate segment.
bool los_blocked(const Vec3& a, const Vec3& b, const std::vector<Blocker>& blockers);

/// Raised when a scenario cannot be simulated (e.g. the RIS-BS path is
/// blocked). The CLI maps this to exit code 2.
struct InfeasibleScenario : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// World-coordinate deployment: BS, RIS, UE grid, and obstacles, plus the
/// waveform and link knobs shared by all evaluations.
struct Scenario {
    std::string name = "custom";
    Pose3D bs_pose;
    double bs_gain_dbi = 18.5;
    Pose3D ris_pose;
    ArrayGeometry ris_geometry;
    ElementStateModel states;
    std::vector<Vec3> ue_grid;
    double ue_gain_dbi = 0.0;
    std::vector<Blocker> blockers;
    OfdmConfig ofdm;
    double efficiency = 1.0;
    std::uint64_t seed = 20260826;

    // Codebook design knobs used by the front end.
    double codebook_start_deg = 0.0;
    double codebook_stop_deg = 60.0;
    double codebook_step_deg = 2.5;
    bool codebook_dither = false;

    void validate() const;
    WaveParams wave() const { return wave_from_frequency(ofdm.center_frequency_hz); }

    /// Directions of BS and UE grid as seen from the RIS.
    LocalDirection bs_from_ris() const { return local_direction(ris_pose, bs_pose.position); }

    /// Codebook whose incident set is the BS direction seen from the RIS
    /// and whose reflect set is the configured azimuth sweep.
    Codebook design_codebook() const;
};

struct CoveragePoint {
    Vec3 position;
    bool blocked = false;
    double snr_no_ris_db = 0.0;
    double snr_ris_db = 0.0;
    double improvement_db = 0.0;
    int best_codeword = -1;  // -1 when no RIS path exists
};

struct CoverageMap {
    std::vector<CoveragePoint> points;
};

/// Per grid point: direct-path SNR (zero signal when blocked), beam sweep
/// over the codebook, and combined direct-plus-RIS SNR for the selected
/// codeword. Throws InfeasibleScenario when the BS-RIS path is blocked.
CoverageMap coverage_map(const Scenario& scenario, const Codebook& codebook);

struct CoverageStats {
    double mean_improvement_db = 0.0;
    double max_improvement_db = 0.0;
    int improved_count = 0;
    bool no_blocked_points = false;  // stats fell back to all points
};

/// Improvement statistics over blocked grid points (all points when none
/// are blocked, with the fallback flagged).
CoverageStats coverage_stats(const CoverageMap& map);

/// Setup-1 replica: boresight feed at 5 m, receiver arc at 10 m, 0-60
/// degree codebook in 2.5 degree steps.
Scenario parking_preset();

/// Setup-2 replica: BS occluded by a 5 m tall, 2 m thick wall, 28-point UE
/// grid in the shadowed area, RIS with LoS to both sides.
Scenario gammage_preset();

// Structured scenario files (nested sections for bs/ris/ue_grid/blockers/
// waveform); round-trips exactly.
void save_scenario(const std::string& path, const Scenario& scenario);
Scenario load_scenario(const std::string& path);

}  // namespace ris
