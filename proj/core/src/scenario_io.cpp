#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "ris/scenario_json.hpp"

namespace ris {

namespace {

using nlohmann::json;

json to_json(const Vec3& v) { return json{{"x", v.x}, {"y", v.y}, {"z", v.z}}; }

Vec3 vec3_from(const json& j) {
    return {j.at("x").get<double>(), j.at("y").get<double>(), j.at("z").get<double>()};
}

json to_json(const Pose3D& p) {
    return json{{"position", to_json(p.position)},
                {"boresight", to_json(p.boresight)},
                {"x_axis", to_json(p.x_axis)}};
}

Pose3D pose_from(const json& j) {
    return Pose3D::make(vec3_from(j.at("position")), vec3_from(j.at("boresight")),
                        vec3_from(j.at("x_axis")));
}

}  // namespace

json scenario_to_json(const Scenario& s) {
    json j;
    j["name"] = s.name;
    j["seed"] = s.seed;
    j["bs"] = {{"pose", to_json(s.bs_pose)}, {"gain_dbi", s.bs_gain_dbi}};
    j["ris"] = {{"pose", to_json(s.ris_pose)},
                {"geometry",
                 {{"num_x", s.ris_geometry.num_x},
                  {"num_y", s.ris_geometry.num_y},
                  {"spacing_x_m", s.ris_geometry.spacing_x_m},
                  {"spacing_y_m", s.ris_geometry.spacing_y_m}}},
                {"states",
                 {{"state0_re", s.states.state0.real()},
                  {"state0_im", s.states.state0.imag()},
                  {"state1_re", s.states.state1.real()},
                  {"state1_im", s.states.state1.imag()}}},
                {"efficiency", s.efficiency}};
    j["ue_grid"] = {{"gain_dbi", s.ue_gain_dbi}, {"points", json::array()}};
    for (const auto& p : s.ue_grid) j["ue_grid"]["points"].push_back(to_json(p));
    j["blockers"] = json::array();
    for (const auto& b : s.blockers) {
        j["blockers"].push_back({{"center", to_json(b.center)},
                                 {"half_extents", to_json(b.half_extents)},
                                 {"axis_x", to_json(b.axis_x)},
                                 {"axis_y", to_json(b.axis_y)},
                                 {"axis_z", to_json(b.axis_z)}});
    }
    j["waveform"] = {{"num_subcarriers", s.ofdm.num_subcarriers},
                     {"bandwidth_hz", s.ofdm.bandwidth_hz},
                     {"center_frequency_hz", s.ofdm.center_frequency_hz},
                     {"total_power_w", s.ofdm.total_power_w},
                     {"noise_variance_w", s.ofdm.noise_variance_w},
                     {"narrowband", s.ofdm.narrowband}};
    j["codebook"] = {{"start_deg", s.codebook_start_deg},
                     {"stop_deg", s.codebook_stop_deg},
                     {"step_deg", s.codebook_step_deg},
                     {"dither", s.codebook_dither}};
    return j;
}

void save_scenario(const std::string& path, const Scenario& scenario) {
    const json j = scenario_to_json(scenario);
    std::ofstream os(path);
    if (!os) throw std::runtime_error("save_scenario: cannot open " + path);
    os << j.dump(2) << '\n';
    if (!os) throw std::runtime_error("save_scenario: write failed for " + path);
}

Scenario scenario_from_json(const json& j) {
    Scenario s;
    s.name = j.value("name", std::string("custom"));
    s.seed = j.value("seed", s.seed);
    s.bs_pose = pose_from(j.at("bs").at("pose"));
    s.bs_gain_dbi = j.at("bs").at("gain_dbi").get<double>();
    const auto& ris = j.at("ris");
    s.ris_pose = pose_from(ris.at("pose"));
    s.ris_geometry.num_x = ris.at("geometry").at("num_x").get<int>();
    s.ris_geometry.num_y = ris.at("geometry").at("num_y").get<int>();
    s.ris_geometry.spacing_x_m = ris.at("geometry").at("spacing_x_m").get<double>();
    s.ris_geometry.spacing_y_m = ris.at("geometry").at("spacing_y_m").get<double>();
    if (ris.contains("states")) {
        const auto& st = ris.at("states");
        s.states.state0 = {st.at("state0_re").get<double>(), st.at("state0_im").get<double>()};
        s.states.state1 = {st.at("state1_re").get<double>(), st.at("state1_im").get<double>()};
    }
    s.efficiency = ris.value("efficiency", 1.0);
    s.ue_gain_dbi = j.at("ue_grid").at("gain_dbi").get<double>();
    s.ue_grid.clear();
    for (const auto& p : j.at("ue_grid").at("points")) s.ue_grid.push_back(vec3_from(p));
    s.blockers.clear();
    if (j.contains("blockers")) {
        for (const auto& b : j.at("blockers")) {
            Blocker blk;
            blk.center = vec3_from(b.at("center"));
            blk.half_extents = vec3_from(b.at("half_extents"));
            if (b.contains("axis_x")) {
                blk.axis_x = vec3_from(b.at("axis_x"));
                blk.axis_y = vec3_from(b.at("axis_y"));
                blk.axis_z = vec3_from(b.at("axis_z"));
            }
            s.blockers.push_back(blk);
        }
    }
    const auto& w = j.at("waveform");
    s.ofdm.num_subcarriers = w.at("num_subcarriers").get<int>();
    s.ofdm.bandwidth_hz = w.at("bandwidth_hz").get<double>();
    s.ofdm.center_frequency_hz = w.at("center_frequency_hz").get<double>();
    s.ofdm.total_power_w = w.at("total_power_w").get<double>();
    s.ofdm.noise_variance_w = w.at("noise_variance_w").get<double>();
    s.ofdm.narrowband = w.value("narrowband", false);
    if (j.contains("codebook")) {
        const auto& c = j.at("codebook");
        s.codebook_start_deg = c.at("start_deg").get<double>();
        s.codebook_stop_deg = c.at("stop_deg").get<double>();
        s.codebook_step_deg = c.at("step_deg").get<double>();
        s.codebook_dither = c.value("dither", false);
    }
    return s;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("load_scenario: cannot open " + path);
    json j;
    try {
        is >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("load_scenario: " + std::string(e.what()));
    }
    return scenario_from_json(j);
}

}  // namespace ris
