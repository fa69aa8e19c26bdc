// ris-sim: command-line front end for the RIS link simulator.
//
// Subcommands: codebook, pattern, sweep, linkbudget, coverage, validate.
// Exit codes: 0 success, 1 bad config, 2 infeasible scenario.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ris/codebook.hpp"
#include "ris/io.hpp"
#include "ris/link.hpp"
#include "ris/pattern.hpp"
#include "ris/scenario.hpp"
#include "ris/scenario_json.hpp"
#include "ris/signal.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";
constexpr const char* kOutDirEnv = "RIS_SIM_OUT";

struct Options {
    std::string config_path;
    std::string out_dir;
    std::string preset;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> overrides;
};

struct BadConfig : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--config", opt.config_path, "Scenario file (JSON)");
    cmd->add_option("--out", opt.out_dir, "Output directory");
    cmd->add_option("--seed", opt.seed, "Override the scenario seed");
    cmd->add_option("--set", opt.overrides, "Override key=value (repeatable)");
    cmd->add_option("--preset", opt.preset, "Built-in scenario")
        ->check(CLI::IsMember({"parking", "gammage"}));
}

std::string default_out_dir() {
    const char* env = std::getenv(kOutDirEnv);
    return env && *env ? env : ".";
}

// Splits "a.b.c=value" into a dotted path and a raw value string.
std::pair<std::vector<std::string>, std::string> split_override(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
        throw BadConfig("override must be key=value: " + spec);
    std::vector<std::string> path;
    std::stringstream keys(spec.substr(0, eq));
    std::string token;
    while (std::getline(keys, token, '.')) {
        if (token.empty()) throw BadConfig("empty key segment in: " + spec);
        path.push_back(token);
    }
    return {path, spec.substr(eq + 1)};
}

json parse_value(const std::string& raw) {
    json v = json::parse(raw, nullptr, false);
    if (v.is_discarded()) return json(raw);  // fall back to a plain string
    return v;
}

// Applies one override to the scenario JSON. Paths must refer to existing
// fields so typos fail loudly instead of silently adding keys.
void apply_override(json& root, const std::vector<std::string>& path, const json& value,
                    const std::string& spec) {
    json* node = &root;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const std::string& key = path[i];
        if (node->is_array()) {
            const std::size_t idx = std::stoul(key);
            if (idx >= node->size()) throw BadConfig("index out of range in: " + spec);
            node = &(*node)[idx];
        } else if (node->is_object() && node->contains(key)) {
            node = &(*node)[key];
        } else {
            throw BadConfig("unknown config key in: " + spec);
        }
    }
    const std::string& leaf = path.back();
    if (node->is_array()) {
        const std::size_t idx = std::stoul(leaf);
        if (idx >= node->size()) throw BadConfig("index out of range in: " + spec);
        (*node)[idx] = value;
    } else if (node->is_object() && node->contains(leaf)) {
        (*node)[leaf] = value;
    } else {
        throw BadConfig("unknown config key in: " + spec);
    }
}

// Command-local overrides (prefix `cmd.`) are consumed here; everything
// else is applied to the scenario JSON.
struct ResolvedRun {
    ris::Scenario scenario;
    json scenario_json;
    std::map<std::string, std::string> local;  // command-scoped knobs
};

ResolvedRun resolve(const Options& opt, const std::string& command) {
    ris::Scenario base;
    if (!opt.config_path.empty()) {
        base = ris::load_scenario(opt.config_path);
    } else if (opt.preset == "gammage") {
        base = ris::gammage_preset();
    } else {
        base = ris::parking_preset();  // default when nothing else is given
    }

    ResolvedRun run;
    run.scenario_json = ris::scenario_to_json(base);
    const std::string prefix = command + ".";
    for (const auto& spec : opt.overrides) {
        auto [path, raw] = split_override(spec);
        if (path.size() == 2 && path.front() + "." == prefix) {
            run.local[path.back()] = raw;
            continue;
        }
        apply_override(run.scenario_json, path, parse_value(raw), spec);
    }
    try {
        run.scenario = ris::scenario_from_json(run.scenario_json);
    } catch (const json::exception& e) {
        throw BadConfig(std::string("bad scenario value: ") + e.what());
    }
    if (opt.seed) run.scenario.seed = *opt.seed;
    run.scenario_json = ris::scenario_to_json(run.scenario);
    return run;
}

double local_number(const ResolvedRun& run, const std::string& key, double fallback) {
    const auto it = run.local.find(key);
    if (it == run.local.end()) return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument(it->second);
        return v;
    } catch (const std::exception&) {
        throw BadConfig("expected a number for " + key + ": " + it->second);
    }
}

std::string local_string(const ResolvedRun& run, const std::string& key,
                         const std::string& fallback) {
    const auto it = run.local.find(key);
    return it == run.local.end() ? fallback : it->second;
}

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (const unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

class Emitter {
  public:
    Emitter(std::string out_dir, std::string command, const ResolvedRun& run)
        : dir_(std::move(out_dir)), command_(std::move(command)), run_(&run) {
        std::filesystem::create_directories(dir_);
    }

    std::string path(const std::string& name) const { return dir_ + "/" + name; }

    void write(const std::string& name, const std::string& content) {
        ris::write_file_atomic(path(name), content);
        outputs_.push_back(name);
    }

    // The manifest pins everything needed to reproduce the run: the tool
    // version, the seed, and a hash of the fully resolved configuration.
    void finish() {
        std::string hashed = command_ + "\n" + run_->scenario_json.dump();
        for (const auto& [k, v] : run_->local) hashed += "\n" + k + "=" + v;
        json manifest{{"tool", "ris-sim"},
                      {"version", kVersion},
                      {"command", command_},
                      {"seed", run_->scenario.seed},
                      {"config_hash", hex64(fnv1a(hashed))},
                      {"outputs", outputs_}};
        ris::write_file_atomic(path("manifest.json"), manifest.dump(2) + "\n");
    }

  private:
    std::string dir_;
    std::string command_;
    const ResolvedRun* run_;
    std::vector<std::string> outputs_;
};

// BS position expressed in the RIS local frame (x, y in-plane, z broadside).
ris::Vec3 bs_in_ris_frame(const ris::Scenario& s) {
    const ris::Vec3 d = s.bs_pose.position - s.ris_pose.position;
    return {d.dot(s.ris_pose.x_axis), d.dot(s.ris_pose.y_axis()), d.dot(s.ris_pose.boresight)};
}

int run_codebook(const Options& opt) {
    ResolvedRun run = resolve(opt, "codebook");
    run.scenario.validate();
    Emitter out(opt.out_dir, "codebook", run);
    const ris::CodebookFile file{run.scenario.wave(), run.scenario.ris_geometry,
                                 run.scenario.design_codebook()};
    ris::save_codebook(out.path("codebook.txt"), file);
    out.write("scenario.json", run.scenario_json.dump(2) + "\n");
    out.finish();
    return 0;
}

int run_pattern(const Options& opt) {
    ResolvedRun run = resolve(opt, "pattern");
    run.scenario.validate();
    Emitter out(opt.out_dir, "pattern", run);
    const ris::Scenario& s = run.scenario;
    const ris::WaveParams wave = s.wave();

    const double theta = local_number(run, "theta_deg", 30.0);
    const double phi = local_number(run, "phi_deg", 0.0);
    const double step = local_number(run, "step_deg", 0.25);
    const double lo = local_number(run, "lo_deg", -90.0);
    const double hi = local_number(run, "hi_deg", 90.0);
    const std::string plane_name = local_string(run, "plane", "azimuth");
    const std::string source = local_string(run, "illumination", "feed");
    if (plane_name != "azimuth" && plane_name != "elevation")
        throw BadConfig("pattern.plane must be azimuth or elevation");
    if (source != "feed" && source != "plane")
        throw BadConfig("pattern.illumination must be feed or plane");
    const ris::CutPlane plane =
        plane_name == "azimuth" ? ris::CutPlane::azimuth : ris::CutPlane::elevation;

    const ris::LocalDirection incident = s.bs_from_ris();
    std::optional<std::uint64_t> dither;
    if (s.codebook_dither) dither = s.seed;
    const ris::Codeword codeword = ris::build_codeword(
        s.ris_geometry, wave, incident.dir, ris::Direction{theta, phi}, dither);

    const ris::Illumination illum =
        source == "feed"
            ? ris::feed_illumination(s.ris_geometry, wave, bs_in_ris_frame(s), s.bs_gain_dbi)
            : ris::plane_wave_illumination(s.ris_geometry, wave, incident.dir);

    if (hi <= lo) throw BadConfig("pattern.hi_deg must exceed pattern.lo_deg");
    const auto grid = ris::angle_grid(lo, hi, step);
    const ris::PatternCut cut =
        ris::pattern_cut(s.ris_geometry, wave, codeword, illum, plane, grid, s.states);
    out.write("pattern.csv", ris::pattern_cut_csv(cut));
    out.write("metrics.txt", ris::pattern_metrics_text(ris::analyze_pattern(cut)));
    out.finish();
    return 0;
}

int run_sweep(const Options& opt) {
    ResolvedRun run = resolve(opt, "sweep");
    run.scenario.validate();
    Emitter out(opt.out_dir, "sweep", run);
    const ris::Scenario& s = run.scenario;

    const int ue_index = static_cast<int>(local_number(run, "ue_index", 0.0));
    if (ue_index < 0 || ue_index >= static_cast<int>(s.ue_grid.size()))
        throw BadConfig("sweep.ue_index out of range");

    const ris::Codebook codebook = s.design_codebook();
    const ris::Vec3 ue = s.ue_grid[ue_index];
    ris::LinkEnds ends{s.bs_pose.position, s.bs_gain_dbi, ue, s.ue_gain_dbi, s.efficiency};
    ends.bs_boresight = s.bs_pose.boresight;
    const bool direct_blocked = ris::los_blocked(s.bs_pose.position, ue, s.blockers);
    const ris::ChannelSet channels =
        ris::synthesize_channels(s.ris_geometry, s.ris_pose, ends, s.ofdm, direct_blocked);
    const ris::SweepResult result =
        ris::beam_sweep(codebook, channels, s.ofdm, s.seed, s.states);
    out.write("sweep.csv", ris::sweep_report_csv(codebook, result));
    out.finish();
    return 0;
}

std::vector<double> parse_list(const std::string& raw, const std::string& key) {
    std::vector<double> values;
    std::stringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            values.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw BadConfig("expected comma-separated numbers for " + key + ": " + raw);
        }
    }
    if (values.empty()) throw BadConfig("empty list for " + key);
    return values;
}

int run_linkbudget(const Options& opt) {
    ResolvedRun run = resolve(opt, "linkbudget");
    run.scenario.validate();
    Emitter out(opt.out_dir, "linkbudget", run);
    const ris::Scenario& s = run.scenario;

    ris::LinkParams params;
    params.tx_power_w = s.ofdm.total_power_w;
    params.bs_gain_dbi = s.bs_gain_dbi;
    params.ue_gain_dbi = s.ue_gain_dbi;
    params.efficiency = s.efficiency;
    params.area_m2 = s.ris_geometry.area();
    params.noise_power_w = s.ofdm.noise_variance_w;
    const ris::LocalDirection bs = s.bs_from_ris();
    params.bs_ris_distance_m = bs.range_m;
    params.theta_i_deg = bs.dir.theta_deg;

    std::vector<double> distances;
    const double lo = local_number(run, "distance_min_m", 1.0);
    const double hi = local_number(run, "distance_max_m", 30.0);
    const double step = local_number(run, "distance_step_m", 1.0);
    if (step <= 0.0 || hi < lo) throw BadConfig("bad linkbudget distance range");
    for (double d = lo; d <= hi + 1e-9; d += step) distances.push_back(d);
    const std::vector<double> angles =
        parse_list(local_string(run, "angles_deg", "0,15,30,45,60"), "linkbudget.angles_deg");

    const auto table = ris::pathloss_curve(params, s.wave(), distances, angles);
    out.write("pathloss.csv", ris::pathloss_csv(table));
    out.finish();
    return 0;
}

int run_coverage(const Options& opt) {
    ResolvedRun run = resolve(opt, "coverage");
    run.scenario.validate();
    Emitter out(opt.out_dir, "coverage", run);
    const ris::Codebook codebook = run.scenario.design_codebook();
    const ris::CoverageMap map = ris::coverage_map(run.scenario, codebook);
    out.write("coverage.csv", ris::coverage_csv(map));
    out.write("stats.txt", ris::coverage_stats_text(ris::coverage_stats(map)));
    out.finish();
    return 0;
}

int run_validate(const Options& opt) {
    std::vector<std::string> diagnostics;
    bool infeasible = false;
    try {
        ResolvedRun run = resolve(opt, "validate");
        try {
            run.scenario.validate();
        } catch (const ris::InfeasibleScenario& e) {
            infeasible = true;
            diagnostics.push_back(std::string("infeasible: ") + e.what());
        } catch (const std::exception& e) {
            diagnostics.push_back(e.what());
        }
    } catch (const std::exception& e) {
        diagnostics.push_back(e.what());
    }
    if (diagnostics.empty()) {
        std::cout << "ok\n";
        return 0;
    }
    for (const auto& d : diagnostics) std::cout << d << '\n';
    return infeasible ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"RIS link simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Options opt;
    opt.out_dir = default_out_dir();

    int (*handler)(const Options&) = nullptr;
    const std::pair<const char*, int (*)(const Options&)> commands[] = {
        {"codebook", run_codebook},   {"pattern", run_pattern},
        {"sweep", run_sweep},         {"linkbudget", run_linkbudget},
        {"coverage", run_coverage},   {"validate", run_validate},
    };
    for (const auto& [name, fn] : commands) {
        CLI::App* sub = app.add_subcommand(name);
        add_common(sub, opt);
        sub->callback([&handler, fn] { handler = fn; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // exit 1 for any usage error
    }

    try {
        return handler(opt);
    } catch (const ris::InfeasibleScenario& e) {
        std::cerr << "error: infeasible scenario: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
