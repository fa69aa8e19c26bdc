#include "ris/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ris {

std::string format_number(double value) {
    if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
    if (std::isnan(value)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::string pattern_cut_csv(const PatternCut& cut) {
    std::ostringstream os;
    os << "angle_deg,af_real,af_imag,gain_db_normalized\n";
    for (std::size_t i = 0; i < cut.angles_deg.size(); ++i) {
        os << format_number(cut.angles_deg[i]) << ',' << format_number(cut.af[i].real())
           << ',' << format_number(cut.af[i].imag()) << ','
           << format_number(cut.gain_db[i]) << '\n';
    }
    return os.str();
}

std::string pattern_metrics_text(const PatternMetrics& m) {
    std::ostringstream os;
    os << "main_lobe_deg " << format_number(m.main_lobe_deg) << '\n';
    os << "peak_gain_db " << format_number(m.peak_gain_db) << '\n';
    os << "hpbw_deg " << format_number(m.hpbw_deg) << '\n';
    os << "hpbw_is_lower_bound " << (m.hpbw_is_lower_bound ? 1 : 0) << '\n';
    os << "sll_db " << format_number(m.sll_db) << '\n';
    os << "grating_lobes " << m.grating_lobes.size() << '\n';
    for (const auto& gl : m.grating_lobes) {
        os << format_number(gl.angle_deg) << ' ' << format_number(gl.level_db) << '\n';
    }
    return os.str();
}

std::string sweep_report_csv(const Codebook& codebook, const SweepResult& result) {
    std::ostringstream os;
    os << "codeword_index,design_theta_deg,design_phi_deg,rx_power_dbm,selected_flag\n";
    for (std::size_t c = 0; c < codebook.codewords.size(); ++c) {
        const auto& cw = codebook.codewords[c];
        os << c << ',' << format_number(cw.design_reflect.theta_deg) << ','
           << format_number(cw.design_reflect.phi_deg) << ','
           << format_number(watts_to_dbm(result.powers_w[c])) << ','
           << (static_cast<int>(c) == result.selected ? 1 : 0) << '\n';
    }
    return os.str();
}

std::string pathloss_csv(const std::vector<PathlossEntry>& table) {
    std::ostringstream os;
    os << "angle_deg,distance_m,received_power_dbm,snr_db\n";
    for (const auto& e : table) {
        os << format_number(e.angle_deg) << ',' << format_number(e.distance_m) << ','
           << format_number(watts_to_dbm(e.received_power_w)) << ','
           << format_number(e.snr_db) << '\n';
    }
    return os.str();
}

std::string coverage_csv(const CoverageMap& map) {
    std::ostringstream os;
    os << "x_m,y_m,blocked,snr_no_ris_db,snr_ris_db,improvement_db,best_codeword_index\n";
    for (const auto& p : map.points) {
        os << format_number(p.position.x) << ',' << format_number(p.position.y) << ','
           << (p.blocked ? 1 : 0) << ',' << format_number(p.snr_no_ris_db) << ','
           << format_number(p.snr_ris_db) << ',' << format_number(p.improvement_db) << ','
           << p.best_codeword << '\n';
    }
    return os.str();
}

std::string coverage_stats_text(const CoverageStats& stats) {
    std::ostringstream os;
    os << "mean_improvement_db " << format_number(stats.mean_improvement_db) << '\n';
    os << "max_improvement_db " << format_number(stats.max_improvement_db) << '\n';
    os << "improved_count " << stats.improved_count << '\n';
    os << "no_blocked_points " << (stats.no_blocked_points ? 1 : 0) << '\n';
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary);
        if (!os) throw std::runtime_error("write_file_atomic: cannot open " + tmp);
        os << content;
        if (!os) throw std::runtime_error("write_file_atomic: write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace ris
