#pragma once

#include <string>

#include "ris/codebook.hpp"
#include "ris/link.hpp"
#include "ris/pattern.hpp"
#include "ris/scenario.hpp"
#include "ris/signal.hpp"

namespace ris {

/// Fixed 6-significant-digit number formatting used by every CSV export so
/// outputs are byte-stable.
std::string format_number(double value);

/// Columns: angle_deg, af_real, af_imag, gain_db_normalized.
std::string pattern_cut_csv(const PatternCut& cut);

/// Structured text record of the extracted pattern metrics.
std::string pattern_metrics_text(const PatternMetrics& metrics);

/// Columns: codeword_index, design_theta_deg, design_phi_deg, rx_power_dbm,
/// selected_flag.
std::string sweep_report_csv(const Codebook& codebook, const SweepResult& result);

/// Columns: angle_deg, distance_m, received_power_dbm, snr_db.
std::string pathloss_csv(const std::vector<PathlossEntry>& table);

/// Columns: x_m, y_m, blocked, snr_no_ris_db, snr_ris_db, improvement_db,
/// best_codeword_index.
std::string coverage_csv(const CoverageMap& map);

std::string coverage_stats_text(const CoverageStats& stats);

/// Writes atomically: the content lands in a temporary file first and is
/// renamed into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace ris
