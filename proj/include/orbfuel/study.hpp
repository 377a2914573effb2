#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbfuel/config.hpp"

namespace orbfuel {

enum class OutputFormat { Csv, Json };

/// One architecture's outcome at a fixed mission point.
struct CompareRow {
    Architecture arch = Architecture::A;
    CampaignResult result;
    bool recommended = false;
};

struct CompareTable {
    double mass_ratio = 0.0;
    std::vector<CompareRow> rows;
};

/// Critical mass ratio at one target count.
struct CriticalRatioRow {
    int n = 0;
    std::optional<double> alpha_pair;  ///< requested pair
    std::optional<double> alpha_a_d;   ///< always reported for reference
};

/// One point of a cartesian sweep.
struct SweepRow {
    double mass_ratio = 0.0;
    int n = 0;
    double isp_target = 0.0;
    double isp_servicer = 0.0;
    std::vector<CompareRow> per_arch;  ///< A..D (+E when enabled)
    std::optional<double> alpha_pair;
    std::optional<double> alpha_a_d;
    Architecture recommendation = Architecture::A;
};

/// Evaluate architectures A-D (and E when enabled) at
/// m_s,F = mass_ratio * m_t,I and flag the lightest.
CompareTable cmd_compare(const StudyConfig& config, double mass_ratio);

/// Critical ratios over truncated constellations n = n_lo..n_hi.
std::vector<CriticalRatioRow> cmd_critical_ratio(const StudyConfig& config,
                                                 std::pair<Architecture, Architecture> pair,
                                                 int n_lo, int n_hi);

/// Cartesian sweep over the configured axes, row order fixed by axis order
/// (isp pair, then n, then mass ratio).
std::vector<SweepRow> cmd_sweep(const StudyConfig& config);

/// Architecture E optimization on the config's constellation.
OptimizationReport cmd_optimize(const StudyConfig& config);

// Deterministic renderers: fixed 9-significant-digit floats, no timestamps,
// byte-identical for identical inputs.
std::string render_compare(const CompareTable& table, OutputFormat format);
std::string render_critical_ratio(const std::vector<CriticalRatioRow>& rows, OutputFormat format);
std::string render_sweep(const std::vector<SweepRow>& rows, OutputFormat format);
std::string render_optimize(const OptimizationReport& report, OutputFormat format);

/// %.9g float formatting used across all outputs.
std::string format_number(double value);

/// Write text to path atomically (temp file + rename).
void write_atomic(const std::string& path, const std::string& text);

}  // namespace orbfuel
