#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbfuel/campaign.hpp"
#include "orbfuel/optimizer.hpp"

namespace orbfuel {

/// Inclusive mass-ratio axis, stepped from start by step while <= stop.
struct RatioRange {
    double start = 0.5;
    double stop = 6.0;
    double step = 0.5;
};

/// Specific-impulse pair for sensitivity sweeps.
struct IspPair {
    double isp_target = 300.0;    ///< [s]
    double isp_servicer = 300.0;  ///< [s]
};

/// Sweep axes. Absent axes collapse to the base mission values.
struct SweepAxes {
    std::optional<RatioRange> mass_ratio;
    std::optional<std::pair<int, int>> n_range;  ///< inclusive
    std::vector<IspPair> isp_pairs;
    std::pair<Architecture, Architecture> pair{Architecture::A, Architecture::D};
};

/// Everything a study command needs, as loaded from one config file.
/// Angles are radians here; the JSON boundary speaks degrees.
struct StudyConfig {
    Constellation constellation;
    MissionParams mission;
    OptimizerConfig optimizer;
    bool optimizer_enabled = false;  ///< include Architecture E in compare/sweep
    SweepAxes sweeps;
};

/// Parse and validate a config from JSON text. Throws ParseError on malformed
/// JSON and ValidationError naming the offending field otherwise.
StudyConfig parse_config(const std::string& json_text);

/// parse_config on a file's contents.
StudyConfig load_config(const std::string& path);

/// Inverse of parse_config: JSON text whose reload is semantically identical.
std::string serialize_config(const StudyConfig& config);

/// "A-D" style pair spec. The left side must be the non-cooperative
/// architecture A; the right one of B, C, D.
std::pair<Architecture, Architecture> parse_architecture_pair(const std::string& text);

}  // namespace orbfuel
