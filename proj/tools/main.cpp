#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "orbfuel/study.hpp"

namespace {

constexpr int kExitConfigError = 2;
constexpr int kExitInfeasibleGeometry = 3;
constexpr int kExitNoCrossover = 4;

struct CommonOptions {
    std::string config_path;
    std::string format = "csv";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "study config file (JSON)")->required();
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opts.out_path, "write output to this file (atomic) instead of stdout");
}

orbfuel::OutputFormat format_of(const CommonOptions& opts) {
    return opts.format == "json" ? orbfuel::OutputFormat::Json : orbfuel::OutputFormat::Csv;
}

void emit(const CommonOptions& opts, const std::string& text) {
    if (opts.out_path.empty()) {
        std::cout << text;
    } else {
        orbfuel::write_atomic(opts.out_path, text);
    }
}

std::pair<int, int> parse_n_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw orbfuel::ValidationError("--n-range expects the form LO..HI, got '" + text + "'");
    }
    try {
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw orbfuel::ValidationError("--n-range expects integers, got '" + text + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trade studies for multi-target on-orbit refueling architectures"};
    app.require_subcommand(1);

    CommonOptions compare_opts;
    double mass_ratio = 0.0;
    CLI::App* compare = app.add_subcommand(
        "compare", "Evaluate architectures A-D (and E when enabled) at one mass ratio");
    add_common(compare, compare_opts);
    CLI::Option* ratio_opt =
        compare->add_option("--mass-ratio", mass_ratio, "servicer dry mass over target mass");

    CommonOptions ratio_opts;
    std::string n_range_text;
    std::string pair_text;
    CLI::App* critical = app.add_subcommand(
        "critical-ratio", "Critical mass ratio versus the number of serviced targets");
    add_common(critical, ratio_opts);
    critical->add_option("--n-range", n_range_text, "target counts to evaluate, e.g. 1..12");
    critical->add_option("--pair", pair_text, "architecture pair, e.g. A-D");

    CommonOptions sweep_opts;
    CLI::App* sweep = app.add_subcommand("sweep", "Cartesian sweep over the configured axes");
    add_common(sweep, sweep_opts);

    CommonOptions optimize_opts;
    std::optional<std::uint64_t> seed_override;
    std::optional<int> starts_override;
    CLI::App* optimize =
        app.add_subcommand("optimize", "Optimize the rendezvous plan (Architecture E)");
    add_common(optimize, optimize_opts);
    optimize->add_option("--seed", seed_override, "override the optimizer RNG seed");
    optimize->add_option("--starts", starts_override, "override the number of starts");

    CommonOptions validate_opts;
    CLI::App* validate =
        app.add_subcommand("validate", "Validate a config and print its normalized form");
    add_common(validate, validate_opts);

    try {
        app.parse(argc, argv);

        if (compare->parsed()) {
            orbfuel::StudyConfig config = orbfuel::load_config(compare_opts.config_path);
            double ratio = mass_ratio;
            if (!*ratio_opt) {
                ratio = config.mission.servicer_final_mass / config.mission.target_initial_mass;
            }
            const orbfuel::CompareTable table = orbfuel::cmd_compare(config, ratio);
            emit(compare_opts, orbfuel::render_compare(table, format_of(compare_opts)));
        } else if (critical->parsed()) {
            orbfuel::StudyConfig config = orbfuel::load_config(ratio_opts.config_path);
            auto pair = config.sweeps.pair;
            if (!pair_text.empty()) pair = orbfuel::parse_architecture_pair(pair_text);
            int n_lo = 1;
            int n_hi = static_cast<int>(config.constellation.targets.size());
            if (config.sweeps.n_range) {
                n_lo = config.sweeps.n_range->first;
                n_hi = config.sweeps.n_range->second;
            }
            if (!n_range_text.empty()) std::tie(n_lo, n_hi) = parse_n_range(n_range_text);
            const auto rows = orbfuel::cmd_critical_ratio(config, pair, n_lo, n_hi);
            emit(ratio_opts, orbfuel::render_critical_ratio(rows, format_of(ratio_opts)));
            bool any = false;
            for (const auto& row : rows) any = any || row.alpha_pair.has_value();
            if (!any) return kExitNoCrossover;
        } else if (sweep->parsed()) {
            orbfuel::StudyConfig config = orbfuel::load_config(sweep_opts.config_path);
            const auto rows = orbfuel::cmd_sweep(config);
            emit(sweep_opts, orbfuel::render_sweep(rows, format_of(sweep_opts)));
        } else if (optimize->parsed()) {
            orbfuel::StudyConfig config = orbfuel::load_config(optimize_opts.config_path);
            if (seed_override) config.optimizer.rng_seed = *seed_override;
            if (starts_override) config.optimizer.num_starts = *starts_override;
            const orbfuel::OptimizationReport report = orbfuel::cmd_optimize(config);
            emit(optimize_opts, orbfuel::render_optimize(report, format_of(optimize_opts)));
        } else if (validate->parsed()) {
            orbfuel::StudyConfig config = orbfuel::load_config(validate_opts.config_path);
            emit(validate_opts, orbfuel::serialize_config(config));
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitConfigError;
    } catch (const orbfuel::ParseError& e) {
        std::cerr << "config parse error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const orbfuel::ValidationError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const orbfuel::PerigeeBelowSurface& e) {
        std::cerr << "infeasible geometry: " << e.what() << '\n';
        return kExitInfeasibleGeometry;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
