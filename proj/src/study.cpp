#include "orbfuel/study.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace orbfuel {

namespace {

using nlohmann::json;

constexpr double kRadToDeg = 180.0 / 3.14159265358979323847;

std::vector<Architecture> compare_set(const StudyConfig& config) {
    std::vector<Architecture> archs{Architecture::A, Architecture::B, Architecture::C,
                                    Architecture::D};
    if (config.optimizer_enabled) archs.push_back(Architecture::E);
    return archs;
}

MissionParams params_at(const StudyConfig& config, double mass_ratio, int n) {
    MissionParams p = config.mission;
    p.n = n;
    p.servicer_final_mass = mass_ratio * p.target_initial_mass;
    return p;
}

std::size_t argmin_initial_mass(const std::vector<CompareRow>& rows) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].result.servicer_initial_mass < rows[best].result.servicer_initial_mass) {
            best = i;
        }
    }
    return best;
}

std::vector<CompareRow> evaluate_all(const StudyConfig& config, const Constellation& c,
                                     const MissionParams& params) {
    std::vector<CompareRow> rows;
    for (Architecture arch : compare_set(config)) {
        CompareRow row;
        row.arch = arch;
        if (arch == Architecture::E) {
            row.result = optimize_plan(c, params, config.optimizer).best_result;
        } else {
            row.result = evaluate_architecture(c, arch, params);
        }
        rows.push_back(std::move(row));
    }
    rows[argmin_initial_mass(rows)].recommended = true;
    return rows;
}

std::optional<double> pair_alpha(const Constellation& c, const MissionParams& params,
                                 std::pair<Architecture, Architecture> pair) {
    const CampaignBudget noncoop = build_budget(c, plan_for_architecture(c, pair.first));
    const CampaignBudget coop = build_budget(c, plan_for_architecture(c, pair.second));
    return critical_mass_ratio(coop, noncoop, params);
}

std::optional<double> ad_alpha(const Constellation& c, const MissionParams& params) {
    const CampaignBudget noncoop = build_budget(c, plan_for_architecture(c, Architecture::A));
    const CampaignBudget coop = build_budget(c, plan_for_architecture(c, Architecture::D));
    return critical_mass_ratio_a_d(noncoop, coop, params);
}

std::string csv_optional(const std::optional<double>& v) {
    return v ? format_number(*v) : std::string();
}

json json_optional(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

void append_result_csv(std::ostringstream& out, const CampaignResult& r) {
    out << format_number(r.servicer_initial_mass) << ',' << format_number(r.variable_fuel_mass)
        << ',' << format_number(r.servicer_fuel_consumed) << ','
        << format_number(r.target_fuel_consumed);
}

json result_to_json(const CampaignResult& r) {
    return json{{"servicer_initial_mass_kg", r.servicer_initial_mass},
                {"variable_fuel_mass_kg", r.variable_fuel_mass},
                {"servicer_fuel_consumed_kg", r.servicer_fuel_consumed},
                {"target_fuel_consumed_kg", r.target_fuel_consumed},
                {"per_leg_refuel_mass_kg", r.per_leg_refuel_mass}};
}

}  // namespace

std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

CompareTable cmd_compare(const StudyConfig& config, double mass_ratio) {
    if (mass_ratio <= 0.0) throw ValidationError("mass ratio must be > 0");
    CompareTable table;
    table.mass_ratio = mass_ratio;
    const int n = static_cast<int>(config.constellation.targets.size());
    table.rows = evaluate_all(config, config.constellation, params_at(config, mass_ratio, n));
    return table;
}

std::vector<CriticalRatioRow> cmd_critical_ratio(const StudyConfig& config,
                                                 std::pair<Architecture, Architecture> pair,
                                                 int n_lo, int n_hi) {
    if (n_lo < 1 || n_hi < n_lo) throw ValidationError("n range must satisfy 1 <= lo <= hi");
    if (n_hi > static_cast<int>(config.constellation.targets.size())) {
        throw ValidationError("n range exceeds the configured target count");
    }
    std::vector<CriticalRatioRow> rows;
    for (int n = n_lo; n <= n_hi; ++n) {
        const Constellation c = truncated(config.constellation, n);
        MissionParams params = config.mission;
        params.n = n;
        CriticalRatioRow row;
        row.n = n;
        row.alpha_pair = pair_alpha(c, params, pair);
        row.alpha_a_d = ad_alpha(c, params);
        rows.push_back(row);
    }
    return rows;
}

std::vector<SweepRow> cmd_sweep(const StudyConfig& config) {
    std::vector<double> ratios;
    if (config.sweeps.mass_ratio) {
        const RatioRange& r = *config.sweeps.mass_ratio;
        for (int i = 0;; ++i) {
            const double value = r.start + i * r.step;
            if (value > r.stop + 1e-12) break;
            ratios.push_back(value);
        }
    } else {
        ratios.push_back(config.mission.servicer_final_mass / config.mission.target_initial_mass);
    }
    if (ratios.empty()) throw ValidationError("mass ratio axis is empty");

    std::vector<int> ns;
    if (config.sweeps.n_range) {
        for (int n = config.sweeps.n_range->first; n <= config.sweeps.n_range->second; ++n) {
            ns.push_back(n);
        }
    } else {
        ns.push_back(static_cast<int>(config.constellation.targets.size()));
    }

    std::vector<IspPair> isps = config.sweeps.isp_pairs;
    if (isps.empty()) isps.push_back({config.mission.isp_target, config.mission.isp_servicer});

    std::vector<SweepRow> rows;
    for (const IspPair& isp : isps) {
        for (int n : ns) {
            const Constellation c = truncated(config.constellation, n);
            for (double ratio : ratios) {
                MissionParams params = params_at(config, ratio, n);
                params.isp_target = isp.isp_target;
                params.isp_servicer = isp.isp_servicer;
                SweepRow row;
                row.mass_ratio = ratio;
                row.n = n;
                row.isp_target = isp.isp_target;
                row.isp_servicer = isp.isp_servicer;
                row.per_arch = evaluate_all(config, c, params);
                row.alpha_pair = pair_alpha(c, params, config.sweeps.pair);
                row.alpha_a_d = ad_alpha(c, params);
                row.recommendation = row.per_arch[argmin_initial_mass(row.per_arch)].arch;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

OptimizationReport cmd_optimize(const StudyConfig& config) {
    MissionParams params = config.mission;
    params.n = static_cast<int>(config.constellation.targets.size());
    return optimize_plan(config.constellation, params, config.optimizer);
}

std::string render_compare(const CompareTable& table, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "architecture,mass_ratio,initial_mass_kg,variable_fuel_kg,"
               "servicer_fuel_kg,target_fuel_kg,recommended\n";
        for (const CompareRow& row : table.rows) {
            out << architecture_name(row.arch) << ',' << format_number(table.mass_ratio) << ',';
            append_result_csv(out, row.result);
            out << ',' << (row.recommended ? 1 : 0) << '\n';
        }
        return out.str();
    }
    json rows = json::array();
    for (const CompareRow& row : table.rows) {
        json r = result_to_json(row.result);
        r["architecture"] = architecture_name(row.arch);
        r["recommended"] = row.recommended;
        rows.push_back(std::move(r));
    }
    return json{{"mass_ratio", table.mass_ratio}, {"architectures", rows}}.dump(2) + "\n";
}

std::string render_critical_ratio(const std::vector<CriticalRatioRow>& rows, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "n,alpha_pair,alpha_a_d,no_crossover\n";
        for (const CriticalRatioRow& row : rows) {
            out << row.n << ',' << csv_optional(row.alpha_pair) << ','
                << csv_optional(row.alpha_a_d) << ',' << (row.alpha_pair ? 0 : 1) << '\n';
        }
        return out.str();
    }
    json arr = json::array();
    for (const CriticalRatioRow& row : rows) {
        arr.push_back({{"n", row.n},
                       {"alpha_pair", json_optional(row.alpha_pair)},
                       {"alpha_a_d", json_optional(row.alpha_a_d)},
                       {"no_crossover", !row.alpha_pair}});
    }
    return json{{"rows", arr}}.dump(2) + "\n";
}

std::string render_sweep(const std::vector<SweepRow>& rows, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "mass_ratio,n,isp_target_s,isp_servicer_s";
        const std::vector<CompareRow>* first = rows.empty() ? nullptr : &rows.front().per_arch;
        if (first) {
            for (const CompareRow& col : *first) {
                const char* name = architecture_name(col.arch);
                out << ",initial_" << name << "_kg,fuel_" << name << "_kg";
            }
        }
        out << ",alpha_pair,alpha_a_d,recommendation\n";
        for (const SweepRow& row : rows) {
            out << format_number(row.mass_ratio) << ',' << row.n << ','
                << format_number(row.isp_target) << ',' << format_number(row.isp_servicer);
            for (const CompareRow& col : row.per_arch) {
                out << ',' << format_number(col.result.servicer_initial_mass) << ','
                    << format_number(col.result.variable_fuel_mass);
            }
            out << ',' << csv_optional(row.alpha_pair) << ',' << csv_optional(row.alpha_a_d) << ','
                << architecture_name(row.recommendation) << '\n';
        }
        return out.str();
    }
    json arr = json::array();
    for (const SweepRow& row : rows) {
        json per_arch = json::object();
        for (const CompareRow& col : row.per_arch) {
            per_arch[architecture_name(col.arch)] = result_to_json(col.result);
        }
        arr.push_back({{"mass_ratio", row.mass_ratio},
                       {"n", row.n},
                       {"isp_target_s", row.isp_target},
                       {"isp_servicer_s", row.isp_servicer},
                       {"architectures", per_arch},
                       {"alpha_pair", json_optional(row.alpha_pair)},
                       {"alpha_a_d", json_optional(row.alpha_a_d)},
                       {"recommendation", architecture_name(row.recommendation)}});
    }
    return json{{"rows", arr}}.dump(2) + "\n";
}

std::string render_optimize(const OptimizationReport& report, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        std::ostringstream out;
        out << "target,rendezvous_inclination_deg,rendezvous_arg_latitude_deg\n";
        for (std::size_t j = 0; j < report.best_plan.size(); ++j) {
            out << (j + 1) << ',' << format_number(report.best_plan[j].inclination * kRadToDeg)
                << ',' << format_number(report.best_plan[j].arg_latitude * kRadToDeg) << '\n';
        }
        out << "objective_kg," << format_number(report.best_result.servicer_initial_mass) << ",\n";
        out << "matched_architecture,"
            << (report.matched_architecture ? architecture_name(*report.matched_architecture) : "")
            << ",\n";
        out << "seed," << report.seed << ",\n";
        return out.str();
    }
    json plan = json::array();
    for (const RendezvousPoint& p : report.best_plan) {
        plan.push_back({{"rendezvous_inclination_deg", p.inclination * kRadToDeg},
                        {"rendezvous_arg_latitude_deg", p.arg_latitude * kRadToDeg}});
    }
    json history = json::array();
    for (const StartRecord& rec : report.per_start_history) {
        history.push_back({{"start", rec.start_index}, {"objective_kg", rec.final_objective}});
    }
    json matched = report.matched_architecture
                       ? json(architecture_name(*report.matched_architecture))
                       : json(nullptr);
    return json{{"best_plan", plan},
                {"best_result", result_to_json(report.best_result)},
                {"matched_architecture", matched},
                {"per_start_history", history},
                {"seed", report.seed}}
               .dump(2) +
           "\n";
}

void write_atomic(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open '" + tmp + "' for writing");
        out << text;
        out.flush();
        if (!out) throw std::runtime_error("short write to '" + tmp + "'");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw std::runtime_error("cannot rename '" + tmp + "' to '" + path + "'");
    }
}

}  // namespace orbfuel
