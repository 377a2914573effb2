#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "orbfuel/campaign.hpp"

namespace orbfuel {

/// Multistart pattern-search settings. Bounds left unset are derived from the
/// constellation (min/max inclination over servicer and targets); argument of
/// latitude is always free on [0, 2pi).
struct OptimizerConfig {
    int num_starts = 44;
    std::uint64_t rng_seed = 0;
    int max_local_iterations = 200;       ///< full coordinate sweeps per start
    double convergence_tolerance = 1e-6;  ///< [kg]
    std::optional<std::pair<double, double>> bounds_inclination;  ///< [rad]
};

struct StartRecord {
    int start_index = 0;
    double final_objective = 0.0;  ///< [kg]
};

struct OptimizationReport {
    RendezvousPlan best_plan;
    CampaignResult best_result;
    /// Set when every best-plan coordinate lies within 1e-6 rad of one of the
    /// four canonical plans.
    std::optional<Architecture> matched_architecture;
    std::vector<StartRecord> per_start_history;
    std::uint64_t seed = 0;  ///< echo of the RNG seed actually used
};

using PlanObjective = std::function<double(const RendezvousPlan&)>;

/**
 * Coordinate-wise adaptive-step pattern search from one start plan.
 *
 * Each sweep perturbs every coordinate by +/-step and keeps improvements;
 * a sweep with no acceptance halves the step. Stops once the objective
 * changes seen in a sweep fall below cfg.convergence_tolerance or after
 * cfg.max_local_iterations sweeps. u coordinates wrap modulo 2pi, i
 * coordinates clamp to cfg.bounds_inclination (which must be set here).
 */
std::pair<RendezvousPlan, double> local_refine(const RendezvousPlan& start,
                                               const PlanObjective& objective,
                                               const OptimizerConfig& cfg);

/**
 * Architecture E: minimize the cooperative servicer initial mass over the 2n
 * rendezvous variables. The first four starts are the plans of Architectures
 * A-D (so the optimum can never lose to them); the rest are uniform random
 * plans from a seeded generator. Deterministic for a fixed seed; ties go to
 * the lowest start index. Plans whose budget is geometrically infeasible get
 * an infinite objective rather than aborting the search.
 */
OptimizationReport optimize_plan(const Constellation& c, const MissionParams& params,
                                 const OptimizerConfig& cfg);

}  // namespace orbfuel
