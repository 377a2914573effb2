#pragma once

#include <optional>
#include <vector>

#include "orbfuel/massmodel.hpp"
#include "orbfuel/orbits.hpp"

namespace orbfuel {

/// Servicer plus ordered targets on a common-altitude shell. The list order
/// is the visit order and is never permuted.
struct Constellation {
    CircularOrbit servicer_orbit;
    std::vector<CircularOrbit> targets;
    GravityModel gravity;
    PhasingPolicy phasing;
};

/// Where leg j's refuel happens.
struct RendezvousPoint {
    double inclination = 0.0;   ///< [rad]
    double arg_latitude = 0.0;  ///< [rad]
};

using RendezvousPlan = std::vector<RendezvousPoint>;

/// Maneuver-responsibility assignments. A: servicer does everything;
/// B: targets change inclination, servicer phases; C: the reverse;
/// D: passive servicer depot; E: explicit optimized plan.
enum class Architecture { A, B, C, D, E };

struct ArchitectureId {
    Architecture kind = Architecture::A;
    std::optional<RendezvousPlan> plan;  ///< required for E, ignored otherwise

    ArchitectureId() = default;
    ArchitectureId(Architecture k) : kind(k) {}  // NOLINT: implicit by design
    ArchitectureId(Architecture k, RendezvousPlan p) : kind(k), plan(std::move(p)) {}
};

const char* architecture_name(Architecture arch);

/// Rendezvous plan implied by an architecture's responsibility split.
RendezvousPlan plan_for_architecture(const Constellation& c, const ArchitectureId& arch);

/**
 * Per-leg delta-v budget for a rendezvous plan.
 *
 * The servicer threads through the plan (it waits at each rendezvous until
 * the next leg); each target flies to its rendezvous and back to the slot it
 * would have occupied unperturbed. The return leg brings the servicer home.
 * PerigeeBelowSurface failures are rethrown with the leg index attached.
 */
CampaignBudget build_budget(const Constellation& c, const RendezvousPlan& plan);

/// Step-by-step mass chain, iterated backward leg by leg from the servicer's
/// final mass. Independent route to the closed forms in massmodel; kept as
/// their cross-check oracle.
CampaignResult simulate_masses(const CampaignBudget& budget, const MissionParams& params);

/// plan_for_architecture + build_budget + closed-form mass in one call.
CampaignResult evaluate_architecture(const Constellation& c, const ArchitectureId& arch,
                                     const MissionParams& params);

/// Same, for an explicit plan.
CampaignResult evaluate_plan(const Constellation& c, const RendezvousPlan& plan,
                             const MissionParams& params);

/// First n targets of a constellation (for target-count sweeps).
Constellation truncated(const Constellation& c, int n);

}  // namespace orbfuel
