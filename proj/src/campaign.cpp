#include "orbfuel/campaign.hpp"

#include <cmath>
#include <string>

namespace orbfuel {

const char* architecture_name(Architecture arch) {
    switch (arch) {
        case Architecture::A: return "A";
        case Architecture::B: return "B";
        case Architecture::C: return "C";
        case Architecture::D: return "D";
        case Architecture::E: return "E";
    }
    return "?";
}

RendezvousPlan plan_for_architecture(const Constellation& c, const ArchitectureId& arch) {
    RendezvousPlan plan;
    plan.reserve(c.targets.size());
    switch (arch.kind) {
        case Architecture::A:
            for (const CircularOrbit& t : c.targets)
                plan.push_back({t.inclination, t.arg_latitude});
            break;
        case Architecture::B:
            for (const CircularOrbit& t : c.targets)
                plan.push_back({c.servicer_orbit.inclination, t.arg_latitude});
            break;
        case Architecture::C:
            for (const CircularOrbit& t : c.targets)
                plan.push_back({t.inclination, c.servicer_orbit.arg_latitude});
            break;
        case Architecture::D:
            for (std::size_t j = 0; j < c.targets.size(); ++j)
                plan.push_back({c.servicer_orbit.inclination, c.servicer_orbit.arg_latitude});
            break;
        case Architecture::E:
            if (!arch.plan) throw ValidationError("architecture E requires an explicit plan");
            plan = *arch.plan;
            break;
    }
    return plan;
}

CampaignBudget build_budget(const Constellation& c, const RendezvousPlan& plan) {
    if (plan.size() != c.targets.size()) {
        throw ValidationError("plan has " + std::to_string(plan.size()) + " points for " +
                              std::to_string(c.targets.size()) + " targets");
    }
    CampaignBudget budget;
    budget.legs.reserve(plan.size());

    // The servicer state threads through the legs; targets always depart from
    // their own unperturbed slot. Whoever burns is the chaser of its own gap.
    CircularOrbit servicer = c.servicer_orbit;
    for (std::size_t j = 0; j < plan.size(); ++j) {
        const RendezvousPoint& rv = plan[j];
        const CircularOrbit& target = c.targets[j];
        try {
            LegBudget leg;
            leg.dv_servicer = transfer_delta_v(servicer, rv.inclination, rv.arg_latitude,
                                               true, c.phasing, c.gravity);
            leg.dv_target_in = transfer_delta_v(target, rv.inclination, rv.arg_latitude,
                                                true, c.phasing, c.gravity);
            CircularOrbit at_rendezvous = target;
            at_rendezvous.inclination = rv.inclination;
            at_rendezvous.arg_latitude = rv.arg_latitude;
            leg.dv_target_out = transfer_delta_v(at_rendezvous, target.inclination,
                                                 target.arg_latitude, true, c.phasing, c.gravity);
            budget.legs.push_back(leg);
        } catch (const PerigeeBelowSurface& e) {
            throw PerigeeBelowSurface(std::string(e.what()) + " on leg " + std::to_string(j + 1),
                                      static_cast<int>(j + 1));
        }
        servicer.inclination = rv.inclination;
        servicer.arg_latitude = rv.arg_latitude;
    }
    try {
        budget.dv_servicer_return =
            transfer_delta_v(servicer, c.servicer_orbit.inclination,
                             c.servicer_orbit.arg_latitude, true, c.phasing, c.gravity);
    } catch (const PerigeeBelowSurface& e) {
        throw PerigeeBelowSurface(std::string(e.what()) + " on the return leg",
                                  static_cast<int>(plan.size() + 1));
    }
    return budget;
}

CampaignResult simulate_masses(const CampaignBudget& budget, const MissionParams& params) {
    if (static_cast<int>(budget.legs.size()) != params.n) {
        throw ValidationError("budget has " + std::to_string(budget.legs.size()) +
                              " legs but params.n = " + std::to_string(params.n));
    }
    const double ct = params.isp_target * params.g0;

    // Walk the chain backward: after the last refuel only the return transfer
    // is left, so the servicer mass right before it follows from m_s,F.
    double mass = rocket_mass_before(params.servicer_final_mass, budget.dv_servicer_return,
                                     params.isp_servicer, params.g0);
    std::vector<double> refuels(budget.legs.size(), 0.0);
    for (std::size_t idx = budget.legs.size(); idx-- > 0;) {
        const LegBudget& leg = budget.legs[idx];
        // Target-side chain: inbound burn, refuel, outbound burn ending at
        // the required post-campaign mass.
        const double target_after_inbound =
            params.target_initial_mass * std::exp(-leg.dv_target_in * 1000.0 / ct);
        const double target_after_refuel = rocket_mass_before(
            params.target_initial_mass + params.required_refuel, leg.dv_target_out,
            params.isp_target, params.g0);
        refuels[idx] = target_after_refuel - target_after_inbound;
        mass = rocket_mass_before(mass + refuels[idx], leg.dv_servicer, params.isp_servicer,
                                  params.g0);
    }

    CampaignResult out;
    out.servicer_initial_mass = mass;
    out.per_leg_refuel_mass = std::move(refuels);
    double total_refuel = 0.0;
    for (double m : out.per_leg_refuel_mass) total_refuel += m;
    const double delivered = params.n * params.required_refuel;
    out.variable_fuel_mass = mass - params.servicer_final_mass - delivered;
    out.target_fuel_consumed = total_refuel - delivered;
    out.servicer_fuel_consumed = mass - params.servicer_final_mass - total_refuel;
    return out;
}

CampaignResult evaluate_plan(const Constellation& c, const RendezvousPlan& plan,
                             const MissionParams& params) {
    return servicer_initial_mass_cooperative(build_budget(c, plan), params);
}

CampaignResult evaluate_architecture(const Constellation& c, const ArchitectureId& arch,
                                     const MissionParams& params) {
    return evaluate_plan(c, plan_for_architecture(c, arch), params);
}

Constellation truncated(const Constellation& c, int n) {
    if (n < 1 || n > static_cast<int>(c.targets.size())) {
        throw ValidationError("cannot truncate " + std::to_string(c.targets.size()) +
                              " targets to n = " + std::to_string(n));
    }
    Constellation out = c;
    out.targets.resize(static_cast<std::size_t>(n));
    return out;
}

}  // namespace orbfuel
