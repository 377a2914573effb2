#include "orbfuel/massmodel.hpp"

#include <cmath>
#include <string>

namespace orbfuel {

namespace {

// Exponent of the rocket equation; dv enters in km/s.
double burn_exponent(double dv, double isp, double g0) {
    return dv * 1000.0 / (isp * g0);
}

void check_budget_size(const CampaignBudget& budget, const MissionParams& params) {
    if (static_cast<int>(budget.legs.size()) != params.n) {
        throw ValidationError("budget has " + std::to_string(budget.legs.size()) +
                              " legs but params.n = " + std::to_string(params.n));
    }
}

void check_noncooperative(const CampaignBudget& budget) {
    for (std::size_t j = 0; j < budget.legs.size(); ++j) {
        if (budget.legs[j].dv_target_in != 0.0 || budget.legs[j].dv_target_out != 0.0) {
            throw CooperativeLegInNonCooperativeBudget(
                "non-cooperative budget carries target delta-v on leg " + std::to_string(j + 1));
        }
    }
}

// Prefix sums of the servicer burn exponents, index j = sum over legs 1..j;
// the last entry includes the return leg.
std::vector<double> servicer_prefix_exponents(const CampaignBudget& budget,
                                              const MissionParams& params) {
    std::vector<double> prefix(budget.legs.size() + 2, 0.0);
    for (std::size_t j = 0; j < budget.legs.size(); ++j) {
        prefix[j + 1] = prefix[j] +
                        burn_exponent(budget.legs[j].dv_servicer, params.isp_servicer, params.g0);
    }
    prefix[budget.legs.size() + 1] =
        prefix[budget.legs.size()] +
        burn_exponent(budget.dv_servicer_return, params.isp_servicer, params.g0);
    return prefix;
}

CampaignResult assemble_result(double initial_mass, std::vector<double> refuels,
                               const MissionParams& params) {
    CampaignResult out;
    out.servicer_initial_mass = initial_mass;
    out.per_leg_refuel_mass = std::move(refuels);
    double total_refuel = 0.0;
    for (double m : out.per_leg_refuel_mass) total_refuel += m;
    const double delivered = params.n * params.required_refuel;
    out.variable_fuel_mass = initial_mass - params.servicer_final_mass - delivered;
    out.target_fuel_consumed = total_refuel - delivered;
    out.servicer_fuel_consumed = initial_mass - params.servicer_final_mass - total_refuel;
    return out;
}

}  // namespace

double rocket_mass_before(double mass_after, double dv, double isp, double g0) {
    return mass_after * std::exp(burn_exponent(dv, isp, g0));
}

double cooperative_refuel_mass(const LegBudget& leg, const MissionParams& params) {
    const double out_factor = std::exp(burn_exponent(leg.dv_target_out, params.isp_target, params.g0));
    const double in_factor = std::exp(-burn_exponent(leg.dv_target_in, params.isp_target, params.g0));
    const double refuel = (params.target_initial_mass + params.required_refuel) * out_factor -
                          params.target_initial_mass * in_factor;
    if (refuel < 0.0) {
        throw NegativeRefuel("refuel mass " + std::to_string(refuel) + " kg is negative");
    }
    return refuel;
}

CampaignResult servicer_initial_mass_cooperative(const CampaignBudget& budget,
                                                 const MissionParams& params) {
    check_budget_size(budget, params);
    const std::vector<double> prefix = servicer_prefix_exponents(budget, params);

    double initial = params.servicer_final_mass * std::exp(prefix.back());
    std::vector<double> refuels(budget.legs.size(), 0.0);
    for (std::size_t j = 0; j < budget.legs.size(); ++j) {
        refuels[j] = cooperative_refuel_mass(budget.legs[j], params);
        initial += refuels[j] * std::exp(prefix[j + 1]);
    }
    return assemble_result(initial, std::move(refuels), params);
}

CampaignResult servicer_initial_mass_noncooperative(const CampaignBudget& budget,
                                                    const MissionParams& params) {
    check_budget_size(budget, params);
    check_noncooperative(budget);
    const std::vector<double> prefix = servicer_prefix_exponents(budget, params);

    double initial = params.servicer_final_mass * std::exp(prefix.back());
    std::vector<double> refuels(budget.legs.size(), params.required_refuel);
    for (std::size_t j = 0; j < budget.legs.size(); ++j) {
        initial += params.required_refuel * std::exp(prefix[j + 1]);
    }
    return assemble_result(initial, std::move(refuels), params);
}

std::optional<double> critical_mass_ratio(const CampaignBudget& budget_coop,
                                          const CampaignBudget& budget_noncoop,
                                          const MissionParams& params) {
    check_budget_size(budget_coop, params);
    check_budget_size(budget_noncoop, params);
    check_noncooperative(budget_noncoop);

    const std::vector<double> prefix_c = servicer_prefix_exponents(budget_coop, params);
    const std::vector<double> prefix_n = servicer_prefix_exponents(budget_noncoop, params);

    const double denominator = std::exp(prefix_c.back()) - std::exp(prefix_n.back());
    if (std::fabs(denominator) < 1e-15) return std::nullopt;

    const double q = params.required_refuel / params.target_initial_mass;
    double numerator = 0.0;
    for (std::size_t j = 0; j < budget_coop.legs.size(); ++j) {
        const LegBudget& leg = budget_coop.legs[j];
        const double out_factor =
            std::exp(leg.dv_target_out * 1000.0 / (params.isp_target * params.g0));
        const double in_factor =
            std::exp(-leg.dv_target_in * 1000.0 / (params.isp_target * params.g0));
        numerator += q * std::exp(prefix_n[j + 1]) -
                     ((1.0 + q) * out_factor - in_factor) * std::exp(prefix_c[j + 1]);
    }
    return numerator / denominator;
}

std::optional<double> critical_mass_ratio_a_d(const CampaignBudget& budget_noncoop,
                                              const CampaignBudget& budget_fully_coop,
                                              const MissionParams& params) {
    check_budget_size(budget_noncoop, params);
    check_budget_size(budget_fully_coop, params);
    check_noncooperative(budget_noncoop);
    for (std::size_t j = 0; j < budget_fully_coop.legs.size(); ++j) {
        if (budget_fully_coop.legs[j].dv_servicer != 0.0) {
            throw ValidationError("fully cooperative budget carries servicer delta-v on leg " +
                                  std::to_string(j + 1));
        }
    }
    if (budget_fully_coop.dv_servicer_return != 0.0) {
        throw ValidationError("fully cooperative budget carries servicer delta-v on the return leg");
    }

    const std::vector<double> prefix_n = servicer_prefix_exponents(budget_noncoop, params);
    const double denominator = 1.0 - std::exp(prefix_n.back());
    if (std::fabs(denominator) < 1e-15) return std::nullopt;

    const double q = params.required_refuel / params.target_initial_mass;
    double numerator = 0.0;
    for (std::size_t j = 0; j < budget_fully_coop.legs.size(); ++j) {
        const LegBudget& leg = budget_fully_coop.legs[j];
        const double out_factor =
            std::exp(leg.dv_target_out * 1000.0 / (params.isp_target * params.g0));
        const double in_factor =
            std::exp(-leg.dv_target_in * 1000.0 / (params.isp_target * params.g0));
        numerator += q * std::exp(prefix_n[j + 1]) - ((1.0 + q) * out_factor - in_factor);
    }
    return numerator / denominator;
}

}  // namespace orbfuel
