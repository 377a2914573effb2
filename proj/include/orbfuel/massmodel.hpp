#pragma once

#include <optional>
#include <vector>

#include "orbfuel/errors.hpp"

namespace orbfuel {

inline constexpr double kStandardGravity = 9.80665;  // g0 [m/s^2]

/// Fixed mission quantities shared by every architecture.
struct MissionParams {
    int n = 1;                           ///< target count
    double servicer_final_mass = 500.0;  ///< m_s,F: servicer mass after the whole campaign [kg]
    double target_initial_mass = 1000.0; ///< m_t,I: each target's mass when refueling is requested [kg]
    double required_refuel = 200.0;      ///< usable refuel amount per target [kg]
    double isp_servicer = 300.0;         ///< [s]
    double isp_target = 300.0;           ///< [s]
    double g0 = kStandardGravity;        ///< [m/s^2]
};

/// Delta-v split for one refueling leg [km/s].
struct LegBudget {
    double dv_servicer = 0.0;   ///< servicer transfer into the rendezvous
    double dv_target_in = 0.0;  ///< target inbound transfer
    double dv_target_out = 0.0; ///< target return transfer
};

/// Whole-campaign delta-v budget: n legs plus the servicer's return leg,
/// which plays the role of the (n+1)th transfer.
struct CampaignBudget {
    std::vector<LegBudget> legs;
    double dv_servicer_return = 0.0;  ///< [km/s]
};

/// Mass outcome of a campaign.
struct CampaignResult {
    double servicer_initial_mass = 0.0;   ///< wet mass at campaign start [kg]
    double variable_fuel_mass = 0.0;      ///< initial mass minus dry mass minus n*m_req [kg]
    double servicer_fuel_consumed = 0.0;  ///< [kg]
    double target_fuel_consumed = 0.0;    ///< [kg]
    std::vector<double> per_leg_refuel_mass;  ///< m_r(j), delivery order [kg]
};

/// Tsiolkovsky mass before a burn: mass_after * exp(dv / (isp * g0)).
/// dv is km/s and converted to m/s at the exponent.
double rocket_mass_before(double mass_after, double dv, double isp, double g0);

/// Total refuel mass handed to a cooperative target on one leg: the required
/// amount plus compensation for the target's own round trip. Always >= m_req.
double cooperative_refuel_mass(const LegBudget& leg, const MissionParams& params);

/// Closed-form servicer initial mass for a cooperative campaign.
CampaignResult servicer_initial_mass_cooperative(const CampaignBudget& budget,
                                                 const MissionParams& params);

/// Closed-form servicer initial mass when targets stay passive. Every leg
/// must carry zero target delta-v.
CampaignResult servicer_initial_mass_noncooperative(const CampaignBudget& budget,
                                                    const MissionParams& params);

/**
 * Mass ratio m_s,F / m_t,I at which the cooperative and non-cooperative
 * campaigns need the same servicer wet mass. Assumes uniform target masses
 * and refuel amounts. Returns nullopt when the two servicer delta-v totals
 * coincide (no crossover: the architectures scale identically in m_s,F).
 */
std::optional<double> critical_mass_ratio(const CampaignBudget& budget_coop,
                                          const CampaignBudget& budget_noncoop,
                                          const MissionParams& params);

/// Special case separating the all-servicer and all-target architectures:
/// the cooperative budget must have zero servicer delta-v everywhere.
std::optional<double> critical_mass_ratio_a_d(const CampaignBudget& budget_noncoop,
                                              const CampaignBudget& budget_fully_coop,
                                              const MissionParams& params);

}  // namespace orbfuel
