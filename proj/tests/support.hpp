#pragma once

#include <cmath>
#include <functional>
#include <random>

#include "orbfuel/campaign.hpp"
#include "orbfuel/massmodel.hpp"

// Test-only helpers. The crossover bisection below is an oracle kept
// independent of the closed-form ratio formulas it checks.
namespace testsupport {

inline constexpr double kPi = 3.14159265358979323847;
inline constexpr double kDeg = kPi / 180.0;

inline orbfuel::Constellation single_target(double i_servicer_deg, double i_target_deg,
                                            double u_target_rad, int k1 = 1, int k2 = 1) {
    orbfuel::Constellation c;
    c.servicer_orbit = {550.0, i_servicer_deg * kDeg, 0.0};
    c.targets.push_back({550.0, i_target_deg * kDeg, u_target_rad});
    c.phasing = {k1, k2};
    return c;
}

inline orbfuel::MissionParams table_params(int n, double servicer_final_mass = 500.0) {
    orbfuel::MissionParams p;
    p.n = n;
    p.servicer_final_mass = servicer_final_mass;
    return p;
}

inline orbfuel::CampaignBudget random_budget(std::mt19937_64& rng, int n, bool cooperative,
                                             double max_dv = 3.0) {
    std::uniform_real_distribution<double> draw(0.0, max_dv);
    orbfuel::CampaignBudget budget;
    for (int j = 0; j < n; ++j) {
        orbfuel::LegBudget leg;
        leg.dv_servicer = draw(rng);
        if (cooperative) {
            leg.dv_target_in = draw(rng);
            leg.dv_target_out = draw(rng);
        }
        budget.legs.push_back(leg);
    }
    budget.dv_servicer_return = draw(rng);
    return budget;
}

// Root of m_coop(ratio) - m_noncoop(ratio) by bisection on the mass ratio.
// Returns NaN when no sign change is bracketed.
inline double crossover_by_bisection(const orbfuel::CampaignBudget& coop,
                                     const orbfuel::CampaignBudget& noncoop,
                                     orbfuel::MissionParams params, double lo = 1e-6,
                                     double hi = 1e6) {
    const auto diff = [&](double ratio) {
        params.servicer_final_mass = ratio * params.target_initial_mass;
        const double mc =
            orbfuel::servicer_initial_mass_cooperative(coop, params).servicer_initial_mass;
        const double mn =
            orbfuel::servicer_initial_mass_noncooperative(noncoop, params).servicer_initial_mass;
        return mc - mn;
    };
    double flo = diff(lo);
    double fhi = diff(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) return std::nan("");
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = diff(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace testsupport
