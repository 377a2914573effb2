#include "orbfuel/orbits.hpp"

#include <cmath>
#include <string>

namespace orbfuel {

double wrap_angle(double angle) {
    double a = std::fmod(angle, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

double circular_velocity(const CircularOrbit& orbit, const GravityModel& g) {
    return std::sqrt(g.mu / (g.earth_radius + orbit.altitude));
}

double delta_v_inclination(double speed, double delta_i) {
    if (delta_i < 0.0 || delta_i > 3.14159265358979323847 + 1e-12) {
        throw ValidationError("delta_i must lie in [0, pi], got " + std::to_string(delta_i));
    }
    return 2.0 * speed * std::sin(delta_i / 2.0);
}

double delta_v_phasing(const CircularOrbit& orbit, double delta_u,
                       const PhasingPolicy& policy, const GravityModel& g) {
    if (policy.k1 < 1) {
        throw InvalidPolicy("phasing policy needs k1 >= 1, got " + std::to_string(policy.k1));
    }
    if (policy.k2 < 0) {
        throw InvalidPolicy("phasing policy needs k2 >= 0, got " + std::to_string(policy.k2));
    }
    if (delta_u < 0.0 || delta_u >= kTwoPi) {
        throw ValidationError("delta_u must lie in [0, 2pi), got " + std::to_string(delta_u));
    }
    // Co-located craft need no catch-up orbit; the formula below would still
    // prescribe one for k1 = k2.
    if (delta_u == 0.0) return 0.0;

    const double r = g.earth_radius + orbit.altitude;
    const double phase_angle = kTwoPi - delta_u;
    const double period_ratio = (phase_angle + kTwoPi * policy.k2) / (kTwoPi * policy.k1);
    const double a = std::cbrt(period_ratio * period_ratio) * r;
    if (2.0 * a - r <= g.earth_radius) {
        throw PerigeeBelowSurface("phasing orbit perigee " + std::to_string(2.0 * a - r) +
                                  " km is at or below the surface (delta_u=" +
                                  std::to_string(delta_u) + ", k1=" + std::to_string(policy.k1) +
                                  ", k2=" + std::to_string(policy.k2) + ")");
    }
    const double v_circ = std::sqrt(g.mu / r);
    const double v_phasing = std::sqrt(g.mu * (2.0 / r - 1.0 / a));
    return 2.0 * std::fabs(v_circ - v_phasing);
}

double transfer_delta_v(const CircularOrbit& from, double to_inclination,
                        double to_arg_latitude, bool chaser_is_self,
                        const PhasingPolicy& policy, const GravityModel& g) {
    const double v = circular_velocity(from, g);
    const double dv_plane = delta_v_inclination(v, std::fabs(to_inclination - from.inclination));
    const double gap = chaser_is_self ? to_arg_latitude - from.arg_latitude
                                      : from.arg_latitude - to_arg_latitude;
    const double dv_phase = delta_v_phasing(from, wrap_angle(gap), policy, g);
    return dv_plane + dv_phase;
}

}  // namespace orbfuel
