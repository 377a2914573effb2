#pragma once

#include "orbfuel/errors.hpp"

namespace orbfuel {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Two-body gravity constants. Defaults are the standard WGS-84 style values.
struct GravityModel {
    double mu = 398600.4418;         ///< gravitational parameter [km^3/s^2]
    double earth_radius = 6378.137;  ///< equatorial radius [km]
};

/// Spacecraft slot on a circular orbit. Angles are radians; arg_latitude is
/// measured against the shared campaign epoch reference.
struct CircularOrbit {
    double altitude = 550.0;   ///< [km]
    double inclination = 0.0;  ///< [rad], in [0, pi]
    double arg_latitude = 0.0; ///< [rad], in [0, 2pi)
};

/// Revolution counts for a coplanar phasing maneuver: the chaser completes k1
/// revolutions on the phasing orbit while the chased craft completes k2 plus
/// the phase angle.
struct PhasingPolicy {
    int k1 = 1;  ///< chaser revolutions, >= 1
    int k2 = 1;  ///< chased craft revolutions, >= 0
};

/// Normalize an angle into [0, 2pi).
double wrap_angle(double angle);

/// Circular orbit speed sqrt(mu / (earth_radius + altitude)) [km/s].
double circular_velocity(const CircularOrbit& orbit, const GravityModel& g);

/// Plane-change cost 2 v sin(delta_i / 2) [km/s]. delta_i is the absolute
/// plane-change magnitude and must lie in [0, pi].
double delta_v_inclination(double speed, double delta_i);

/**
 * Coplanar phasing cost [km/s].
 *
 * delta_u in [0, 2pi) is the argument-of-latitude gap from the chaser to the
 * chased craft. The chaser flies k1 revolutions of a phasing orbit whose
 * period lets the chased craft cover the phase angle (2pi - delta_u) plus k2
 * full revolutions. delta_u = 0 means co-located and costs nothing.
 *
 * Throws InvalidPolicy for k1 < 1 or k2 < 0, PerigeeBelowSurface when the
 * phasing orbit would dip below the surface.
 */
double delta_v_phasing(const CircularOrbit& orbit, double delta_u,
                       const PhasingPolicy& policy, const GravityModel& g);

/**
 * Total transfer cost between same-altitude circular slots: inclination
 * change plus coplanar phasing [km/s].
 *
 * chaser_is_self picks which end the phasing gap is measured from: true means
 * the maneuvering craft chases the destination slot (the usual case, since
 * whoever burns is the chaser).
 */
double transfer_delta_v(const CircularOrbit& from, double to_inclination,
                        double to_arg_latitude, bool chaser_is_self,
                        const PhasingPolicy& policy, const GravityModel& g);

}  // namespace orbfuel
