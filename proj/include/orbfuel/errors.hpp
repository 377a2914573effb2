#pragma once

#include <stdexcept>
#include <string>

namespace orbfuel {

/// Phasing orbit perigee at or below the Earth's surface.
class PerigeeBelowSurface : public std::runtime_error {
  public:
    explicit PerigeeBelowSurface(const std::string& msg, int leg = -1)
        : std::runtime_error(msg), leg_(leg) {}

    /// Campaign leg index the failure occurred on, -1 when not leg-bound.
    int leg() const { return leg_; }

  private:
    int leg_;
};

class InvalidPolicy : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Refuel mass came out negative; only reachable through inconsistent inputs.
class NegativeRefuel : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A budget labelled non-cooperative carries nonzero target delta-v.
class CooperativeLegInNonCooperativeBudget : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Optimizer inclination bounds exclude part of the constellation.
class InfeasibleBounds : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Config file could not be parsed as JSON.
class ParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Config parsed but violates a domain invariant.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace orbfuel
