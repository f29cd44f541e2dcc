#pragma once

#include <string>
#include <vector>

namespace delorenz {

/// Coefficients of the general Lorenz model
///   x' = a(y - x),  y' = bx + dy - xz,  z' = -cz + xy
struct SystemParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
};

/// Which coupling carries the single delay tau:
///   A: y(t - tau) in the x' equation
///   B: x(t - tau) in the x' equation
///   C: z(t - tau) in the z' equation
enum class DelayVariant { A, B, C };

const char* variant_name(DelayVariant v);

struct State {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

enum class EquilibriumKind { Origin, PositiveWing, NegativeWing };

struct Equilibrium {
    State point;
    EquilibriumKind kind;
};

struct ValidityCheck {
    std::string name;
    bool passed = false;
    double margin = 0.0;   // distance from the pass/fail boundary, positive = pass
    bool advisory = false; // advisory side conditions do not gate validity
};

struct ValidityReport {
    bool valid = false;
    std::vector<ValidityCheck> checks;

    const ValidityCheck* find(const std::string& name) const;
};

/// Map the single-parameter unified system onto SystemParams:
/// a = 25*alpha + 10, b = 28 - 35*alpha, c = (8 + alpha)/3, d = 29*alpha - 1.
/// Throws std::out_of_range unless 0 <= alpha <= 1.
SystemParams unified_params(double alpha);

/// All equilibria shared by the three variants: the origin always, plus the
/// wing pair (+-sqrt((b+d)c), +-sqrt((b+d)c), b+d) when (b+d)*c > 0.
std::vector<Equilibrium> equilibria(const SystemParams& params);

/// Delayed vector field. Exactly one coupling reads from `delayed`:
/// variant A uses delayed.y, B uses delayed.x, C uses delayed.z.
State rhs(DelayVariant variant, const State& current, const State& delayed,
          const SystemParams& params);

/// Named condition checks for the given variant. Core conditions
/// (a > 0, b + d < 0, c > 0) and the tau=0 Routh-Hurwitz verdict gate
/// `valid`; the per-variant side conditions are advisory only, since the
/// stock B parameter set fails its own |d| < |b| condition while being
/// Routh-Hurwitz stable.
ValidityReport validate_params(DelayVariant variant, const SystemParams& params);

} // namespace delorenz
