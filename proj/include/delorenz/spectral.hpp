#pragma once

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "delorenz/model.hpp"

namespace delorenz {

/// Characteristic function of the linearization at the origin,
///   P(lambda) + Q(lambda) * exp(-lambda * tau),
/// with P a monic cubic and Q a quadratic.
struct QuasiPolynomial {
    std::array<double, 4> p{1.0, 0.0, 0.0, 0.0}; // lambda^3 .. lambda^0, p[0] == 1
    std::array<double, 3> q{0.0, 0.0, 0.0};      // lambda^2 .. lambda^0

    std::complex<double> p_at(std::complex<double> lambda) const;
    std::complex<double> q_at(std::complex<double> lambda) const;
};

/// Full cubic Routh-Hurwitz test on P(lambda) + Q(lambda), i.e. the tau = 0
/// characteristic polynomial lambda^3 + a2*lambda^2 + a1*lambda + a0.
struct RouthHurwitz {
    bool stable = false;
    double a2 = 0.0, a1 = 0.0, a0 = 0.0;          // summed coefficients
    double margin_a2 = 0.0;                        // a2 > 0
    double margin_a0 = 0.0;                        // a0 > 0
    double margin_cross = 0.0;                     // a2*a1 - a0 > 0

    double min_margin() const;
};

/// |P(i*omega)|^2 - |Q(i*omega)|^2 written as a monic cubic in u = omega^2.
struct OmegaCubic {
    std::array<double, 4> coef{1.0, 0.0, 0.0, 0.0}; // u^3 .. u^0

    double operator()(double u) const;
    double derivative(double u) const;
};

/// One pure-imaginary crossing of the characteristic function.
struct Crossing {
    double u0 = 0.0;          // positive root of the omega cubic
    double omega0 = 0.0;      // sqrt(u0)
    double f_prime_u0 = 0.0;  // omega-cubic slope at u0; > 0 certifies d Re(lambda)/d tau > 0
    bool transversal = false;
    std::vector<double> tau_ladder; // tau_k = tau_0 + 2*k*pi/omega0, k = 0..k_max
};

struct Flag {
    std::string id;
    std::string message;
};

struct HopfReport {
    DelayVariant variant = DelayVariant::A;
    SystemParams params;
    QuasiPolynomial qp;
    OmegaCubic cubic;
    RouthHurwitz rh_tau0;
    std::vector<Crossing> crossings;
    std::optional<double> tau0;     // min first-crossing delay; absent if no positive root
    std::vector<std::string> warnings;
    std::vector<Flag> flags;
};

enum class Stability { AsymptoticallyStable, HopfCritical, Unstable, Indeterminate };

struct StabilityVerdict {
    Stability kind = Stability::Indeterminate;
    int k = -1;          // ladder index for HopfCritical
    double margin = 0.0; // distance from tau to the nearest critical delay
    std::string note;
};

/// Raised when Newton iteration on the characteristic function stalls.
struct NewtonFailure : std::runtime_error {
    NewtonFailure(const std::string& what, std::complex<double> it, double res)
        : std::runtime_error(what), last_iterate(it), residual(res) {}
    std::complex<double> last_iterate;
    double residual;
};

QuasiPolynomial quasi_polynomial(DelayVariant variant, const SystemParams& params);

RouthHurwitz routh_hurwitz_tau0(const QuasiPolynomial& qp);

OmegaCubic omega_cubic(const QuasiPolynomial& qp);

/// Positive real roots, ascending, refined by bracketed bisection on the
/// monotone pieces plus one Newton polish. Near-coincident roots are merged;
/// tangential double roots are kept (their crossing ends up NonTransversal).
std::vector<double> positive_real_roots(const OmegaCubic& cubic);

/// cos/sin pair of omega*tau obtained from the exact 2x2 linear system of the
/// real and imaginary parts of P(i*omega) + Q(i*omega)(cos - i sin) = 0.
/// Throws std::domain_error when Q(i*omega) vanishes (degenerate system).
std::array<double, 2> crossing_trig(const QuasiPolynomial& qp, double omega);

/// Critical delays tau_k, k = 0..k_max, for a crossing frequency omega0.
/// tau_0 = atan2(sin, cos)/omega0 mapped into (0, 2*pi/omega0]; the ladder is
/// arithmetic with spacing 2*pi/omega0.
std::vector<double> crossing_delays(const QuasiPolynomial& qp, double omega0, int k_max);

/// Slope of the omega cubic at u0. Its sign equals the sign of
/// d Re(lambda)/d tau at the corresponding crossing.
double transversality(const OmegaCubic& cubic, double u0);

/// Exact evaluation of P(lambda) + Q(lambda) e^(-lambda tau); the residual
/// magnitude is the oracle behind every crossing invariant.
std::complex<double> char_residual(const QuasiPolynomial& qp,
                                   std::complex<double> lambda, double tau);

/// Newton iteration on the characteristic function with derivative
/// P'(lambda) + (Q'(lambda) - tau Q(lambda)) e^(-lambda tau).
/// Throws NewtonFailure after 100 iterations without convergence.
std::complex<double> newton_refine_root(const QuasiPolynomial& qp, double tau,
                                        std::complex<double> guess);

/// Full per-variant analysis: quasi-polynomial, Routh-Hurwitz at tau = 0,
/// omega cubic, crossings with delay ladders and transversality, tau0.
HopfReport hopf_report(DelayVariant variant, const SystemParams& params, int k_max);

/// Theorem-style verdict for a concrete delay. Requires a tau = 0 stable
/// report whose crossings are all transversal; otherwise Indeterminate.
StabilityVerdict classify_delay(const HopfReport& report, double tau);

} // namespace delorenz
