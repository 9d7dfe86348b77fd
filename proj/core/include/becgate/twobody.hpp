#pragma once

#include "becgate/medium.hpp"
#include "becgate/quantities.hpp"

namespace becgate::twobody {

/// Trap geometry for a stored excitation. The spin waves live in the
/// effective trap omega_tilde; omega is the real trap it corresponds to.
/// s = sqrt(pi hbar / (m omega_tilde)) is the ground-state scale entering
/// the energy shift; l is the FWHM of the probability density,
/// s = sqrt(pi / (8 ln 2)) l.
struct TrapState {
    double omega;        // rad/s, real trap
    double omega_tilde;  // rad/s, effective trap
    double s;            // m
    double l;            // m (FWHM)
};

/// Collisional energy shift of the doubly-occupied state and derived rates.
struct ShiftResult {
    double delta_e;          // J, = ubar12 * s^-3
    double phase_rate;       // rad/s, = delta_e / hbar
    double fidelity_metric;  // = delta_e / (hbar omega_tilde)
};

/// Ground-branch energy of two contact-interacting excitations in the
/// relative coordinate, from the exact regularized-delta solution.
struct ExactPairEnergy {
    double energy;                // J
    double scattering_parameter;  // a_eff / a_rel, dimensionless
};

TrapState trap_state_from_effective(double omega_tilde, const medium::ScatteringSet& s,
                                    const Constants& c);

/// Inversion: trap state whose ground-state FWHM equals `fwhm`.
TrapState trap_state_from_fwhm(double fwhm, const medium::ScatteringSet& s,
                               const Constants& c);

/// First-order shift delta_e = ubar12 * s^-3 with the derived phase rate and
/// fidelity metric.
ShiftResult energy_shift(const medium::EffectiveMedium& med, const TrapState& t,
                         const Constants& c);

/// t = target_phase / phase_rate. Throws NoInteractionError when the rate
/// vanishes (and the phase does not).
double time_for_phase(double target_phase, const ShiftResult& shift);

/// Ground-branch energy E/(hbar omega_tilde) of the regularized contact
/// problem as a function of the scattering parameter a_eff/a_rel. Solves
///   sqrt(2) Gamma(-nu) / Gamma(-nu - 1/2) = a_rel / (2 sqrt(2) a_eff),
///   E = (2 nu + 3/2) hbar omega_tilde
/// by bracketed bisection on the branch through the noninteracting ground
/// state. No range guard; exact_pair_energy applies the perturbative-branch
/// guard for protocol use.
double busch_ground_branch_energy(double scattering_parameter);

/// Exact-oracle counterpart of energy_shift. a_eff = m ubar12 / (4 pi hbar^2),
/// a_rel = sqrt(hbar / (m omega_tilde)). Requires |a_eff/a_rel| < 0.5.
ExactPairEnergy exact_pair_energy(const medium::EffectiveMedium& med, const TrapState& t,
                                  const Constants& c);

}  // namespace becgate::twobody
