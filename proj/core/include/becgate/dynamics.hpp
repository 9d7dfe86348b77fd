#pragma once

#include <span>
#include <vector>

#include "becgate/medium.hpp"
#include "becgate/quantities.hpp"

namespace becgate::dynamics {

/// How the effective trap frequency moves from omega_start to omega_end.
///  - Linear:      omega(t) linear in t.
///  - Exponential: log omega(t) linear in t.
///  - Smoothstep:  the trap *period* 1/omega(t) follows the cubic smoothstep
///    3u^2 - 2u^3. Endpoint slopes vanish and the sweep dwells where the trap
///    is soft, which is where adiabaticity is hardest to maintain; this is
///    the shape that meets the sub-0.002 excitation budget at t_a = 0.14 s.
enum class RampShape { Linear, Exponential, Smoothstep };

std::string_view ramp_shape_name(RampShape shape);
RampShape ramp_shape_from_name(std::string_view name);

struct RampSchedule {
    double omega_start = 0.0;  // rad/s, effective
    double omega_end = 0.0;    // rad/s, effective
    double duration = 0.0;     // s
    RampShape shape = RampShape::Smoothstep;
    int sample_count = 16384;  // quadrature intervals for phase integrals

    double omega_at(double t) const;
    RampSchedule reversed() const;
    void validate() const;
};

/// One point of the Ermakov scale-factor trajectory b(t):
///   b'' + omega(t)^2 b = omega(0)^2 / b^3,  b(0) = 1, b'(0) = 0.
struct ScaleSample {
    double t;
    double b;
    double bdot;
};

/// Integrate the Ermakov equation across the ramp. The returned trajectory
/// holds n_samples+1 uniformly spaced points including both endpoints
/// (a single point when duration == 0). Accuracy is governed by the adaptive
/// integrator (local relative tolerance 1e-10), not by n_samples.
std::vector<ScaleSample> ermakov_evolve(const RampSchedule& ramp, int n_samples = 256);

/// Probability of leaving the 3D ground state, 1 - survival^3, where the
/// per-axis survival is the Gaussian overlap of the evolved state
/// (ramp.omega_start, b, bdot) with the omega_target ground state.
double ground_state_survival_axis(double omega_ref, double b, double bdot,
                                  double omega_target);
double excitation_probability(const RampSchedule& ramp,
                              std::span<const ScaleSample> trajectory);
/// Convenience: evolve then project.
double excitation_probability(const RampSchedule& ramp);

/// Collisional phase accumulated across a ramp in the instantaneous-ground-
/// state approximation: phi = integral dE(omega(t))/hbar dt with
/// dE = ubar12 * s(omega)^-3. Composite-Simpson quadrature with a Richardson
/// step doubling until the relative change is below 1e-8.
double phase_accumulate(const medium::EffectiveMedium& med, const RampSchedule& ramp,
                        const Constants& c);

/// Constant-frequency hold: phi = dE * hold_time / hbar.
double phase_accumulate_hold(const medium::EffectiveMedium& med, double omega_tilde,
                             double hold_time, const Constants& c);

/// Grid oracle for excitation_probability: Crank-Nicolson propagation of the
/// 1D ground state under the time-dependent harmonic potential, projected on
/// the final ground state, survival cubed for three axes. Independent of the
/// Ermakov path.
struct TdseParams {
    int grid_points = 2048;
    double span_widths = 12.0;    // grid span / max ground-state width
    int steps_per_period = 400;   // of the stiffest trap on the ramp
    int min_steps = 200;
    double norm_tolerance = 1e-8;
};

double tdse_excitation_probability(const RampSchedule& ramp, const TdseParams& p = {});

}  // namespace becgate::dynamics
