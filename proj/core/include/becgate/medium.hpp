#pragma once

#include "becgate/quantities.hpp"

namespace becgate::medium {

/// Raw s-wave scattering lengths between the condensate level 0 and the two
/// storage levels, plus the Feshbach enhancement applied to the 1-2 channel.
/// All lengths in meters.
struct ScatteringSet {
    double a00;
    double a01;
    double a02;
    double a12;
    double feshbach_factor = 1.0;  // multiplies a12 only

    /// 87Rb values: level 0 in F=1, levels 1 and 2 in F=2.
    static ScatteringSet rb87();

    /// a12 after Feshbach enhancement.
    double a12_enhanced() const { return feshbach_factor * a12; }

    void validate() const;
};

/// Effective single-excitation physics seen by the stored spin waves:
/// trap scale factor kappa = 1 - a01/a00 and the effective interaction
/// strengths (J m^3). ubar12 is the relative-coordinate strength
/// u12 * 2^(-3/2).
struct EffectiveMedium {
    double trap_scale;  // kappa, dimensionless
    double u11;
    double u22;
    double u12;
    double ubar12;
};

/// Background condensate in the Thomas-Fermi approximation for an isotropic
/// harmonic trap at the *real* frequency omega.
struct CondensateProfile {
    double atom_number;
    double chemical_potential;  // J
    double tf_radius;           // m
    double tf_diameter;         // m
    double peak_density;        // m^-3
};

struct ContainmentCheck {
    double ratio;  // fwhm / tf_diameter
    double threshold;
    bool pass;
};

/// Effective interaction strengths U~ij = (4 pi hbar^2 / m)(aij - a0i a0j / a00),
/// with the Feshbach factor folded into a12 first. Levels 1 and 2 live in the
/// same hyperfine manifold, so the intra-level channels reuse the bare a12.
/// Throws RepulsiveTrapError when a01 >= a00.
EffectiveMedium effective_interactions(const ScatteringSet& s, const Constants& c);

/// omega_tilde = sqrt(1 - a01/a00) * omega. Throws RepulsiveTrapError when
/// the scale factor is not positive.
double effective_trap_frequency(double omega, const ScatteringSet& s);

/// Standard isotropic-trap Thomas-Fermi closed forms:
///   a_ho = sqrt(hbar/(m omega)),  R = a_ho (15 N a00 / a_ho)^(1/5),
///   mu = (hbar omega / 2)(15 N a00 / a_ho)^(2/5),  n0 = mu / U00.
CondensateProfile thomas_fermi(double atom_number, double omega, double a00,
                               const Constants& c);

/// Is a wave packet of the given FWHM localized well inside the condensate?
ContainmentCheck containment_check(const CondensateProfile& profile, double fwhm,
                                   double threshold = 0.5);

}  // namespace becgate::medium
