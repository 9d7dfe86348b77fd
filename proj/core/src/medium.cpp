#include "becgate/medium.hpp"

#include <cmath>
#include <numbers>

#include "becgate/errors.hpp"

namespace becgate::medium {

namespace {
constexpr double kPi = std::numbers::pi;
}

ScatteringSet ScatteringSet::rb87() {
    return {5.39e-9, 5.24e-9, 5.24e-9, 5.58e-9, 1.0};
}

void ScatteringSet::validate() const {
    if (!(a00 > 0.0) || !(a01 > 0.0) || !(a02 > 0.0) || !(a12 > 0.0)) {
        throw ConfigError("scattering lengths must be positive");
    }
    if (!(feshbach_factor >= 1.0)) {
        throw ConfigError("feshbach factor must be >= 1 for protocol use");
    }
}

EffectiveMedium effective_interactions(const ScatteringSet& s, const Constants& c) {
    const double kappa = 1.0 - s.a01 / s.a00;
    if (!(kappa > 0.0)) {
        throw RepulsiveTrapError(
            "a01 >= a00: effective trapping potential is repulsive, protocol invalid");
    }
    const double u_scale = 4.0 * kPi * c.hbar * c.hbar / c.atom_mass;
    const double cross = s.a01 * s.a02 / s.a00;
    const double a12f = s.a12_enhanced();
    EffectiveMedium med;
    med.trap_scale = kappa;
    // Intra-level collisions within the storage manifold reuse the bare a12.
    med.u11 = u_scale * (s.a12 - s.a01 * s.a01 / s.a00);
    med.u22 = u_scale * (s.a12 - s.a02 * s.a02 / s.a00);
    med.u12 = u_scale * (a12f - cross);
    med.ubar12 = med.u12 * std::pow(2.0, -1.5);
    return med;
}

double effective_trap_frequency(double omega, const ScatteringSet& s) {
    const double kappa = 1.0 - s.a01 / s.a00;
    if (!(kappa > 0.0)) {
        throw RepulsiveTrapError(
            "a01 >= a00: effective trapping potential is repulsive, protocol invalid");
    }
    return std::sqrt(kappa) * omega;
}

CondensateProfile thomas_fermi(double atom_number, double omega, double a00,
                               const Constants& c) {
    if (!(atom_number >= 1.0)) throw ConfigError("atom number must be >= 1");
    if (!(omega > 0.0)) throw ConfigError("trap frequency must be positive");
    const double a_ho = std::sqrt(c.hbar / (c.atom_mass * omega));
    const double x = 15.0 * atom_number * a00 / a_ho;
    CondensateProfile p;
    p.atom_number = atom_number;
    p.tf_radius = a_ho * std::pow(x, 0.2);
    p.tf_diameter = 2.0 * p.tf_radius;
    p.chemical_potential = 0.5 * c.hbar * omega * std::pow(x, 0.4);
    const double u00 = 4.0 * kPi * c.hbar * c.hbar * a00 / c.atom_mass;
    p.peak_density = p.chemical_potential / u00;
    return p;
}

ContainmentCheck containment_check(const CondensateProfile& profile, double fwhm,
                                   double threshold) {
    ContainmentCheck check;
    check.ratio = fwhm / profile.tf_diameter;
    check.threshold = threshold;
    check.pass = check.ratio < threshold;
    return check;
}

}  // namespace becgate::medium
