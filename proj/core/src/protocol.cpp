#include "becgate/protocol.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "becgate/errors.hpp"

namespace becgate::protocol {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

GateConfig GateConfig::defaults() {
    GateConfig cfg;
    cfg.omega_tilde_0 = kTwoPi * 10.0;
    cfg.omega_tilde_1 = kTwoPi * 10.0;
    cfg.ramp_time = 0.0;
    cfg.target_phase = kPi;
    return cfg;
}

GateConfig GateConfig::paper_preset() {
    GateConfig cfg = defaults();
    cfg.scattering.feshbach_factor = 3.0;
    cfg.omega_tilde_1 = kTwoPi * 80.0;
    cfg.ramp_time = 0.14;
    cfg.shape = dynamics::RampShape::Smoothstep;
    cfg.target_phase = kPi;
    cfg.atom_number = 1e5;
    // The published trap pair (ratio 5 between real and effective frequency);
    // the sqrt(kappa) model gives ratio ~6 for the same scattering lengths.
    cfg.omega_real_0 = kTwoPi * 50.0;
    cfg.omega_real_1 = kTwoPi * 400.0;
    return cfg;
}

void GateConfig::validate() const {
    scattering.validate();
    if (!(omega_tilde_0 > 0.0)) throw ConfigError("omega_tilde_0 must be positive");
    if (omega_tilde_1 < omega_tilde_0) {
        throw ConfigError("omega_tilde_1 < omega_tilde_0: the gate compresses, not expands");
    }
    if (!(ramp_time >= 0.0)) throw ConfigError("ramp time must be >= 0");
    if (hold_time.has_value() == target_phase.has_value()) {
        throw ConfigError("exactly one of hold_time / target_phase must be given");
    }
    if (hold_time && !(*hold_time >= 0.0)) throw ConfigError("hold time must be >= 0");
    if (target_phase && !(*target_phase >= 0.0)) {
        throw ConfigError("target phase must be >= 0");
    }
    if (!(atom_number >= 1.0)) throw ConfigError("atom number must be >= 1");
    if (!(containment_threshold > 0.0)) throw ConfigError("containment threshold must be > 0");
    if (!(p_exc_limit > 0.0 && p_exc_limit < 1.0)) throw ConfigError("p_exc limit in (0,1)");
    if (!(fidelity_limit > 0.0)) throw ConfigError("fidelity limit must be > 0");
}

namespace {

StageReport make_stage(const GateConfig& cfg, double omega_tilde,
                       std::optional<double> omega_real_override, const Constants& c) {
    StageReport stage;
    const auto trap = twobody::trap_state_from_effective(omega_tilde, cfg.scattering, c);
    stage.omega_tilde = omega_tilde;
    stage.omega_real_overridden = omega_real_override.has_value();
    stage.omega_real = omega_real_override.value_or(trap.omega);
    stage.s = trap.s;
    stage.fwhm = trap.l;
    stage.condensate =
        medium::thomas_fermi(cfg.atom_number, stage.omega_real, cfg.scattering.a00, c);
    stage.containment =
        medium::containment_check(stage.condensate, stage.fwhm, cfg.containment_threshold);
    return stage;
}

}  // namespace

GateReport simulate_gate(const GateConfig& cfg, const Constants& c) {
    cfg.validate();
    c.validate();

    GateReport report;
    report.config = cfg;
    report.med = medium::effective_interactions(cfg.scattering, c);
    report.initial = make_stage(cfg, cfg.omega_tilde_0, cfg.omega_real_0, c);
    report.compressed = make_stage(cfg, cfg.omega_tilde_1, cfg.omega_real_1, c);

    const auto trap1 = twobody::trap_state_from_effective(cfg.omega_tilde_1, cfg.scattering, c);
    report.shift_compressed = twobody::energy_shift(report.med, trap1, c);

    // Compression ramp: excitation and phase. A zero-duration ramp with equal
    // endpoints is "no compression"; with different endpoints it is a quench.
    dynamics::RampSchedule ramp{cfg.omega_tilde_0, cfg.omega_tilde_1, cfg.ramp_time, cfg.shape};
    const bool trivial_ramp = cfg.ramp_time == 0.0 && cfg.omega_tilde_1 == cfg.omega_tilde_0;
    if (trivial_ramp) {
        report.p_exc_single = 0.0;
        report.phi_a = 0.0;
    } else {
        report.p_exc_single = dynamics::excitation_probability(ramp);
        report.phi_a = dynamics::phase_accumulate(report.med, ramp, c);
    }

    // Round trip: two independent ramps, per-axis survival squared.
    {
        const double axis = std::cbrt(1.0 - report.p_exc_single);
        const double axis_rt = axis * axis;
        report.p_exc_roundtrip = 1.0 - axis_rt * axis_rt * axis_rt;
    }

    report.ramp_time = cfg.ramp_time;
    if (cfg.target_phase) {
        const double remaining = *cfg.target_phase - 2.0 * report.phi_a;
        if (remaining < 0.0) {
            throw PhaseOvershootError(
                "target phase is smaller than the phase 2*phi_a acquired during the ramps");
        }
        report.hold_time = twobody::time_for_phase(remaining, report.shift_compressed);
    } else {
        report.hold_time = *cfg.hold_time;
    }
    report.phi_f = dynamics::phase_accumulate_hold(report.med, cfg.omega_tilde_1,
                                                   report.hold_time, c);
    report.phi_total = 2.0 * report.phi_a + report.phi_f;
    report.total_time = 2.0 * report.ramp_time + report.hold_time;

    report.adiabaticity_pass = report.p_exc_single <= cfg.p_exc_limit;
    report.fidelity_pass = report.shift_compressed.fidelity_metric < cfg.fidelity_limit;
    report.containment_pass = report.initial.containment.pass && report.compressed.containment.pass;
    report.all_pass = report.adiabaticity_pass && report.fidelity_pass && report.containment_pass;
    return report;
}

RampDesign design_ramp(double omega_start, double omega_end, double p_max,
                       dynamics::RampShape shape) {
    if (!(p_max > 0.0 && p_max < 1.0)) throw ConfigError("p_max must be in (0, 1)");
    if (!(omega_start > 0.0) || !(omega_end > 0.0)) {
        throw ConfigError("ramp frequencies must be positive");
    }

    constexpr double t_min = 1e-4;
    constexpr double t_max = 1e2;
    constexpr double step = 1.01;

    std::vector<double> grid;
    for (double t = t_min; t <= t_max; t *= step) grid.push_back(t);

    auto p_at = [&](size_t i) {
        dynamics::RampSchedule r{omega_start, omega_end, grid[i], shape};
        return dynamics::excitation_probability(r);
    };

    // Smallest grid point passing together with its two upper neighbors, so
    // an oscillatory dip below p_max does not count as converged.
    double p_i = p_at(0);
    double p_j = p_at(1);
    for (size_t i = 0; i + 2 < grid.size(); ++i) {
        const double p_k = p_at(i + 2);
        if (p_i <= p_max && p_j <= p_max && p_k <= p_max) {
            return {grid[i], p_i, true};
        }
        p_i = p_j;
        p_j = p_k;
    }
    return {grid.back(), p_at(grid.size() - 1), false};
}

std::vector<SensitivityRow> sensitivity_report(const GateConfig& cfg, double perturbation,
                                               const Constants& c) {
    if (!(perturbation > 0.0 && perturbation <= 0.1)) {
        throw ConfigError("perturbation must be in (0, 0.1]");
    }
    cfg.validate();

    const auto base_trap =
        twobody::trap_state_from_effective(cfg.omega_tilde_1, cfg.scattering, c);
    const auto base_med = medium::effective_interactions(cfg.scattering, c);
    const auto base_shift = twobody::energy_shift(base_med, base_trap, c);
    const double base_tpi = twobody::time_for_phase(kPi, base_shift);

    std::vector<SensitivityRow> rows;
    const char* names[] = {"a00", "a01", "a02", "a12"};
    for (int i = 0; i < 4; ++i) {
        SensitivityRow row;
        row.parameter = names[i];
        row.perturbation = perturbation;
        medium::ScatteringSet s = cfg.scattering;
        double* field = (i == 0) ? &s.a00 : (i == 1) ? &s.a01 : (i == 2) ? &s.a02 : &s.a12;
        *field *= 1.0 + perturbation;
        if (!(s.a01 < s.a00)) {
            row.valid = false;
            row.delta_e_change = 0.0;
            row.t_pi_change = 0.0;
            row.amplification = 0.0;
            row.note = "perturbed set violates a01 < a00";
            rows.push_back(std::move(row));
            continue;
        }
        // Trap frequencies held fixed: only the interaction strength responds.
        const auto med = medium::effective_interactions(s, c);
        const auto shift = twobody::energy_shift(med, base_trap, c);
        row.valid = true;
        row.delta_e_change = shift.delta_e / base_shift.delta_e - 1.0;
        if (shift.delta_e > 0.0) {
            row.t_pi_change = twobody::time_for_phase(kPi, shift) / base_tpi - 1.0;
        } else {
            row.t_pi_change = std::numeric_limits<double>::infinity();
            row.note = "perturbed interaction vanishes or changes sign";
        }
        row.amplification = std::abs(row.delta_e_change) / perturbation;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string_view sweep_axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::FeshbachFactor: return "F";
        case SweepAxis::OmegaTilde1: return "omega_tilde_1";
        case SweepAxis::RampTime: return "t_a";
        case SweepAxis::InitialFwhm: return "l0";
        case SweepAxis::AtomNumber: return "N";
    }
    return "?";
}

SweepAxis sweep_axis_from_name(std::string_view name) {
    if (name == "F" || name == "f") return SweepAxis::FeshbachFactor;
    if (name == "omega_tilde_1" || name == "omega-tilde-1") return SweepAxis::OmegaTilde1;
    if (name == "t_a" || name == "ta") return SweepAxis::RampTime;
    if (name == "l0") return SweepAxis::InitialFwhm;
    if (name == "N" || name == "n" || name == "n-atoms") return SweepAxis::AtomNumber;
    throw ConfigError("unknown sweep axis '" + std::string(name) +
                      "' (expected F, omega_tilde_1, t_a, l0 or N)");
}

namespace {

GateConfig apply_axis(const GateConfig& base, SweepAxis axis, double value,
                      const Constants& c) {
    GateConfig cfg = base;
    switch (axis) {
        case SweepAxis::FeshbachFactor:
            cfg.scattering.feshbach_factor = value;
            break;
        case SweepAxis::OmegaTilde1:
            cfg.omega_tilde_1 = value;
            break;
        case SweepAxis::RampTime:
            cfg.ramp_time = value;
            break;
        case SweepAxis::InitialFwhm: {
            const auto trap = twobody::trap_state_from_fwhm(value, cfg.scattering, c);
            cfg.omega_tilde_0 = trap.omega_tilde;
            break;
        }
        case SweepAxis::AtomNumber:
            cfg.atom_number = value;
            break;
    }
    return cfg;
}

}  // namespace

std::vector<SweepRow> sweep(const GateConfig& base, SweepAxis axis,
                            std::span<const double> values, const Constants& c) {
    std::vector<SweepRow> rows(values.size());

    auto run_row = [&](size_t i) {
        rows[i].value = values[i];
        try {
            rows[i].report = simulate_gate(apply_axis(base, axis, values[i], c), c);
        } catch (const std::exception& e) {
            rows[i].error = e.what();
        }
    };

    const size_t n = values.size();
    const size_t hw = std::max<size_t>(std::thread::hardware_concurrency(), 1);
    const size_t n_threads = std::min(n, hw);
    if (n_threads <= 1) {
        for (size_t i = 0; i < n; ++i) run_row(i);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        std::atomic<size_t> next{0};
        for (size_t t = 0; t < n_threads; ++t) {
            pool.emplace_back([&] {
                for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) run_row(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    return rows;
}

}  // namespace becgate::protocol
