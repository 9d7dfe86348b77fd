#include "becgate/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <vector>

#include "becgate/errors.hpp"

namespace becgate::dynamics {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

std::string_view ramp_shape_name(RampShape shape) {
    switch (shape) {
        case RampShape::Linear: return "linear";
        case RampShape::Exponential: return "exponential";
        case RampShape::Smoothstep: return "smoothstep";
    }
    return "?";
}

RampShape ramp_shape_from_name(std::string_view name) {
    if (name == "linear") return RampShape::Linear;
    if (name == "exponential") return RampShape::Exponential;
    if (name == "smoothstep") return RampShape::Smoothstep;
    throw ConfigError("unknown ramp shape '" + std::string(name) +
                      "' (expected linear, exponential or smoothstep)");
}

void RampSchedule::validate() const {
    if (!(omega_start > 0.0) || !(omega_end > 0.0)) {
        throw ConfigError("ramp frequencies must be positive");
    }
    if (!(duration >= 0.0)) throw ConfigError("ramp duration must be >= 0");
    if (sample_count < 2) throw ConfigError("sample_count must be >= 2");
}

double RampSchedule::omega_at(double t) const {
    if (duration <= 0.0) return omega_start;
    const double u = std::clamp(t / duration, 0.0, 1.0);
    switch (shape) {
        case RampShape::Linear:
            return omega_start + (omega_end - omega_start) * u;
        case RampShape::Exponential:
            return omega_start * std::pow(omega_end / omega_start, u);
        case RampShape::Smoothstep: {
            const double h = u * u * (3.0 - 2.0 * u);
            const double inv = 1.0 / omega_start + (1.0 / omega_end - 1.0 / omega_start) * h;
            return 1.0 / inv;
        }
    }
    return omega_start;
}

RampSchedule RampSchedule::reversed() const {
    RampSchedule r = *this;
    std::swap(r.omega_start, r.omega_end);
    return r;
}

namespace {

// Dormand-Prince 5(4) adaptive step for the 2-component Ermakov system.
struct Rk45 {
    using State = std::array<double, 2>;
    const RampSchedule& ramp;
    double rtol = 1e-10;
    double atol = 1e-12;

    void deriv(double t, const State& y, State& dy) const {
        const double w = ramp.omega_at(t);
        const double b = y[0];
        dy[0] = y[1];
        dy[1] = ramp.omega_start * ramp.omega_start / (b * b * b) - w * w * b;
    }

    // Integrate from t0 to t1, updating y in place.
    void integrate(double t0, double t1, State& y) const {
        if (t1 <= t0) return;
        double t = t0;
        double h = std::min((t1 - t0), 0.1 * kTwoPi / ramp.omega_at(t0));
        State k1, k2, k3, k4, k5, k6, k7, ytmp, y5;
        deriv(t, y, k1);
        while (t < t1) {
            h = std::min(h, t1 - t);
            if (h < 1e-14 * std::max(t1, 1.0)) {
                char msg[128];
                std::snprintf(msg, sizeof(msg),
                              "ermakov integration stalled at t=%.6g (step %.3g s)", t, h);
                throw StiffnessError(msg);
            }
            // Dormand-Prince coefficients
            auto stage = [&](double c, std::initializer_list<double> a,
                             std::initializer_list<const State*> ks, State& out) {
                ytmp = y;
                auto ai = a.begin();
                for (const State* k : ks) {
                    ytmp[0] += h * (*ai) * (*k)[0];
                    ytmp[1] += h * (*ai) * (*k)[1];
                    ++ai;
                }
                deriv(t + c * h, ytmp, out);
            };
            stage(1.0 / 5, {1.0 / 5}, {&k1}, k2);
            stage(3.0 / 10, {3.0 / 40, 9.0 / 40}, {&k1, &k2}, k3);
            stage(4.0 / 5, {44.0 / 45, -56.0 / 15, 32.0 / 9}, {&k1, &k2, &k3}, k4);
            stage(8.0 / 9, {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
                  {&k1, &k2, &k3, &k4}, k5);
            stage(1.0, {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
                  {&k1, &k2, &k3, &k4, &k5}, k6);
            // 5th-order solution
            for (int i = 0; i < 2; ++i) {
                y5[i] = y[i] + h * (35.0 / 384 * k1[i] + 500.0 / 1113 * k3[i] +
                                    125.0 / 192 * k4[i] - 2187.0 / 6784 * k5[i] +
                                    11.0 / 84 * k6[i]);
            }
            deriv(t + h, y5, k7);
            // embedded 4th-order error estimate
            double err = 0.0;
            for (int i = 0; i < 2; ++i) {
                const double e4 = y[i] + h * (5179.0 / 57600 * k1[i] + 7571.0 / 16695 * k3[i] +
                                              393.0 / 640 * k4[i] - 92097.0 / 339200 * k5[i] +
                                              187.0 / 2100 * k6[i] + 1.0 / 40 * k7[i]);
                const double sc = atol + rtol * std::max(std::abs(y[i]), std::abs(y5[i]));
                const double e = (y5[i] - e4) / sc;
                err += e * e;
            }
            err = std::sqrt(0.5 * err);
            if (err <= 1.0) {
                t += h;
                y = y5;
                k1 = k7;  // FSAL
            }
            const double fac = std::clamp(0.9 * std::pow(std::max(err, 1e-10), -0.2), 0.2, 5.0);
            h *= fac;
        }
    }
};

}  // namespace

std::vector<ScaleSample> ermakov_evolve(const RampSchedule& ramp, int n_samples) {
    ramp.validate();
    if (n_samples < 1) n_samples = 1;
    std::vector<ScaleSample> out;
    if (ramp.duration <= 0.0) {
        out.push_back({0.0, 1.0, 0.0});
        return out;
    }
    out.reserve(static_cast<size_t>(n_samples) + 1);
    Rk45 solver{ramp};
    Rk45::State y{1.0, 0.0};
    out.push_back({0.0, y[0], y[1]});
    for (int i = 1; i <= n_samples; ++i) {
        const double t0 = ramp.duration * (i - 1) / n_samples;
        const double t1 = ramp.duration * i / n_samples;
        solver.integrate(t0, t1, y);
        out.push_back({t1, y[0], y[1]});
    }
    return out;
}

double ground_state_survival_axis(double omega_ref, double b, double bdot,
                                  double omega_target) {
    // Gaussian overlap of the scaled packet (width parameter omega_ref/b^2,
    // phase curvature bdot/b) with the omega_target ground state.
    const double wr = omega_ref / (b * b);
    const double re = wr + omega_target;
    const double im = bdot / b;
    return 2.0 * std::sqrt(wr * omega_target) / std::sqrt(re * re + im * im);
}

double excitation_probability(const RampSchedule& ramp,
                              std::span<const ScaleSample> trajectory) {
    if (trajectory.empty()) throw ConfigError("empty trajectory");
    const ScaleSample& last = trajectory.back();
    const double p =
        ground_state_survival_axis(ramp.omega_start, last.b, last.bdot, ramp.omega_end);
    return 1.0 - p * p * p;
}

double excitation_probability(const RampSchedule& ramp) {
    const auto traj = ermakov_evolve(ramp, 1);
    return excitation_probability(ramp, traj);
}

namespace {

// Composite Simpson over [0, duration] with n (even) intervals.
template <typename F>
double simpson(const F& f, double duration, int n) {
    const double h = duration / n;
    double acc = f(0.0) + f(duration);
    for (int i = 1; i < n; ++i) {
        acc += f(i * h) * ((i % 2) ? 4.0 : 2.0);
    }
    return acc * h / 3.0;
}

}  // namespace

double phase_accumulate(const medium::EffectiveMedium& med, const RampSchedule& ramp,
                        const Constants& c) {
    ramp.validate();
    if (ramp.duration <= 0.0) return 0.0;
    // dE(omega)/hbar = ubar12 * (m omega / (pi hbar))^(3/2) / hbar
    const double prefactor =
        med.ubar12 / c.hbar * std::pow(c.atom_mass / (kPi * c.hbar), 1.5);
    auto rate = [&](double t) { return prefactor * std::pow(ramp.omega_at(t), 1.5); };

    int n = std::max(ramp.sample_count, 16);
    if (n % 2) ++n;
    double coarse = simpson(rate, ramp.duration, n / 2);
    double fine = simpson(rate, ramp.duration, n);
    int doublings = 0;
    while (std::abs(fine - coarse) > 1e-8 * std::abs(fine) && doublings < 8) {
        n *= 2;
        coarse = fine;
        fine = simpson(rate, ramp.duration, n);
        ++doublings;
    }
    return fine;
}

double phase_accumulate_hold(const medium::EffectiveMedium& med, double omega_tilde,
                             double hold_time, const Constants& c) {
    if (!(omega_tilde > 0.0)) throw ConfigError("hold frequency must be positive");
    if (!(hold_time >= 0.0)) throw ConfigError("hold time must be >= 0");
    const double rate =
        med.ubar12 / c.hbar * std::pow(c.atom_mass * omega_tilde / (kPi * c.hbar), 1.5);
    return rate * hold_time;
}

double tdse_excitation_probability(const RampSchedule& ramp, const TdseParams& p) {
    ramp.validate();
    // Scale-covariant problem: work in hbar = m = 1 with omega in rad/s and
    // x in meters-free oscillator units; P_exc is dimensionless either way.
    const double w0 = ramp.omega_start;
    const double w1 = ramp.omega_end;
    const double width0 = 1.0 / std::sqrt(w0);
    const double width1 = 1.0 / std::sqrt(w1);
    const double wmax_width = std::max(width0, width1);
    const double span = p.span_widths * wmax_width;
    if (span < 8.0 * width1) {
        throw ConfigError("tdse grid must span at least 8 final ground-state widths");
    }
    if (p.steps_per_period < 100) {
        throw ConfigError("tdse needs at least 100 steps per trap period");
    }
    if (p.grid_points < 16) throw ConfigError("tdse grid too small");

    const int n = p.grid_points;
    const double dx = span / (n - 1);
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = -0.5 * span + i * dx;

    auto grid_norm = [&](const std::vector<std::complex<double>>& v) {
        double acc = 0.0;
        for (const auto& z : v) acc += std::norm(z);
        return acc * dx;
    };
    auto gaussian = [&](double w) {
        std::vector<std::complex<double>> g(n);
        const double amp = std::pow(w / kPi, 0.25);
        for (int i = 0; i < n; ++i) g[i] = amp * std::exp(-0.5 * w * x[i] * x[i]);
        const double scale = 1.0 / std::sqrt(grid_norm(g));
        for (auto& z : g) z *= scale;
        return g;
    };

    std::vector<std::complex<double>> psi = gaussian(w0);

    if (ramp.duration > 0.0) {
        double wmax = std::max(w0, w1);
        const double dt_max = kTwoPi / wmax / p.steps_per_period;
        const int nsteps =
            std::max(static_cast<int>(std::ceil(ramp.duration / dt_max)), p.min_steps);
        const double dt = ramp.duration / nsteps;
        const double kin = 0.5 / (dx * dx);  // hbar^2/(2m dx^2) with hbar=m=1

        std::vector<std::complex<double>> rhs(n), cp(n), dp(n), dg(n);
        const std::complex<double> ia(0.0, 0.5 * dt);  // i dt / (2 hbar)
        const std::complex<double> off = ia * (-kin);

        for (int step = 0; step < nsteps; ++step) {
            const double w = ramp.omega_at((step + 0.5) * dt);
            // H diag = 2*kin + V; Crank-Nicolson: (1 + ia H) psi' = (1 - ia H) psi
            for (int i = 0; i < n; ++i) {
                const double hd = 2.0 * kin + 0.5 * w * w * x[i] * x[i];
                dg[i] = 1.0 + ia * hd;
                rhs[i] = (1.0 - ia * hd) * psi[i];
            }
            for (int i = 0; i < n - 1; ++i) {
                rhs[i] -= off * psi[i + 1];
                rhs[i + 1] -= off * psi[i];
            }
            // Thomas solve (constant off-diagonal)
            cp[0] = off / dg[0];
            dp[0] = rhs[0] / dg[0];
            for (int i = 1; i < n; ++i) {
                const std::complex<double> den = dg[i] - off * cp[i - 1];
                cp[i] = off / den;
                dp[i] = (rhs[i] - off * dp[i - 1]) / den;
            }
            psi[n - 1] = dp[n - 1];
            for (int i = n - 2; i >= 0; --i) psi[i] = dp[i] - cp[i] * psi[i + 1];
        }
    }

    const double norm = grid_norm(psi);
    if (std::abs(norm - 1.0) > p.norm_tolerance) {
        char msg[128];
        std::snprintf(msg, sizeof(msg),
                      "tdse norm drift %.3e exceeds tolerance %.1e (grid too coarse?)",
                      std::abs(norm - 1.0), p.norm_tolerance);
        throw NormDriftError(msg);
    }

    const auto target = gaussian(w1);
    std::complex<double> overlap = 0.0;
    for (int i = 0; i < n; ++i) overlap += std::conj(target[i]) * psi[i];
    overlap *= dx;
    const double survival = std::norm(overlap) / norm;
    return 1.0 - survival * survival * survival;
}

}  // namespace becgate::dynamics
