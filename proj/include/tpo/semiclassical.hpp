#pragma once

// Mean-field steady states and deterministic dynamics of the field
// amplitude: d(alpha)/dt = i*delta*alpha - i*G*conj(alpha) - eta*|alpha|^2*alpha.

#include <tpo/model.hpp>

#include <cmath>
#include <vector>

namespace tpo::semiclassical {

enum class Branch { plus, minus, vacuum };

struct SteadyStateBranch {
    double n_s = 0.0;
    cplx phase_factor{1.0, 0.0}; // exp(2i*phi)
    double x_s = 0.0;
    double p_s = 0.0;
    Branch branch = Branch::vacuum;

    ComplexAmplitude amplitude() const { return to_amplitude({x_s, p_s}); }
};

/// Nontrivial photon number sqrt(G^2 - delta^2)/eta above the pump
/// threshold, zero otherwise.
inline double photon_number(const ModelParams& params)
{
    const double d = params.delta(), g = params.g();
    if (g * g <= d * d) return 0.0;
    return std::sqrt((g - d) * (g + d)) / params.eta();
}

/// All stationary solutions: vacuum, plus the +/- pair when G^2 > delta^2.
inline std::vector<SteadyStateBranch> steady_states(const ModelParams& params)
{
    std::vector<SteadyStateBranch> out;
    const double d = params.delta(), g = params.g(), eta = params.eta();
    if (g * g > d * d) {
        const double root = std::sqrt((g - d) * (g + d));
        const double n_s = root / eta;
        const cplx phase = cplx(0.0, -g) / cplx(root, -d);
        // Quadratures in closed form; avoids the branch cut of sqrt(phase).
        const double x_mag = std::pow(g + d, 0.75) * std::pow(g - d, 0.25) / std::sqrt(g * eta);
        const double p_mag = std::pow(g + d, 0.25) * std::pow(g - d, 0.75) / std::sqrt(g * eta);
        out.push_back({n_s, phase, x_mag, -p_mag, Branch::plus});
        out.push_back({n_s, phase, -x_mag, p_mag, Branch::minus});
    }
    out.push_back({0.0, cplx(1.0, 0.0), 0.0, 0.0, Branch::vacuum});
    return out;
}

inline cplx drift(const ModelParams& params, cplx a)
{
    const cplx i(0.0, 1.0);
    return i * params.delta() * a - i * params.g() * std::conj(a) - params.eta() * std::norm(a) * a;
}

inline ComplexAmplitude drift(const ModelParams& params, ComplexAmplitude a)
{
    return ComplexAmplitude::from(drift(params, a.value()));
}

struct TrajectorySample {
    double t = 0.0;
    ComplexAmplitude alpha;
};

/// Classical RK4 integration; samples every `stride` steps (the initial
/// and final states are always included).
inline std::vector<TrajectorySample> evolve(const ModelParams& params, ComplexAmplitude alpha0,
                                            double t_final, double dt, int stride = 1)
{
    if (!(dt > 0.0) || !(t_final >= 0.0) || stride < 1) {
        throw domain_error("evolve: need dt > 0, t_final >= 0, stride >= 1");
    }
    const double n_s = photon_number(params);
    const double rate = std::max({std::abs(params.delta()), params.g(), params.eta() * n_s});
    if (dt * rate > 0.1) {
        throw domain_error("evolve: step too large, dt*max(|delta|, G, eta*n_s) must be <= 0.1");
    }
    const double limit = 1e3 * std::max(n_s, 1.0);

    const auto steps = static_cast<long>(std::llround(t_final / dt));
    std::vector<TrajectorySample> out;
    out.reserve(static_cast<std::size_t>(steps / stride + 2));
    cplx a = alpha0.value();
    out.push_back({0.0, alpha0});
    for (long k = 1; k <= steps; ++k) {
        const cplx k1 = drift(params, a);
        const cplx k2 = drift(params, a + 0.5 * dt * k1);
        const cplx k3 = drift(params, a + 0.5 * dt * k2);
        const cplx k4 = drift(params, a + dt * k3);
        a += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || std::norm(a) > limit) {
            throw numerical_error("evolve: trajectory diverged at t = " + std::to_string(k * dt));
        }
        if (k % stride == 0 || k == steps) out.push_back({k * dt, ComplexAmplitude::from(a)});
    }
    return out;
}

/// Coherent-state observables at the mean-field solution.
inline ObservableSet observables(const ModelParams& params)
{
    const auto branches = steady_states(params);
    const SteadyStateBranch& b = branches.front();
    const cplx a = b.amplitude().value();
    ObservableSet s = ObservableSet::from_normal_ordered(std::norm(a), a * a, Method::semiclassical);
    if (s.n > 0.0) s.g2 = 1.0;
    return s;
}

} // namespace tpo::semiclassical
