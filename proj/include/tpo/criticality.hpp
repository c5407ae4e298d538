#pragma once

// Critical exponents at delta = G and the eta -> eta/N rescaling test of
// the reduced near-critical dynamics.

#include <tpo/langevin.hpp>
#include <tpo/model.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace tpo::criticality {

/// Scaling powers of x, p and time under eta -> eta/N.
struct ScalingExponents {
    double nu = 1.0 / 3.0;
    double mu = 0.0;
    double epsilon = 1.0 / 3.0;

    /// Builds a set with epsilon = nu - mu imposed.
    static ScalingExponents consistent(double nu, double mu) { return {nu, mu, nu - mu}; }
    bool is_consistent(double tol = 1e-12) const { return std::abs(epsilon - (nu - mu)) <= tol; }
};

inline constexpr ScalingExponents predicted_exponents{1.0 / 3.0, 0.0, 1.0 / 3.0};

struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<std::pair<double, double>> points; // (log G/eta, log observable)
};

enum class SignHandling { as_is, negate };

/// Ordinary least squares on (log u, log v); needs at least `min_points`.
inline ExponentFit log_log_fit(std::span<const double> u, std::span<const double> v, std::size_t min_points = 2)
{
    if (u.size() != v.size()) throw domain_error("log_log_fit: size mismatch");
    if (u.size() < min_points) {
        throw domain_error("log_log_fit: need at least " + std::to_string(min_points) + " points");
    }
    ExponentFit fit;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (!(u[i] > 0.0) || !(v[i] > 0.0)) {
            throw numerical_error("log_log_fit: non-positive value at point " + std::to_string(i));
        }
        fit.points.emplace_back(std::log(u[i]), std::log(v[i]));
    }
    const double n = static_cast<double>(fit.points.size());
    double mx = 0.0, my = 0.0;
    for (auto [a, b] : fit.points) {
        mx += a;
        my += b;
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (auto [a, b] : fit.points) {
        sxx += (a - mx) * (a - mx);
        sxy += (a - mx) * (b - my);
        syy += (b - my) * (b - my);
    }
    if (!(sxx > 0.0)) throw domain_error("log_log_fit: abscissae must not all coincide");
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy > 0.0 ? std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0) : 1.0;
    return fit;
}

/// Power-law exponent of `observable` at delta = G (eta = 1) over the
/// given G/eta values.
inline ExponentFit fit_exponent(const std::function<double(const ModelParams&)>& observable,
                                std::span<const double> g_over_eta, SignHandling sign = SignHandling::as_is)
{
    std::vector<double> v;
    v.reserve(g_over_eta.size());
    for (double g : g_over_eta) {
        const double raw = observable(ModelParams(g, g, 1.0));
        v.push_back(sign == SignHandling::negate ? -raw : raw);
    }
    return log_log_fit(g_over_eta, v, 5);
}

inline ModelParams scale_params(const ModelParams& params, double n_scale)
{
    if (!(n_scale > 0.0) || !std::isfinite(n_scale)) throw domain_error("scale_params: n_scale must be > 0");
    return ModelParams(params.delta(), params.g(), params.eta() / n_scale);
}

struct ScalingPoint {
    double n_scale = 1.0;
    ModelParams params{0.0, 0.0, 1.0};
    langevin::MomentEstimate x2;
    langevin::MomentEstimate p2;
    /// Relaxation time of x^2, in units of the base 1/eta.
    double relaxation_time = 0.0;
};

struct ScalingReport {
    std::vector<ScalingPoint> points;
    /// Last point relative to the first.
    double x2_ratio = 0.0, x2_ratio_error = 0.0, x2_ratio_expected = 0.0;
    double p2_ratio = 0.0, p2_ratio_error = 0.0;
    ScalingExponents fitted;       // epsilon = nu - mu imposed
    double epsilon_measured = 0.0; // from the relaxation times
    bool x2_ratio_ok = false;
    bool p2_ratio_ok = false;
    bool exponents_ok = false;
    bool epsilon_ok = false;

    bool ok() const { return x2_ratio_ok && p2_ratio_ok && exponents_ok; }
};

/// Runs the reduced critical system at each eta/N. The physical time step
/// stays fixed; burn-in and sampling windows grow as N^{1/3} to follow
/// the critical slowing down.
inline ScalingReport verify_reduced_model_scaling(const ModelParams& params, std::span<const double> n_scale_list,
                                                  langevin::TrajectoryConfig config = {}, unsigned threads = 1,
                                                  double exponent_tolerance = 0.03, double epsilon_tolerance = 0.05)
{
    if (params.delta() != params.g()) throw domain_error("verify_reduced_model_scaling: requires delta = G");
    if (n_scale_list.size() < 2) throw domain_error("verify_reduced_model_scaling: need at least two N values");
    config.system = langevin::System::reduced_critical;

    ScalingReport rep;
    std::vector<double> ns, x2s, p2s, taus;
    for (double n : n_scale_list) {
        ScalingPoint pt;
        pt.n_scale = n;
        pt.params = scale_params(params, n);
        langevin::TrajectoryConfig c = config;
        const double slow = std::cbrt(n);
        c.dt = config.dt / n;
        c.t_burn = config.t_burn * slow / n;
        c.t_sample = config.t_sample * slow / n;
        const auto r = langevin::run_ensemble(pt.params, c, threads);
        pt.x2 = r[langevin::m_x2];
        pt.p2 = r[langevin::m_p2];
        // Convert from units of 1/eta_N to units of 1/eta.
        pt.relaxation_time = pt.x2.autocorrelation_time_estimate * n;
        ns.push_back(n);
        x2s.push_back(pt.x2.mean);
        p2s.push_back(pt.p2.mean);
        taus.push_back(pt.relaxation_time);
        rep.points.push_back(pt);
    }

    const ScalingPoint& a = rep.points.front();
    const ScalingPoint& b = rep.points.back();
    const auto ratio = [](const langevin::MomentEstimate& num, const langevin::MomentEstimate& den) {
        const double r = num.mean / den.mean;
        const double rel = std::hypot(num.std_error / num.mean, den.std_error / den.mean);
        return std::pair{r, std::abs(r) * rel};
    };
    std::tie(rep.x2_ratio, rep.x2_ratio_error) = ratio(b.x2, a.x2);
    std::tie(rep.p2_ratio, rep.p2_ratio_error) = ratio(b.p2, a.p2);
    rep.x2_ratio_expected = std::pow(b.n_scale / a.n_scale, 2.0 * predicted_exponents.nu);
    rep.x2_ratio_ok = std::abs(rep.x2_ratio - rep.x2_ratio_expected) <= 3.0 * rep.x2_ratio_error;
    rep.p2_ratio_ok = std::abs(rep.p2_ratio - 1.0) <= 3.0 * rep.p2_ratio_error;

    const double nu = log_log_fit(ns, x2s).slope / 2.0;
    const double mu = log_log_fit(ns, p2s).slope / 2.0;
    rep.fitted = ScalingExponents::consistent(nu, mu);
    rep.exponents_ok = std::abs(nu - predicted_exponents.nu) <= exponent_tolerance &&
                       std::abs(mu - predicted_exponents.mu) <= exponent_tolerance;
    bool taus_positive = true;
    for (double t : taus) taus_positive = taus_positive && t > 0.0;
    if (taus_positive) {
        rep.epsilon_measured = log_log_fit(ns, taus).slope;
        rep.epsilon_ok = std::abs(rep.epsilon_measured - rep.fitted.epsilon) <= epsilon_tolerance;
    }
    return rep;
}

} // namespace tpo::criticality
