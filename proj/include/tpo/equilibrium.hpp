#pragma once

// Effective Boltzmann-Gibbs description near the critical point.
//
// The x quadrature sees the Landau potential
//     U(x) = ((delta - G)/2) x^2 + (eta^2 / 48 G) x^6
// at temperature T_eff = G/2, and p is Gaussian (variance 1/4) around the
// ridge p = -(eta/4G) x^3. All p-moments reduce to one-dimensional
// integrals over the reduced distribution exp(-U/T_eff)/Z through
// Hermite polynomials.

#include <tpo/model.hpp>
#include <tpo/quadrature.hpp>
#include <tpo/specfun.hpp>
#include <tpo/wigner_grid.hpp>

#include <cmath>
#include <numbers>
#include <vector>

namespace tpo::equilibrium {

/// Auxiliary velocity v = -2 G p - eta x^3 / 2.
struct AuxiliaryVelocity {
    double v = 0.0;

    static AuxiliaryVelocity from(const ModelParams& params, double x, double p)
    {
        return {-2.0 * params.g() * p - 0.5 * params.eta() * x * x * x};
    }

    double momentum(const ModelParams& params, double x) const
    {
        return -(v + 0.5 * params.eta() * x * x * x) / (2.0 * params.g());
    }
};

class EffectiveEquilibrium {
public:
    explicit EffectiveEquilibrium(const ModelParams& params)
        : params_(params),
          mass_(0.5 / params.g()),
          t_eff_(0.5 * params.g()),
          quad_coeff_(0.5 * (params.delta() - params.g())),
          sextic_coeff_(params.eta() * params.eta() / (48.0 * params.g()))
    {
        if (!(params.g() > 0.0)) throw domain_error("equilibrium: requires G > 0");
        // U_min: zero above threshold, negative in the double well.
        if (quad_coeff_ < 0.0) {
            const double x4 = -quad_coeff_ / (3.0 * sextic_coeff_);
            u_min_ = potential(std::pow(x4, 0.25));
        }
        cutoff_ = find_cutoff();
        const double z_shifted = adaptive_simpson([this](double x) { return shifted_weight(x); }, -cutoff_,
                                                  cutoff_, 1e-13 * rough_mass())
                                     .value;
        log_partition_ = std::log(z_shifted) - u_min_ / t_eff_;
    }

    const ModelParams& params() const { return params_; }
    double mass() const { return mass_; }
    double t_eff() const { return t_eff_; }
    double quad_coeff() const { return quad_coeff_; }
    double sextic_coeff() const { return sextic_coeff_; }
    /// log Z with Z = integral exp(-U/T_eff) dx.
    double log_partition() const { return log_partition_; }
    /// Integration half-width; U/T_eff >= 40 (relative to the minimum) beyond it.
    double cutoff() const { return cutoff_; }
    /// eta / 4G, slope of the p ridge in x^3.
    double ridge_coeff() const { return params_.eta() / (4.0 * params_.g()); }

    double potential(double x) const
    {
        const double x2 = x * x;
        return quad_coeff_ * x2 + sextic_coeff_ * x2 * x2 * x2;
    }

    /// x-minimizers of U (0 above threshold).
    double well_position() const
    {
        if (quad_coeff_ >= 0.0) return 0.0;
        return std::pow(-quad_coeff_ / (3.0 * sextic_coeff_), 0.25);
    }

    double reduced_wigner(double x) const
    {
        return std::exp(-(potential(x) - u_min_) / t_eff_ - (log_partition_ + u_min_ / t_eff_));
    }

    /// Full (x, p) distribution normalized under dx dp / 2.
    double boltzmann_wigner(double x, double p) const
    {
        const double ridge = p + ridge_coeff() * x * x * x;
        const double log_z0 = std::log(0.5 * std::sqrt(0.5 * std::numbers::pi)) + log_partition_;
        return std::exp(-2.0 * ridge * ridge - (potential(x) - u_min_) / t_eff_ - (log_z0 + u_min_ / t_eff_));
    }

    /// Symmetric moment <p^k x^m>, k <= 8, m <= 12.
    double moment(int k, int m) const
    {
        if (k < 0 || k > 8 || m < 0 || m > 12) throw domain_error("moment: need 0 <= k <= 8, 0 <= m <= 12");
        const double c = ridge_coeff();
        const cplx i(0.0, 1.0);
        const cplx pref = std::pow(-1.0, k) / std::pow(cplx(0.0, 2.0 * std::sqrt(2.0)), k);
        auto integrand_c = [&](double x) {
            const cplx h = hermite(k, i * std::sqrt(2.0) * c * x * x * x);
            return pref * h * std::pow(x, m) * shifted_weight(x);
        };
        // Scale for the absolute tolerance from a coarse pass.
        const int coarse_n = 2001;
        const auto axis = symmetric_axis(cutoff_, coarse_n);
        std::vector<double> mag(axis.size());
        for (std::size_t j = 0; j < axis.size(); ++j) mag[j] = std::abs(integrand_c(axis[j]));
        const double scale = std::max(simpson(mag, axis[1] - axis[0]), 1e-300);

        const double re = adaptive_simpson([&](double x) { return integrand_c(x).real(); }, -cutoff_, cutoff_,
                                           1e-13 * scale)
                              .value;
        const double im = adaptive_simpson([&](double x) { return integrand_c(x).imag(); }, -cutoff_, cutoff_,
                                           1e-13 * scale)
                              .value;
        if (std::abs(im) > 1e-10 * std::max(std::abs(re), scale)) {
            throw numerical_error("moment: imaginary residue exceeds tolerance");
        }
        return re * std::exp(-u_min_ / t_eff_ - log_partition_);
    }

private:
    double shifted_weight(double x) const { return std::exp(-(potential(x) - u_min_) / t_eff_); }

    double find_cutoff() const
    {
        double x = std::max(1.0, 2.0 * well_position());
        while ((potential(x) - u_min_) / t_eff_ < 40.0 || x < well_position()) x *= 1.05;
        return x;
    }

    double rough_mass() const
    {
        const auto axis = symmetric_axis(cutoff_, 2001);
        std::vector<double> f(axis.size());
        for (std::size_t j = 0; j < axis.size(); ++j) f[j] = shifted_weight(axis[j]);
        return simpson(f, axis[1] - axis[0]);
    }

    ModelParams params_;
    double mass_;
    double t_eff_;
    double quad_coeff_;
    double sextic_coeff_;
    double u_min_ = 0.0;
    double cutoff_ = 0.0;
    double log_partition_ = 0.0;
};

inline double effective_potential(const EffectiveEquilibrium& eq, double x) { return eq.potential(x); }
inline double boltzmann_wigner(const EffectiveEquilibrium& eq, double x, double p) { return eq.boltzmann_wigner(x, p); }
inline double reduced_wigner(const EffectiveEquilibrium& eq, double x) { return eq.reduced_wigner(x); }
inline double moment(const EffectiveEquilibrium& eq, int k, int m) { return eq.moment(k, m); }

/// Maximizers (x, p) of the full distribution: U-minimum on the ridge.
inline QuadratureState boltzmann_peak(const EffectiveEquilibrium& eq)
{
    const double x = eq.well_position();
    return {x, -eq.ridge_coeff() * x * x * x};
}

struct CriticalClosedForms {
    ObservableSet observables; // g2 = 2 (large G/eta value)
    double g2_x_only = 2.0;    // <x^4>/<x^2>^2 at finite G/eta
    double x4 = 0.0;
};

/// Closed-form critical-point values (delta = G), pure powers of G/eta.
inline CriticalClosedForms critical_closed_forms(const ModelParams& params)
{
    const double r = params.g_over_eta();
    if (!(r > 0.0)) throw domain_error("critical_closed_forms: requires G > 0");
    const double g16 = gamma(1.0 / 6.0), g56 = gamma(5.0 / 6.0), g76 = gamma(7.0 / 6.0);
    const double c23 = std::cbrt(9.0); // 3^{2/3}
    const double x2 = std::sqrt(std::numbers::pi) / (c23 * g76) * std::pow(r, 2.0 / 3.0);
    const double xp = -c23 * g56 / g16 * std::cbrt(r);
    // <x^4> = (4G/eta) * (-xp)
    const double x4 = 4.0 * r * (-xp);
    CriticalClosedForms out;
    out.observables = ObservableSet::from_quadratures(x2, 0.5, xp, Method::boltzmann);
    out.observables.g2 = 2.0;
    out.g2_x_only = g56 * g16 / std::numbers::pi;
    out.x4 = x4;
    return out;
}

/// Observables from the equilibrium distribution at any detuning.
inline ObservableSet boltzmann_observables(const ModelParams& params)
{
    const EffectiveEquilibrium eq(params);
    const double x2 = eq.moment(0, 2);
    const double p2 = eq.moment(2, 0);
    const double xp = eq.moment(1, 1);
    const double x4 = eq.moment(0, 4);
    const double x2p2 = eq.moment(2, 2);
    const double p4 = eq.moment(4, 0);
    ObservableSet s = ObservableSet::from_quadratures(x2, p2, xp, Method::boltzmann);
    if (s.n > 0.0) s.g2 = g2_from_wigner_moments(x2, p2, x4, x2p2, p4);
    return s;
}

inline WignerGrid boltzmann_wigner_grid(const ModelParams& params, double half_width, int resolution,
                                        unsigned threads = 1)
{
    const EffectiveEquilibrium eq(params);
    WignerGrid g = sample_grid([&](double x, double p) { return eq.boltzmann_wigner(x, p); }, half_width,
                               resolution, threads);
    g.method = Method::boltzmann;
    g.params = params;
    return g;
}

} // namespace tpo::equilibrium
