#pragma once

// Exact steady state from the complex P-representation: closed-form
// moments as ratios of 1F2 / 2F3 series, and the exact Wigner function.
//
// All hypergeometric arguments are |G|^2/eta^2 (moments) or
// -i (G/2eta) (x - ip)^2 (Wigner), so everything is evaluated in units
// of eta.

#include <tpo/model.hpp>
#include <tpo/parallel.hpp>
#include <tpo/quadrature.hpp>
#include <tpo/semiclassical.hpp>
#include <tpo/specfun.hpp>
#include <tpo/wigner_grid.hpp>

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace tpo::exact {

/// Largest |z| accepted by the 0F1 Wigner kernel.
inline constexpr double max_wigner_argument = 5000.0;
/// Largest G/eta accepted by the moment formulas.
inline constexpr double max_g_over_eta = 100.0;

struct ExactObservables {
    double n = 0.0;
    cplx a2{};
    double a2dag_a2 = 0.0; // <a^dag^2 a^2>
    std::optional<double> g2;
    double x2 = 0.5;
    double p2 = 0.5;
    double xp_sym = 0.0;
    /// Worst relative error estimate over the series involved.
    double series_error = 0.0;

    ObservableSet to_observable_set() const
    {
        ObservableSet s = ObservableSet::from_normal_ordered(n, a2, Method::exact);
        s.g2 = g2;
        return s;
    }
};

namespace detail {

inline SeriesResult checked_pfq(HypergeometricSpec spec, const char* what)
{
    try {
        return pfq(spec);
    } catch (const numerical_error& e) {
        throw numerical_error(std::string("exact: ") + what + ": " + e.what());
    }
}

/// 1F2(1/2; 1/2 - i d, 1/2 + i d; g^2), the common normalizer.
inline SeriesResult normalizer(double d, double g)
{
    const cplx i(0.0, 1.0);
    return checked_pfq({{0.5}, {0.5 - i * d, 0.5 + i * d}, g * g}, "normalizer 1F2");
}

} // namespace detail

inline ExactObservables exact_observables(const ModelParams& params)
{
    const double d = params.delta_over_eta();
    const double g = params.g_over_eta();
    if (g > max_g_over_eta) {
        throw domain_error("exact_observables: G/eta = " + std::to_string(g) + " exceeds validated domain (<= 100)");
    }
    ExactObservables out;
    if (g == 0.0) return out;

    const cplx i(0.0, 1.0);
    const double z = g * g;
    const SeriesResult den = detail::normalizer(d, g);
    const SeriesResult num_n = detail::checked_pfq({{1.5}, {1.5 - i * d, 1.5 + i * d}, z}, "photon number 1F2");
    const SeriesResult num_a2 = detail::checked_pfq({{1.5}, {1.5 - i * d, 0.5 + i * d}, z}, "anomalous 1F2");
    const SeriesResult num_4 =
        detail::checked_pfq({{1.5, 1.5}, {0.5, 1.5 - i * d, 1.5 + i * d}, z}, "fourth-order 2F3");

    const double lorentz = 4.0 * d * d + 1.0;
    out.n = (2.0 * g * g / lorentz * num_n.value / den.value).real();
    // Overall sign chosen to agree with the mean-field alpha_s^2 and with
    // the Lindblad steady state; the often-quoted -G/(2 delta + i eta)
    // prefactor belongs to the opposite sign convention for G.
    out.a2 = g / (2.0 * d + i) * num_a2.value / den.value;
    out.a2dag_a2 = (g * g / lorentz * num_4.value / den.value).real();
    if (out.n > 0.0) out.g2 = out.a2dag_a2 / (out.n * out.n);
    out.x2 = out.n + out.a2.real() + 0.5;
    out.p2 = out.n - out.a2.real() + 0.5;
    out.xp_sym = out.a2.imag();
    out.series_error = std::max({den.estimated_relative_error, num_n.estimated_relative_error,
                                 num_a2.estimated_relative_error, num_4.estimated_relative_error});
    return out;
}

/// Exact Wigner function with the normalizer cached; W integrates to 1
/// under dx dp / 2.
class ExactWigner {
public:
    explicit ExactWigner(const ModelParams& params)
        : params_(params),
          b_(0.5, -params.delta_over_eta()),
          scale_(params.g_over_eta() / 2.0),
          log_norm_(std::log(detail::normalizer(params.delta_over_eta(), params.g_over_eta()).value.real()))
    {
    }

    double operator()(double x, double p) const
    {
        const cplx w(x, -p);
        const cplx z = cplx(0.0, -scale_) * w * w;
        if (std::abs(z) > max_wigner_argument) {
            throw domain_error("exact_wigner: point (x=" + std::to_string(x) + ", p=" + std::to_string(p) +
                               ") outside validated 0F1 domain |z| <= 5000");
        }
        const SeriesResult f = pfq({{}, {b_}, z});
        const double r2 = x * x + p * p;
        const double mag = std::abs(f.value);
        if (mag == 0.0) return 0.0;
        return 2.0 / std::numbers::pi * std::exp(2.0 * std::log(mag) - r2 - log_norm_);
    }

    const ModelParams& params() const { return params_; }

private:
    ModelParams params_;
    cplx b_;
    double scale_;
    double log_norm_;
};

inline double exact_wigner(const ModelParams& params, double x, double p) { return ExactWigner(params)(x, p); }

/// Symmetric half-width covering both wells and the tails.
/// Uses the exact <x^2> so that the flat-topped critical distribution is
/// covered as well as the bimodal one. Clamped so that the grid corners stay
/// inside the validated series domain.
inline double wigner_half_width(const ModelParams& params)
{
    const double n_s = semiclassical::photon_number(params);
    const double x2 = exact_observables(params).x2;
    const double wanted = std::max({8.0, 1.5 * std::sqrt(2.0 * n_s + 1.0), 4.0 * std::sqrt(x2)});
    const double g = params.g_over_eta();
    if (g <= 0.0) return wanted;
    return std::min(wanted, 0.999 * std::sqrt(max_wigner_argument / g));
}

struct ReducedWignerOptions {
    std::optional<double> p_half_width; // defaults to wigner_half_width
    int p_points = 401;                  // odd
};

struct ReducedWignerValue {
    double value = 0.0;
    /// Simpson step-halving difference, |S(h) - S(2h)| / 15.
    double quadrature_error = 0.0;
};

class ExactReducedWigner {
public:
    explicit ExactReducedWigner(const ModelParams& params, ReducedWignerOptions opt = {})
        : wigner_(params), points_(opt.p_points)
    {
        if (points_ < 5 || points_ % 2 == 0) throw domain_error("reduced wigner: p_points must be odd and >= 5");
        half_width_ = opt.p_half_width ? *opt.p_half_width : wigner_half_width(params);
    }

    ReducedWignerValue evaluate(double x) const
    {
        const auto axis = symmetric_axis(half_width_, points_);
        std::vector<double> f(axis.size());
        for (std::size_t i = 0; i < axis.size(); ++i) f[i] = 0.5 * wigner_(x, axis[i]);
        const double h = axis[1] - axis[0];
        const double fine = simpson(f, h);
        double coarse = fine;
        if ((points_ - 1) % 4 == 0) {
            std::vector<double> g;
            for (std::size_t i = 0; i < f.size(); i += 2) g.push_back(f[i]);
            coarse = simpson(g, 2.0 * h);
        }
        return {fine, std::abs(fine - coarse) / 15.0};
    }

    double operator()(double x) const { return evaluate(x).value; }

    double half_width() const { return half_width_; }

private:
    ExactWigner wigner_;
    int points_;
    double half_width_ = 0.0;
};

inline double exact_reduced_wigner(const ModelParams& params, double x) { return ExactReducedWigner(params)(x); }

inline WignerGrid exact_wigner_grid(const ModelParams& params, double half_width, int resolution,
                                    unsigned threads = 1)
{
    const ExactWigner w(params);
    WignerGrid g = sample_grid(w, half_width, resolution, threads);
    g.method = Method::exact;
    g.params = params;
    return g;
}

} // namespace tpo::exact
