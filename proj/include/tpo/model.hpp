#pragma once

// Core value types for the two-photon driven, two-photon dissipative
// oscillator. Rates (detuning, pump, dissipation) share one unit; most
// numerics work internally in units of the dissipation rate eta.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tpo {

using cplx = std::complex<double>;

/// Bad input: parameters outside a documented domain, non-finite values.
class domain_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed to deliver (non-convergence, blow-up).
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
inline double require_finite(double v, const char* what)
{
    if (!std::isfinite(v)) {
        throw domain_error(std::string(what) + " must be finite");
    }
    return v;
}
} // namespace detail

/// Physical parameters (delta, G, eta) of one oscillator instance.
class ModelParams {
public:
    ModelParams(double delta, double g, double eta)
        : delta_(detail::require_finite(delta, "delta")),
          g_(detail::require_finite(g, "g")),
          eta_(detail::require_finite(eta, "eta"))
    {
        if (eta_ <= 0.0) throw domain_error("eta must be > 0");
        if (g_ < 0.0) throw domain_error("g must be >= 0");
    }

    double delta() const { return delta_; }
    double g() const { return g_; }
    double eta() const { return eta_; }

    double delta_over_eta() const { return delta_ / eta_; }
    double g_over_eta() const { return g_ / eta_; }

    /// Same physics with every rate multiplied by s (time runs 1/s faster).
    ModelParams rescaled(double s) const
    {
        if (!(s > 0.0)) throw domain_error("rescale factor must be > 0");
        return {s * delta_, s * g_, s * eta_};
    }

    friend bool operator==(const ModelParams&, const ModelParams&) = default;

private:
    double delta_;
    double g_;
    double eta_;
};

struct QuadratureState {
    double x = 0.0;
    double p = 0.0;
};

/// Coherent field amplitude alpha = (x + i p) / sqrt(2).
struct ComplexAmplitude {
    double re = 0.0;
    double im = 0.0;

    cplx value() const { return {re, im}; }
    static ComplexAmplitude from(cplx a) { return {a.real(), a.imag()}; }
};

inline QuadratureState to_quadratures(ComplexAmplitude a)
{
    detail::require_finite(a.re, "amplitude re");
    detail::require_finite(a.im, "amplitude im");
    return {std::sqrt(2.0) * a.re, std::sqrt(2.0) * a.im};
}

inline ComplexAmplitude to_amplitude(QuadratureState q)
{
    detail::require_finite(q.x, "quadrature x");
    detail::require_finite(q.p, "quadrature p");
    return {q.x / std::sqrt(2.0), q.p / std::sqrt(2.0)};
}

/// Gap between ground and first excited state of the quadratic
/// Hamiltonian; empty when the gap has closed (delta < G).
inline std::optional<double> energy_gap(const ModelParams& params)
{
    const double d = params.delta();
    const double g = params.g();
    if (d < g) return std::nullopt;
    return std::sqrt((d - g) * (d + g));
}

enum class Method { semiclassical, exact, boltzmann, langevin };

inline std::string_view to_string(Method m)
{
    switch (m) {
    case Method::semiclassical: return "semiclassical";
    case Method::exact: return "exact";
    case Method::boltzmann: return "boltzmann";
    case Method::langevin: return "langevin";
    }
    return "unknown";
}

inline std::optional<Method> parse_method(std::string_view s)
{
    for (Method m : {Method::semiclassical, Method::exact, Method::boltzmann, Method::langevin}) {
        if (to_string(m) == s) return m;
    }
    return std::nullopt;
}

struct ObservableErrors {
    double n = 0.0;
    double re_a2 = 0.0;
    double im_a2 = 0.0;
    double x2 = 0.0;
    double p2 = 0.0;
    double xp_sym = 0.0;
    double g2 = 0.0;
};

/// Steady-state observables. x2, p2, xp_sym are symmetrically ordered
/// quadrature moments; g2 is absent when n == 0.
struct ObservableSet {
    double n = 0.0;
    cplx a2{};
    double x2 = 0.5;
    double p2 = 0.5;
    double xp_sym = 0.0;
    std::optional<double> g2;
    Method method = Method::exact;
    std::optional<ObservableErrors> errors; // langevin only

    /// Fill the quadrature moments from n and a2.
    static ObservableSet from_normal_ordered(double n, cplx a2, Method m)
    {
        ObservableSet s;
        s.n = n;
        s.a2 = a2;
        s.x2 = n + a2.real() + 0.5;
        s.p2 = n - a2.real() + 0.5;
        s.xp_sym = a2.imag();
        s.method = m;
        return s;
    }

    /// Fill n and a2 from symmetric quadrature moments (inverse relation).
    static ObservableSet from_quadratures(double x2, double p2, double xp, Method m)
    {
        ObservableSet s;
        s.x2 = x2;
        s.p2 = p2;
        s.xp_sym = xp;
        s.n = 0.5 * (x2 + p2 - 1.0);
        s.a2 = {0.5 * (x2 - p2), xp};
        s.method = m;
        return s;
    }

    /// Largest absolute violation of the quadrature/normal-order identities.
    double consistency_residual() const
    {
        const double r1 = std::abs(x2 - (n + a2.real() + 0.5));
        const double r2 = std::abs(p2 - (n - a2.real() + 0.5));
        const double r3 = std::abs(xp_sym - a2.imag());
        return std::max({r1, r2, r3});
    }
};

/// Second-order correlation from Wigner (symmetric) moments.
inline double g2_from_wigner_moments(double x2, double p2, double x4, double x2p2, double p4)
{
    const double den = x2 + p2 - 1.0;
    return (x4 + 2.0 * x2p2 + p4 - 4.0 * x2 - 4.0 * p2 + 2.0) / (den * den);
}

} // namespace tpo
