#pragma once

// Complex special functions: Gamma, generalized hypergeometric pFq by
// compensated Taylor summation, physicists' Hermite polynomials.

#include <tpo/model.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <type_traits>
#include <string>
#include <vector>

namespace tpo {

/// Neumaier-compensated accumulator; works for real and complex T.
template <class T>
class CompensatedSum {
public:
    void add(const T& v)
    {
        if constexpr (std::is_floating_point_v<T>) {
            add_real(sum_, carry_, v);
        } else {
            auto re = sum_.real(), cre = carry_.real();
            auto im = sum_.imag(), cim = carry_.imag();
            add_real(re, cre, v.real());
            add_real(im, cim, v.imag());
            sum_ = T(re, im);
            carry_ = T(cre, cim);
        }
    }

    T value() const { return sum_ + carry_; }

private:
    template <class R>
    static void add_real(R& sum, R& carry, R v)
    {
        const R t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }

    T sum_{};
    T carry_{};
};

namespace detail {

inline bool is_nonpositive_integer(cplx z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Lanczos approximation, g = 671/128, 14 terms (Numerical Recipes 3rd ed.).
inline cplx log_gamma_lanczos(cplx z)
{
    static constexpr std::array<double, 14> cof = {
        57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
        -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
        -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
        .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
        -.261908384015814087e-4, .368991826595316234e-5};
    cplx y = z;
    const cplx tmp = z + 5.24218750000000000;
    const cplx head = (z + 0.5) * std::log(tmp) - tmp;
    cplx ser = 0.999999999999997092;
    for (double c : cof) {
        y += 1.0;
        ser += c / y;
    }
    return head + std::log(2.5066282746310005 * ser / z);
}

} // namespace detail

/// Gamma(z) for complex z. Reflection is used for Re z < 1/2.
inline cplx complex_gamma(cplx z)
{
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw domain_error("complex_gamma: non-finite argument");
    }
    if (detail::is_nonpositive_integer(z)) {
        throw domain_error("complex_gamma: pole at non-positive integer " + std::to_string(z.real()));
    }
    constexpr double pi = std::numbers::pi;
    if (z.real() < 0.5) {
        return pi / (std::sin(pi * z) * std::exp(detail::log_gamma_lanczos(1.0 - z)));
    }
    return std::exp(detail::log_gamma_lanczos(z));
}

inline double gamma(double x) { return complex_gamma(cplx(x, 0.0)).real(); }

/// Physicists' Hermite polynomial H_k(z), three-term recurrence.
inline cplx hermite(int k, cplx z)
{
    if (k < 0 || k > 64) throw domain_error("hermite: order must lie in [0, 64]");
    cplx h_prev = 1.0;
    if (k == 0) return h_prev;
    cplx h = 2.0 * z;
    for (int j = 1; j < k; ++j) {
        const cplx next = 2.0 * z * h - 2.0 * static_cast<double>(j) * h_prev;
        h_prev = h;
        h = next;
    }
    return h;
}

struct HypergeometricSpec {
    std::vector<cplx> numerator_params;
    std::vector<cplx> denominator_params;
    cplx argument{};
};

struct SeriesResult {
    cplx value{};
    int terms_used = 0;
    double estimated_relative_error = 0.0;
    double max_term_magnitude = 0.0;

    /// Decimal digits lost to cancellation, log10(max term / |value|).
    double digits_lost() const
    {
        const double v = std::abs(value);
        if (v == 0.0) return std::numeric_limits<double>::infinity();
        return std::max(0.0, std::log10(max_term_magnitude / v));
    }
};

struct PfqOptions {
    double tolerance = 1e-15;   // |t_k| / |S| threshold
    int consecutive_small = 3;  // required run of small terms
    int max_terms = 100000;
};

/// Generalized hypergeometric pFq(a; b; z) by its Taylor series.
inline SeriesResult pfq(const HypergeometricSpec& spec, const PfqOptions& opt = {})
{
    for (const cplx& b : spec.denominator_params) {
        if (detail::is_nonpositive_integer(b)) {
            throw domain_error("pfq: denominator parameter is zero or a negative integer");
        }
    }
    const cplx z = spec.argument;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw domain_error("pfq: non-finite argument");
    }

    SeriesResult out;
    out.max_term_magnitude = 1.0;
    if (z == cplx(0.0, 0.0)) {
        out.value = 1.0;
        out.terms_used = 1;
        return out;
    }

    CompensatedSum<cplx> sum;
    sum.add(1.0);
    cplx term = 1.0;
    int small_run = 0;
    for (int k = 0; k < opt.max_terms; ++k) {
        const double kd = static_cast<double>(k);
        cplx num = z;
        for (const cplx& a : spec.numerator_params) num *= (a + kd);
        cplx den = kd + 1.0;
        for (const cplx& b : spec.denominator_params) den *= (b + kd);
        term *= num / den;
        sum.add(term);

        const double mag = std::abs(term);
        out.max_term_magnitude = std::max(out.max_term_magnitude, mag);
        const double s = std::abs(sum.value());
        if (term == cplx(0.0, 0.0) || (s > 0.0 && mag / s < opt.tolerance)) {
            if (++small_run >= opt.consecutive_small) {
                out.value = sum.value();
                out.terms_used = k + 2;
                const double eps = std::numeric_limits<double>::epsilon();
                out.estimated_relative_error =
                    s > 0.0 ? 2.0 * eps * out.max_term_magnitude / s + mag / s : 0.0;
                return out;
            }
        } else {
            small_run = 0;
        }
        if (!std::isfinite(mag)) throw numerical_error("pfq: series overflowed");
    }
    throw numerical_error("pfq: no convergence within " + std::to_string(opt.max_terms) + " terms");
}

/// Convenience: pFq value only.
inline cplx pfq_value(std::vector<cplx> a, std::vector<cplx> b, cplx z)
{
    return pfq({std::move(a), std::move(b), z}).value;
}

} // namespace tpo
