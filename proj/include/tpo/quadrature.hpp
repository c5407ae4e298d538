#pragma once

// One-dimensional quadrature: composite Simpson on uniform samples and
// recursive adaptive Simpson.

#include <tpo/model.hpp>

#include <cmath>
#include <span>
#include <vector>

namespace tpo {

/// Composite Simpson on an odd number of uniformly spaced samples.
inline double simpson(std::span<const double> f, double h)
{
    const std::size_t n = f.size();
    if (n < 3 || n % 2 == 0) throw domain_error("simpson: need an odd number (>= 3) of samples");
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        (i % 2 ? odd : even) += f[i];
    }
    return h / 3.0 * (f.front() + f.back() + 4.0 * odd + 2.0 * even);
}

/// Uniform symmetric axis [-half_width, half_width] with n points.
inline std::vector<double> symmetric_axis(double half_width, int n)
{
    if (n < 2) throw domain_error("axis needs at least 2 points");
    std::vector<double> axis(static_cast<std::size_t>(n));
    const double h = 2.0 * half_width / (n - 1);
    for (int i = 0; i < n; ++i) axis[static_cast<std::size_t>(i)] = -half_width + h * i;
    return axis;
}

struct QuadratureResult {
    double value = 0.0;
    int evaluations = 0;
};

namespace detail {

template <class F>
double adaptive_simpson_step(F& f, double a, double b, double fa, double fm, double fb, double whole,
                             double tol, int depth, int& evals, bool& failed)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    evals += 2;
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0) {
        failed = true;
        return left + right + delta / 15.0;
    }
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, evals, failed) +
           adaptive_simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, evals, failed);
}

} // namespace detail

/// Adaptive Simpson with absolute tolerance. The interval is pre-split
/// into `panels` pieces so narrow features are not missed by the first
/// coarse estimate.
template <class F>
QuadratureResult adaptive_simpson(F&& f, double a, double b, double abs_tol, int panels = 64,
                                  int max_depth = 40)
{
    QuadratureResult out;
    bool failed = false;
    const double w = (b - a) / panels;
    double fa = f(a);
    out.evaluations = 1;
    for (int i = 0; i < panels; ++i) {
        const double lo = a + w * i;
        const double hi = (i + 1 == panels) ? b : lo + w;
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid), fb = f(hi);
        out.evaluations += 2;
        const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
        out.value += detail::adaptive_simpson_step(f, lo, hi, fa, fm, fb, whole, abs_tol / panels,
                                                   max_depth, out.evaluations, failed);
        fa = fb;
    }
    if (failed || !std::isfinite(out.value)) {
        throw numerical_error("adaptive_simpson: tolerance not reached at maximum recursion depth");
    }
    return out;
}

} // namespace tpo
