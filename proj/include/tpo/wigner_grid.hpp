#pragma once

// Rectangular (x, p) sampling of a quasi-probability distribution and its
// moments under the measure dx dp / 2.

#include <tpo/model.hpp>
#include <tpo/parallel.hpp>
#include <tpo/quadrature.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tpo {

struct WignerGrid {
    static constexpr const char* normalization_note = "integral dx dp / 2 = 1";

    std::vector<double> x_axis;
    std::vector<double> p_axis;
    std::vector<double> values; // row-major, index [ix * p_axis.size() + ip]
    Method method = Method::exact;
    std::optional<ModelParams> params;

    double at(std::size_t ix, std::size_t ip) const { return values[ix * p_axis.size() + ip]; }
};

template <class F>
WignerGrid sample_grid(F&& w, double half_width, int resolution, unsigned threads = 1)
{
    WignerGrid g;
    g.x_axis = symmetric_axis(half_width, resolution);
    g.p_axis = g.x_axis;
    const std::size_t n = g.x_axis.size();
    g.values.assign(n * n, 0.0);
    parallel_for(n, threads, [&](std::size_t ix) {
        for (std::size_t ip = 0; ip < n; ++ip) {
            g.values[ix * n + ip] = w(g.x_axis[ix], g.p_axis[ip]);
        }
    });
    return g;
}

struct GridMoments {
    double norm = 0.0;
    double x = 0.0, p = 0.0;
    double x2 = 0.0, p2 = 0.0, xp = 0.0;
    double x4 = 0.0, x2p2 = 0.0, p4 = 0.0;
    double x3 = 0.0, p3 = 0.0;
};

/// Tensor-product Simpson moments; requires an odd resolution.
inline GridMoments grid_moments(const WignerGrid& g)
{
    const std::size_t nx = g.x_axis.size(), np = g.p_axis.size();
    const double hx = g.x_axis[1] - g.x_axis[0];
    const double hp = g.p_axis[1] - g.p_axis[0];
    constexpr int kinds = 11;
    std::vector<std::vector<double>> rows(kinds, std::vector<double>(nx));
    std::vector<std::vector<double>> cols(kinds, std::vector<double>(np));
    for (std::size_t ix = 0; ix < nx; ++ix) {
        const double x = g.x_axis[ix];
        for (std::size_t ip = 0; ip < np; ++ip) {
            const double p = g.p_axis[ip];
            const double w = g.at(ix, ip) * 0.5;
            const double m[kinds] = {1.0, x, p, x * x, p * p, x * p, x * x * x * x,
                                     x * x * p * p, p * p * p * p, x * x * x, p * p * p};
            for (int k = 0; k < kinds; ++k) cols[k][ip] = w * m[k];
        }
        for (int k = 0; k < kinds; ++k) rows[k][ix] = simpson(cols[k], hp);
    }
    double r[kinds];
    for (int k = 0; k < kinds; ++k) r[k] = simpson(rows[k], hx);
    GridMoments out;
    out.norm = r[0];
    out.x = r[1] / r[0];
    out.p = r[2] / r[0];
    out.x2 = r[3] / r[0];
    out.p2 = r[4] / r[0];
    out.xp = r[5] / r[0];
    out.x4 = r[6] / r[0];
    out.x2p2 = r[7] / r[0];
    out.p4 = r[8] / r[0];
    out.x3 = r[9] / r[0];
    out.p3 = r[10] / r[0];
    return out;
}

} // namespace tpo
