#include "check.hpp"

#include "table.hpp"

#include <tpo/equilibrium.hpp>
#include <tpo/exact.hpp>
#include <tpo/langevin.hpp>
#include <tpo/semiclassical.hpp>
#include <tpo/specfun.hpp>
#include <tpo/wigner_grid.hpp>

#include <cmath>
#include <exception>
#include <functional>
#include <numbers>
#include <ostream>

namespace tpo::cli {

namespace {

constexpr double pi = std::numbers::pi;
const double detunings[] = {17.0, 20.0, 23.0};

std::string tag(double delta) { return "delta" + format_double(delta); }

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

class Suite {
public:
    void check(const std::string& name, double tolerance, const std::function<double()>& deviation)
    {
        CheckItem item;
        item.name = name;
        item.tolerance = tolerance;
        try {
            item.value = deviation();
            item.pass = std::isfinite(item.value) && item.value <= tolerance;
        } catch (const std::exception& e) {
            item.pass = false;
            item.value = std::nan("");
            item.detail = e.what();
        }
        items.push_back(std::move(item));
    }

    std::vector<CheckItem> items;
};

double reduced_integral(const std::function<double(double)>& w, double half_width, int n)
{
    const auto axis = symmetric_axis(half_width, n);
    std::vector<double> f(axis.size());
    for (std::size_t i = 0; i < axis.size(); ++i) f[i] = w(axis[i]);
    return simpson(f, axis[1] - axis[0]);
}

} // namespace

std::vector<CheckItem> run_check_suite(unsigned threads)
{
    Suite s;

    // Special functions.
    s.check("specfun_0f1_cosh_real", 1e-10, [] {
        return rel(pfq_value({}, {0.5}, 1.0).real(), std::cosh(2.0));
    });
    s.check("specfun_0f1_cosh_complex", 1e-10, [&] {
        const cplx z(1.3, 0.4);
        return rel(pfq_value({}, {0.5}, z * z / 4.0), std::cosh(z));
    });
    s.check("specfun_0f1_sinh_complex", 1e-10, [&] {
        const cplx z(-0.7, 2.1);
        return rel(pfq_value({}, {1.5}, z * z / 4.0), std::sinh(z) / z);
    });
    for (const cplx z : {cplx(0.3, 0.7), cplx(-2.5, 1.5), cplx(0.5, -20.0)}) {
        s.check("specfun_gamma_reflection_" + format_double(z.real()) + "_" + format_double(z.imag()), 1e-10,
                [z] { return rel(complex_gamma(z) * complex_gamma(1.0 - z), pi / std::sin(pi * z)); });
    }
    s.check("specfun_gamma_half", 1e-10, [] { return rel(tpo::gamma(0.5), std::sqrt(pi)); });
    s.check("specfun_gamma_duplication", 1e-10, [] {
        const cplx z(0.8, 1.9);
        return rel(complex_gamma(z) * complex_gamma(z + 0.5),
                   std::pow(2.0, 1.0 - 2.0 * z) * std::sqrt(pi) * complex_gamma(2.0 * z));
    });

    for (const double d : detunings) {
        const ModelParams params(d, 20.0, 1.0);
        const std::string t = tag(d);
        const auto ex = exact::exact_observables(params);
        const double hw = exact::wigner_half_width(params);

        // Wigner normalizations.
        const WignerGrid fine = exact::exact_wigner_grid(params, hw, 401, threads);
        const GridMoments fm = grid_moments(fine);
        s.check("exact_wigner_norm_fine_" + t, 1e-6, [&] { return std::abs(fm.norm - 1.0); });
        s.check("exact_wigner_grid_x2_" + t, 1e-6, [&] { return rel(fm.x2, ex.x2); });
        s.check("exact_wigner_grid_p2_" + t, 1e-6, [&] { return rel(fm.p2, ex.p2); });
        s.check("exact_wigner_grid_xp_" + t, 1e-6, [&] { return rel(fm.xp, ex.xp_sym); });
        s.check("exact_wigner_norm_coarse_" + t, 1e-3, [&] {
            return std::abs(grid_moments(exact::exact_wigner_grid(params, hw, 61, threads)).norm - 1.0);
        });
        s.check("exact_reduced_wigner_norm_" + t, 1e-6, [&] {
            const exact::ExactReducedWigner rw(params);
            return std::abs(reduced_integral([&](double x) { return rw(x); }, hw, 241) - 1.0);
        });

        const equilibrium::EffectiveEquilibrium eq(params);
        s.check("boltzmann_wigner_norm_" + t, 1e-6, [&] {
            return std::abs(grid_moments(equilibrium::boltzmann_wigner_grid(params, hw, 401, threads)).norm - 1.0);
        });
        s.check("boltzmann_reduced_wigner_norm_" + t, 1e-6, [&] {
            return std::abs(reduced_integral([&](double x) { return eq.reduced_wigner(x); }, eq.cutoff(), 2001) -
                            1.0);
        });

        // Quadrature / normal-order identities.
        s.check("identity_exact_" + t, 1e-12, [&] { return ex.to_observable_set().consistency_residual(); });
        s.check("identity_boltzmann_" + t, 1e-12,
                [&] { return equilibrium::boltzmann_observables(params).consistency_residual(); });
        s.check("identity_semiclassical_" + t, 1e-12,
                [&] { return semiclassical::observables(params).consistency_residual(); });

        // Equilibrium p-variance identity.
        s.check("equilibrium_p2_identity_" + t, 1e-8, [&] {
            const double c = eq.ridge_coeff();
            return rel(eq.moment(2, 0), 0.25 + c * c * eq.moment(0, 6));
        });
    }

    // Critical closed forms.
    {
        const ModelParams params(20.0, 20.0, 1.0);
        const equilibrium::EffectiveEquilibrium eq(params);
        const auto cf = equilibrium::critical_closed_forms(params);
        s.check("critical_p2_half", 1e-12, [&] { return std::abs(cf.observables.p2 - 0.5); });
        s.check("critical_x2_moment", 1e-8, [&] { return rel(eq.moment(0, 2), cf.observables.x2); });
        s.check("critical_p2_moment", 1e-8, [&] { return rel(eq.moment(2, 0), 0.5); });
        s.check("critical_xp_moment", 1e-8, [&] { return rel(eq.moment(1, 1), cf.observables.xp_sym); });
        s.check("critical_x4_moment", 1e-8, [&] { return rel(eq.moment(0, 4), cf.x4); });
        s.check("critical_g2_x_only", 1e-10, [&] { return std::abs(cf.g2_x_only - 2.0); });
    }

    // Langevin plumbing.
    s.check("langevin_drift_correction", 1e-13, [] {
        const ModelParams params(17.0, 20.0, 1.0);
        double worst = 0.0;
        for (const cplx a : {cplx(0.0, 0.0), cplx(1.0, 0.0), cplx(-2.5, 3.1), cplx(0.3, -4.4)}) {
            const cplx diff = langevin::stratonovich_drift(params, a) - langevin::ito_drift(params, a);
            const auto corr = langevin::ito_stratonovich_drift_correction(params, ComplexAmplitude::from(a));
            worst = std::max(worst, std::abs(diff - corr.value()) / std::max(1.0, std::abs(a)));
        }
        return worst;
    });
    s.check("langevin_thread_determinism", 0.0, [threads] {
        const ModelParams params(23.0, 20.0, 1.0);
        langevin::TrajectoryConfig c;
        c.n_traj = 24;
        c.t_burn = 2.0;
        c.t_sample = 20.0;
        c.seed = 7;
        const auto a = langevin::run_ensemble(params, c, 1);
        const auto b = langevin::run_ensemble(params, c, std::max(2u, threads));
        double worst = 0.0;
        for (std::size_t m = 0; m < langevin::moment_count; ++m) {
            worst = std::max({worst, std::abs(a.moments[m].mean - b.moments[m].mean),
                              std::abs(a.moments[m].std_error - b.moments[m].std_error)});
        }
        return worst;
    });
    return s.items;
}

void print_check(std::ostream& os, const std::vector<CheckItem>& items)
{
    for (const auto& it : items) {
        os << (it.pass ? "PASS " : "FAIL ") << it.name << " deviation=" << format_double(it.value)
           << " tolerance=" << format_double(it.tolerance);
        if (!it.detail.empty()) os << " error=\"" << it.detail << '"';
        os << '\n';
    }
    std::size_t passed = 0;
    for (const auto& it : items) passed += it.pass ? 1 : 0;
    os << "summary " << passed << "/" << items.size() << " passed\n";
}

bool all_passed(const std::vector<CheckItem>& items)
{
    for (const auto& it : items) {
        if (!it.pass) return false;
    }
    return true;
}

} // namespace tpo::cli
