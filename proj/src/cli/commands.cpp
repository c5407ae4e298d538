#include "commands.hpp"

#include <tpo/criticality.hpp>
#include <tpo/equilibrium.hpp>
#include <tpo/exact.hpp>
#include <tpo/parallel.hpp>
#include <tpo/semiclassical.hpp>
#include <tpo/wigner_grid.hpp>

#include <algorithm>
#include <exception>
#include <functional>

namespace tpo::cli {

namespace {

const std::vector<std::string> observable_suffixes{"n", "re_a2", "im_a2", "x2", "p2", "xp", "g2"};

std::string method_list(const std::vector<Method>& methods)
{
    std::string s;
    for (const Method m : methods) {
        if (!s.empty()) s += ',';
        s += to_string(m);
    }
    return s;
}

std::vector<Method> ordered_unique(std::vector<Method> methods)
{
    std::sort(methods.begin(), methods.end());
    methods.erase(std::unique(methods.begin(), methods.end()), methods.end());
    return methods;
}

/// Observables plus a status string for one method at one parameter point.
struct MethodResult {
    std::optional<ObservableSet> set;
    std::string status = "ok";
};

MethodResult evaluate(Method m, const ModelParams& params, const std::optional<langevin::TrajectoryConfig>& tc,
                      unsigned threads, bool closed_form_critical = false)
{
    MethodResult r;
    try {
        switch (m) {
        case Method::semiclassical: r.set = semiclassical::observables(params); break;
        case Method::exact: r.set = exact::exact_observables(params).to_observable_set(); break;
        case Method::boltzmann:
            r.set = closed_form_critical ? equilibrium::critical_closed_forms(params).observables
                                         : equilibrium::boltzmann_observables(params);
            break;
        case Method::langevin:
            if (!tc) throw domain_error("langevin requires a trajectory configuration");
            r.set = langevin::run_ensemble(params, *tc, threads).observables;
            break;
        }
    } catch (const std::exception& e) {
        r.set.reset();
        r.status = std::string("failed: ") + e.what();
    }
    return r;
}

void append_cells(std::vector<Cell>& row, Method m, const MethodResult& r)
{
    if (r.set) {
        const ObservableSet& s = *r.set;
        row.insert(row.end(), {s.n, s.a2.real(), s.a2.imag(), s.x2, s.p2, s.xp_sym, cell(s.g2)});
    } else {
        row.insert(row.end(), observable_suffixes.size(), na());
    }
    if (m == Method::langevin) {
        if (r.set && r.set->errors) {
            const ObservableErrors& e = *r.set->errors;
            row.insert(row.end(), {e.n, e.re_a2, e.im_a2, e.x2, e.p2, e.xp_sym, r.set->g2 ? Cell(e.g2) : na()});
        } else {
            row.insert(row.end(), observable_suffixes.size(), na());
        }
    }
    row.emplace_back(r.status);
}

std::vector<std::string> observable_columns(const std::string& lead, const std::vector<Method>& methods)
{
    std::vector<std::string> cols{lead};
    for (const Method m : methods) {
        const std::string p(to_string(m));
        for (const auto& s : observable_suffixes) cols.push_back(p + "_" + s);
        if (m == Method::langevin) {
            for (const auto& s : observable_suffixes) cols.push_back(p + "_" + s + "_stderr");
        }
        cols.push_back(p + "_status");
    }
    return cols;
}

} // namespace

std::vector<std::string> sweep_columns(const std::vector<Method>& methods)
{
    return observable_columns("delta_over_eta", ordered_unique(methods));
}

void echo_trajectory_config(Table& t, const langevin::TrajectoryConfig& c)
{
    t.add_config("dt", c.dt);
    t.add_config("t_burn", c.t_burn);
    t.add_config("t_sample", c.t_sample);
    t.add_config("sample_stride", std::to_string(c.sample_stride));
    t.add_config("n_traj", std::to_string(c.n_traj));
    t.add_config("seed", std::to_string(c.seed));
    t.add_config("scheme", std::string(langevin::to_string(c.scheme)));
    t.add_config("system", std::string(langevin::to_string(c.system)));
    t.add_config("noise", c.noise_enabled ? "on" : "off");
    t.add_config("brownian_refinement", std::to_string(c.brownian_refinement));
    if (c.initial_state) {
        t.add_config("x0", c.initial_state->x);
        t.add_config("p0", c.initial_state->p);
    }
}

Table cmd_sweep(const SweepSpec& spec, unsigned threads)
{
    if (spec.points < 2) throw domain_error("sweep: points must be >= 2");
    if (!(spec.delta_max >= spec.delta_min)) throw domain_error("sweep: delta_max must be >= delta_min");
    const std::vector<Method> methods = ordered_unique(spec.methods);
    if (methods.empty()) throw domain_error("sweep: no methods selected");
    const bool uses_langevin = std::find(methods.begin(), methods.end(), Method::langevin) != methods.end();
    if (uses_langevin && !spec.trajectory_config) throw domain_error("sweep: langevin requires a trajectory config");

    Table t;
    t.add_config("command", "sweep");
    t.add_config("g_over_eta", spec.g_over_eta);
    t.add_config("delta_min", spec.delta_min);
    t.add_config("delta_max", spec.delta_max);
    t.add_config("points", std::to_string(spec.points));
    t.add_config("methods", method_list(methods));
    if (uses_langevin) echo_trajectory_config(t, *spec.trajectory_config);
    t.columns = sweep_columns(methods);

    const auto n = static_cast<std::size_t>(spec.points);
    std::vector<double> deltas(n);
    for (std::size_t i = 0; i < n; ++i) {
        deltas[i] = spec.delta_min + (spec.delta_max - spec.delta_min) * static_cast<double>(i) /
                                         static_cast<double>(n - 1);
    }
    t.rows.assign(n, {});
    // Ensembles parallelize internally; the cheap methods fan out over rows.
    const unsigned row_threads = uses_langevin ? 1u : threads;
    const unsigned inner_threads = uses_langevin ? threads : 1u;
    parallel_for(n, row_threads, [&](std::size_t i) {
        std::vector<Cell> row{deltas[i]};
        const ModelParams params(deltas[i], spec.g_over_eta, 1.0);
        for (const Method m : methods) append_cells(row, m, evaluate(m, params, spec.trajectory_config, inner_threads));
        t.rows[i] = std::move(row);
    });
    return t;
}

Table cmd_wigner(const WignerSpec& spec, unsigned threads)
{
    if (spec.method != Method::exact && spec.method != Method::boltzmann) {
        throw domain_error("wigner: method must be exact or boltzmann");
    }
    if (spec.resolution < 5 || spec.resolution % 2 == 0) throw domain_error("wigner: resolution must be odd and >= 5");
    const ModelParams& params = spec.params;
    const double half_width = spec.half_width ? *spec.half_width : exact::wigner_half_width(params);
    if (!(half_width > 0.0)) throw domain_error("wigner: half-width must be > 0");

    Table t;
    t.add_config("command", "wigner");
    t.add_config("method", std::string(to_string(spec.method)));
    t.add_config("delta", params.delta());
    t.add_config("g", params.g());
    t.add_config("eta", params.eta());
    t.add_config("half_width", half_width);
    t.add_config("resolution", std::to_string(spec.resolution));
    t.add_config("reduced", spec.reduced ? "true" : "false");
    t.add_config("normalization", std::string(WignerGrid::normalization_note));

    if (spec.reduced) {
        const auto axis = symmetric_axis(half_width, spec.resolution);
        std::vector<double> w(axis.size()), err(axis.size(), 0.0);
        if (spec.method == Method::exact) {
            const exact::ExactReducedWigner rw(params);
            parallel_for(axis.size(), threads, [&](std::size_t i) {
                const auto v = rw.evaluate(axis[i]);
                w[i] = v.value;
                err[i] = v.quadrature_error;
            });
        } else {
            const equilibrium::EffectiveEquilibrium eq(params);
            for (std::size_t i = 0; i < axis.size(); ++i) w[i] = eq.reduced_wigner(axis[i]);
        }
        t.add_summary("grid_integral", simpson(w, axis[1] - axis[0]));
        t.columns = {"x", "w_reduced", "quadrature_error"};
        for (std::size_t i = 0; i < axis.size(); ++i) t.rows.push_back({axis[i], w[i], err[i]});
        return t;
    }

    const WignerGrid g = spec.method == Method::exact
                             ? exact::exact_wigner_grid(params, half_width, spec.resolution, threads)
                             : equilibrium::boltzmann_wigner_grid(params, half_width, spec.resolution, threads);
    const GridMoments mom = grid_moments(g);
    std::size_t best = 0;
    const std::size_t np = g.p_axis.size();
    for (std::size_t k = 0; k < g.values.size(); ++k) {
        if (g.x_axis[k / np] >= 0.0 && (g.x_axis[best / np] < 0.0 || g.values[k] > g.values[best])) best = k;
    }
    t.add_summary("grid_integral", mom.norm);
    t.add_summary("grid_x2", mom.x2);
    t.add_summary("grid_p2", mom.p2);
    t.add_summary("grid_xp", mom.xp);
    t.add_summary("peak_x", g.x_axis[best / np]);
    t.add_summary("peak_p", g.p_axis[best % np]);
    t.add_summary("peak_w", g.values[best]);
    t.columns = {"x", "p", "w"};
    t.rows.reserve(g.values.size());
    for (std::size_t ix = 0; ix < g.x_axis.size(); ++ix) {
        for (std::size_t ip = 0; ip < np; ++ip) t.rows.push_back({g.x_axis[ix], g.p_axis[ip], g.values[ix * np + ip]});
    }
    return t;
}

Table cmd_critical(const CriticalSpec& spec, unsigned threads)
{
    const std::vector<Method> methods = ordered_unique(spec.methods);
    if (methods.empty()) throw domain_error("critical: no methods selected");
    if (spec.g_grid.empty()) throw domain_error("critical: empty G/eta grid");
    const bool uses_langevin = std::find(methods.begin(), methods.end(), Method::langevin) != methods.end();
    if (uses_langevin && !spec.trajectory_config) throw domain_error("critical: langevin requires a trajectory config");
    for (double g : spec.g_grid) {
        if (!(g > 0.0)) throw domain_error("critical: G/eta values must be > 0");
        if (std::find(methods.begin(), methods.end(), Method::exact) != methods.end() && g > exact::max_g_over_eta) {
            throw domain_error("critical: G/eta = " + format_double(g) + " outside the exact method's domain");
        }
    }

    Table t;
    t.add_config("command", "critical");
    std::string grid;
    for (double g : spec.g_grid) grid += (grid.empty() ? "" : ",") + format_double(g);
    t.add_config("g_grid", grid);
    t.add_config("methods", method_list(methods));
    if (uses_langevin) echo_trajectory_config(t, *spec.trajectory_config);
    t.columns = observable_columns("g_over_eta", methods);

    const std::size_t n = spec.g_grid.size();
    std::vector<std::vector<MethodResult>> results(n);
    const unsigned row_threads = uses_langevin ? 1u : threads;
    const unsigned inner_threads = uses_langevin ? threads : 1u;
    parallel_for(n, row_threads, [&](std::size_t i) {
        const double g = spec.g_grid[i];
        const ModelParams params(g, g, 1.0);
        for (const Method m : methods) {
            results[i].push_back(evaluate(m, params, spec.trajectory_config, inner_threads, true));
        }
    });
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Cell> row{spec.g_grid[i]};
        for (std::size_t k = 0; k < methods.size(); ++k) append_cells(row, methods[k], results[i][k]);
        t.rows.push_back(std::move(row));
    }

    // Exponent fits per method (needs every row successful and >= 5 points).
    struct Target {
        const char* name;
        std::function<double(const ObservableSet&)> get;
        double expected, tolerance;
    };
    const std::vector<Target> targets{
        {"x2", [](const ObservableSet& s) { return s.x2; }, 2.0 / 3.0, 0.02},
        {"n", [](const ObservableSet& s) { return s.n; }, 2.0 / 3.0, 0.02},
        {"re_a2", [](const ObservableSet& s) { return s.a2.real(); }, 2.0 / 3.0, 0.02},
        {"neg_im_a2", [](const ObservableSet& s) { return -s.a2.imag(); }, 1.0 / 3.0, 0.03},
    };
    for (std::size_t k = 0; k < methods.size(); ++k) {
        if (methods[k] == Method::semiclassical) continue;
        const std::string prefix = "fit_" + std::string(to_string(methods[k])) + "_";
        bool complete = n >= 5;
        for (std::size_t i = 0; i < n; ++i) complete = complete && results[i][k].set.has_value();
        if (!complete) {
            t.add_summary(prefix + "status", "skipped: needs >= 5 successful points");
            continue;
        }
        for (const auto& target : targets) {
            std::vector<double> v;
            for (std::size_t i = 0; i < n; ++i) v.push_back(target.get(*results[i][k].set));
            const std::string key = prefix + target.name;
            try {
                const auto fit = criticality::log_log_fit(spec.g_grid, v, 5);
                const bool pass = std::abs(fit.slope - target.expected) <= target.tolerance;
                t.add_summary(key + "_slope", fit.slope);
                t.add_summary(key + "_r_squared", fit.r_squared);
                t.add_summary(key + "_expected", target.expected);
                t.add_summary(key + "_tolerance", target.tolerance);
                t.add_summary(key + "_result", pass ? "pass" : "fail");
            } catch (const std::exception& e) {
                t.add_summary(key + "_result", std::string("failed: ") + e.what());
            }
        }
    }
    return t;
}

Table cmd_simulate(const SimulateSpec& spec, unsigned threads)
{
    const ModelParams& params = spec.params;
    Table t;
    t.add_config("command", "simulate");
    t.add_config("mode", spec.mode == SimulateMode::trajectory ? "trajectory" : "ensemble");
    t.add_config("delta", params.delta());
    t.add_config("g", params.g());
    t.add_config("eta", params.eta());
    echo_trajectory_config(t, spec.config);

    if (spec.mode == SimulateMode::trajectory) {
        const auto traj = langevin::simulate_trajectory(params, spec.config, 0);
        t.columns = {"t", "x", "p"};
        t.rows.reserve(traj.size());
        for (const auto& pt : traj) t.rows.push_back({pt.t, pt.x, pt.p});
        return t;
    }

    const auto r = langevin::run_ensemble(params, spec.config, threads);
    t.add_summary("aborted", std::to_string(r.aborted));
    t.add_summary("batches", std::to_string(r.batches));
    t.columns = {"observable", "mean", "std_error", "n_samples", "autocorrelation_time"};
    for (std::size_t m = 0; m < langevin::moment_count; ++m) {
        const auto& e = r.moments[m];
        t.rows.push_back({std::string(langevin::moment_names[m]), e.mean, e.std_error, Cell(e.n_samples),
                          e.autocorrelation_time_estimate});
    }
    const ObservableSet& s = r.observables;
    const ObservableErrors e = s.errors.value_or(ObservableErrors{});
    t.rows.push_back({std::string("n"), s.n, e.n, na(), na()});
    t.rows.push_back({std::string("re_a2"), s.a2.real(), e.re_a2, na(), na()});
    t.rows.push_back({std::string("im_a2"), s.a2.imag(), e.im_a2, na(), na()});
    t.rows.push_back({std::string("g2"), cell(s.g2), s.g2 ? Cell(e.g2) : na(), na(), na()});
    return t;
}

} // namespace tpo::cli
