// Command-line driver: sweeps, Wigner grids, critical scaling tables,
// Langevin simulations, and the built-in check suite.
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 check failure.

#include "cli/check.hpp"
#include "cli/commands.hpp"
#include "cli/table.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace {

using namespace tpo;
using namespace tpo::cli;

constexpr int exit_usage = 1;
constexpr int exit_numerical = 2;
constexpr int exit_check = 3;

std::vector<Method> parse_methods(const std::vector<std::string>& names)
{
    std::vector<Method> out;
    for (const auto& n : names) {
        const auto m = parse_method(n);
        if (!m) throw domain_error("unknown method '" + n + "'");
        out.push_back(*m);
    }
    return out;
}

/// Trajectory flags shared by sweep, critical and simulate.
struct TrajectoryFlags {
    langevin::TrajectoryConfig config;
    std::string scheme = "stratonovich_heun";
    std::string system = "full_complex";
    bool no_noise = false;

    void attach(CLI::App* app)
    {
        app->add_option("--dt", config.dt, "Integration step (units of 1/eta)")->capture_default_str();
        app->add_option("--t-burn", config.t_burn, "Discarded transient (units of 1/eta)")->capture_default_str();
        app->add_option("--t-sample", config.t_sample, "Sampling window (units of 1/eta)")->capture_default_str();
        app->add_option("--sample-stride", config.sample_stride, "Steps between samples")->capture_default_str();
        app->add_option("--n-traj", config.n_traj, "Number of trajectories")->capture_default_str();
        app->add_option("--scheme", scheme, "ito_euler_maruyama | stratonovich_heun")
            ->check(CLI::IsMember({"ito_euler_maruyama", "stratonovich_heun"}))
            ->capture_default_str();
        app->add_option("--system", system, "full_complex | full_quadrature | reduced_critical")
            ->check(CLI::IsMember({"full_complex", "full_quadrature", "reduced_critical"}))
            ->capture_default_str();
        app->add_option("--brownian-refinement", config.brownian_refinement,
                        "Draw increments at 2^r*dt and bridge-split them, so runs at dt and dt/2^r share a path")
            ->check(CLI::Range(0, 16))
            ->capture_default_str();
        app->add_flag("--no-noise", no_noise, "Drop the stochastic term (diagnostic)");
    }

    langevin::TrajectoryConfig resolve(std::uint64_t seed) const
    {
        langevin::TrajectoryConfig c = config;
        c.seed = seed;
        c.scheme = scheme == "ito_euler_maruyama" ? langevin::Scheme::ito_euler_maruyama
                                                  : langevin::Scheme::stratonovich_heun;
        c.system = system == "full_quadrature"    ? langevin::System::full_quadrature
                   : system == "reduced_critical" ? langevin::System::reduced_critical
                                                  : langevin::System::full_complex;
        c.noise_enabled = !no_noise;
        return c;
    }
};

/// Assigns `value` to an option's target unless the user (flag or config
/// file) already set it.
template <class T>
void preset(CLI::Option* opt, T& target, const std::type_identity_t<T>& value)
{
    if (opt->count() == 0) target = value;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Two-photon driven dissipative oscillator toolkit"};
    app.set_config("--config", "", "Config file of key = value lines ([subcommand] sections allowed)");
    app.require_subcommand(0, 1);

    std::uint64_t seed = 20240917;
    unsigned threads = 1;
    std::string out_path;
    std::string format = "csv";
    bool check = false;
    app.add_option("--seed", seed, "Random seed")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads (results do not depend on it)")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
    app.add_option("--out", out_path, "Output file (default stdout)");
    app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_flag("--check", check, "Run the built-in cross-validation suite");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Observables vs detuning at fixed G/eta");
    SweepSpec sweep_spec;
    std::vector<std::string> sweep_methods{"exact", "boltzmann"};
    std::string sweep_preset;
    TrajectoryFlags sweep_traj;
    auto* o_sg = sweep->add_option("--g-over-eta", sweep_spec.g_over_eta)->capture_default_str();
    auto* o_smin = sweep->add_option("--delta-min", sweep_spec.delta_min, "Lowest delta/eta")->capture_default_str();
    auto* o_smax = sweep->add_option("--delta-max", sweep_spec.delta_max, "Highest delta/eta")->capture_default_str();
    auto* o_spts = sweep->add_option("--points", sweep_spec.points)->check(CLI::Range(2, 1000000))->capture_default_str();
    auto* o_smeth = sweep->add_option("--methods", sweep_methods, "semiclassical exact boltzmann langevin")
                        ->delimiter(',')
                        ->capture_default_str();
    sweep->add_option("--preset", sweep_preset)->check(CLI::IsMember({"fig2", "fig4a", "fig7"}));
    sweep_traj.attach(sweep);

    // wigner
    auto* wigner = app.add_subcommand("wigner", "Wigner function on a grid");
    std::string wigner_method = "exact";
    double w_delta = 17.0, w_g = 20.0, w_eta = 1.0, w_half_width = 0.0;
    int w_resolution = 201;
    bool w_reduced = false;
    std::string wigner_preset;
    auto* o_wm = wigner->add_option("--method", wigner_method, "exact | boltzmann")
                     ->check(CLI::IsMember({"exact", "boltzmann"}))
                     ->capture_default_str();
    wigner->add_option("--delta", w_delta)->capture_default_str();
    wigner->add_option("--g", w_g)->capture_default_str();
    wigner->add_option("--eta", w_eta)->capture_default_str();
    auto* o_whw = wigner->add_option("--half-width", w_half_width, "Grid half-width (default: automatic)");
    wigner->add_option("--resolution", w_resolution, "Points per axis (odd)")->capture_default_str();
    auto* o_wred = wigner->add_flag("--reduced", w_reduced, "Reduced (p-integrated) distribution");
    wigner->add_option("--preset", wigner_preset)->check(CLI::IsMember({"fig4a", "fig5"}));

    // critical
    auto* critical = app.add_subcommand("critical", "Observables at delta = G vs G/eta, with exponent fits");
    CriticalSpec critical_spec;
    std::vector<std::string> critical_methods{"exact", "boltzmann"};
    std::string critical_preset;
    TrajectoryFlags critical_traj;
    auto* o_cg = critical->add_option("--g-grid", critical_spec.g_grid, "G/eta values")
                     ->delimiter(',')
                     ->capture_default_str();
    critical->add_option("--methods", critical_methods)->delimiter(',')->capture_default_str();
    critical->add_option("--preset", critical_preset)->check(CLI::IsMember({"fig6"}));
    critical_traj.attach(critical);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Langevin trajectory or ensemble");
    double s_delta = 17.0, s_g = 20.0, s_eta = 1.0;
    std::string mode = "ensemble";
    std::vector<double> initial;
    TrajectoryFlags sim_traj;
    simulate->add_option("--delta", s_delta)->capture_default_str();
    simulate->add_option("--g", s_g)->capture_default_str();
    simulate->add_option("--eta", s_eta)->capture_default_str();
    simulate->add_option("--mode", mode, "trajectory | ensemble")
        ->check(CLI::IsMember({"trajectory", "ensemble"}))
        ->capture_default_str();
    simulate->add_option("--initial", initial, "Initial x,p (replaces the random draw)")
        ->delimiter(',')
        ->expected(2);
    sim_traj.attach(simulate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_usage;
    }

    try {
        const Format fmt = parse_format(format);
        if (check) {
            const auto items = run_check_suite(threads);
            std::ostringstream os;
            print_check(os, items);
            if (out_path.empty() || out_path == "-") {
                std::cout << os.str();
            } else {
                std::ofstream f(out_path, std::ios::binary);
                f << os.str();
            }
            return all_passed(items) ? 0 : exit_check;
        }

        Table table;
        if (sweep->parsed()) {
            if (sweep_preset == "fig2") {
                preset(o_smin, sweep_spec.delta_min, 0.0);
                preset(o_smax, sweep_spec.delta_max, 40.0);
                preset(o_spts, sweep_spec.points, 401);
                preset(o_smeth, sweep_methods, {"semiclassical", "exact"});
            } else if (sweep_preset == "fig4a") {
                preset(o_smin, sweep_spec.delta_min, 14.0);
                preset(o_smax, sweep_spec.delta_max, 26.0);
                preset(o_spts, sweep_spec.points, 121);
                preset(o_smeth, sweep_methods, {"semiclassical", "exact", "boltzmann"});
            } else if (sweep_preset == "fig7") {
                preset(o_smin, sweep_spec.delta_min, 0.0);
                preset(o_smax, sweep_spec.delta_max, 40.0);
                preset(o_spts, sweep_spec.points, 401);
                preset(o_smeth, sweep_methods, {"semiclassical", "exact", "boltzmann"});
            }
            if (!sweep_preset.empty()) preset(o_sg, sweep_spec.g_over_eta, 20.0);
            sweep_spec.methods = parse_methods(sweep_methods);
            sweep_spec.trajectory_config = sweep_traj.resolve(seed);
            table = cmd_sweep(sweep_spec, threads);
            if (!sweep_preset.empty()) table.config.insert(table.config.begin() + 1, {"preset", sweep_preset});
        } else if (wigner->parsed()) {
            if (wigner_preset == "fig5") preset(o_wred, w_reduced, true);
            if (wigner_preset == "fig4a") preset(o_wm, wigner_method, "boltzmann");
            WignerSpec spec;
            spec.method = *parse_method(wigner_method);
            spec.params = ModelParams(w_delta, w_g, w_eta);
            if (o_whw->count() > 0) spec.half_width = w_half_width;
            spec.resolution = w_resolution;
            spec.reduced = w_reduced;
            table = cmd_wigner(spec, threads);
            if (!wigner_preset.empty()) table.config.insert(table.config.begin() + 1, {"preset", wigner_preset});
        } else if (critical->parsed()) {
            if (critical_preset == "fig6") {
                preset(o_cg, critical_spec.g_grid, {5.0, 10.0, 15.0, 20.0, 30.0, 40.0, 50.0, 60.0, 70.0, 80.0, 90.0, 100.0});
            }
            critical_spec.methods = parse_methods(critical_methods);
            critical_spec.trajectory_config = critical_traj.resolve(seed);
            table = cmd_critical(critical_spec, threads);
            if (!critical_preset.empty()) table.config.insert(table.config.begin() + 1, {"preset", critical_preset});
        } else if (simulate->parsed()) {
            SimulateSpec spec;
            spec.params = ModelParams(s_delta, s_g, s_eta);
            spec.config = sim_traj.resolve(seed);
            if (initial.size() == 2) spec.config.initial_state = QuadratureState{initial[0], initial[1]};
            spec.mode = mode == "trajectory" ? SimulateMode::trajectory : SimulateMode::ensemble;
            table = cmd_simulate(spec, threads);
        } else {
            std::cerr << app.help();
            return exit_usage;
        }
        write_table(out_path, table, fmt);
        return 0;
    } catch (const tpo::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const tpo::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return exit_numerical;
    }
}
