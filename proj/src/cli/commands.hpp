#pragma once

#include "table.hpp"

#include <tpo/langevin.hpp>
#include <tpo/model.hpp>

#include <optional>
#include <string>
#include <vector>

namespace tpo::cli {

struct SweepSpec {
    double g_over_eta = 20.0;
    double delta_min = 14.0;
    double delta_max = 26.0;
    int points = 121;
    std::vector<Method> methods{Method::exact, Method::boltzmann};
    std::optional<langevin::TrajectoryConfig> trajectory_config;
    std::string output_path;
    Format output_format = Format::csv;
};

struct WignerSpec {
    Method method = Method::exact;
    ModelParams params{17.0, 20.0, 1.0};
    std::optional<double> half_width;
    int resolution = 201;
    bool reduced = false;
};

struct CriticalSpec {
    std::vector<double> g_grid{20.0, 30.0, 40.0, 50.0, 60.0, 80.0, 100.0};
    std::vector<Method> methods{Method::exact, Method::boltzmann};
    std::optional<langevin::TrajectoryConfig> trajectory_config;
};

enum class SimulateMode { trajectory, ensemble };

struct SimulateSpec {
    ModelParams params{17.0, 20.0, 1.0};
    langevin::TrajectoryConfig config;
    SimulateMode mode = SimulateMode::ensemble;
};

/// Column names of a sweep table for the given methods, in output order.
std::vector<std::string> sweep_columns(const std::vector<Method>& methods);

void echo_trajectory_config(Table& t, const langevin::TrajectoryConfig& c);

Table cmd_sweep(const SweepSpec& spec, unsigned threads = 1);
Table cmd_wigner(const WignerSpec& spec, unsigned threads = 1);
Table cmd_critical(const CriticalSpec& spec, unsigned threads = 1);
Table cmd_simulate(const SimulateSpec& spec, unsigned threads = 1);

} // namespace tpo::cli
