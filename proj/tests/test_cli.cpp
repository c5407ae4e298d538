#include "cli/check.hpp"
#include "cli/commands.hpp"
#include "cli/table.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace tpo;
using namespace tpo::cli;

namespace {

std::string csv(const Table& t)
{
    std::ostringstream os;
    write_csv(os, t);
    return os.str();
}

} // namespace

TEST(Format, SeventeenSignificantDigits)
{
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
    EXPECT_EQ(format_double(2.0), "2");
    EXPECT_EQ(format_double(-1.5e-300), "-1.5000000000000001e-300");
    EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Csv, QuotingAndSentinels)
{
    Table t;
    t.add_config("note", "a, b");
    t.columns = {"a", "b,c", "d"};
    t.rows.push_back({1.0, na(), std::string("say \"hi\"")});
    EXPECT_EQ(csv(t), "# note = a, b\na,\"b,c\",d\n1,NA,\"say \"\"hi\"\"\"\n");
}

TEST(Json, ColumnarWithNulls)
{
    Table t;
    t.add_config("k", "v");
    t.columns = {"x", "y"};
    t.rows.push_back({1.0, na()});
    t.rows.push_back({2.0, 3.0});
    std::ostringstream os;
    write_json(os, t);
    const std::string s = os.str();
    EXPECT_NE(s.find("\"config\""), std::string::npos);
    EXPECT_NE(s.find("null"), std::string::npos);
    EXPECT_NE(s.find("\"columns\""), std::string::npos);
}

TEST(Sweep, ColumnSchema)
{
    const auto cols = sweep_columns({Method::langevin, Method::exact});
    ASSERT_EQ(cols.size(), 1u + 8u + 15u);
    EXPECT_EQ(cols[0], "delta_over_eta");
    EXPECT_EQ(cols[1], "exact_n");
    EXPECT_EQ(cols[7], "exact_g2");
    EXPECT_EQ(cols[8], "exact_status");
    EXPECT_EQ(cols[9], "langevin_n");
    EXPECT_EQ(cols[16], "langevin_n_stderr");
    EXPECT_EQ(cols.back(), "langevin_status");
}

TEST(Sweep, SemiclassicalAboveThresholdIsVacuum)
{
    SweepSpec s;
    s.methods = {Method::semiclassical};
    s.delta_min = 21.0;
    s.delta_max = 25.0;
    s.points = 5;
    const Table t = cmd_sweep(s);
    ASSERT_EQ(t.rows.size(), 5u);
    for (const auto& row : t.rows) {
        EXPECT_EQ(std::get<double>(row[1]), 0.0);
        EXPECT_TRUE(std::holds_alternative<std::monostate>(row[7])); // g2 undefined
        EXPECT_EQ(std::get<std::string>(row[8]), "ok");
    }
}

TEST(Sweep, FailuresBecomeSentinelsAndRunContinues)
{
    SweepSpec s;
    s.methods = {Method::exact, Method::boltzmann};
    s.g_over_eta = 0.0; // boltzmann needs G > 0
    s.delta_min = 1.0;
    s.delta_max = 2.0;
    s.points = 2;
    const Table t = cmd_sweep(s);
    for (const auto& row : t.rows) {
        EXPECT_EQ(std::get<std::string>(row[8]), "ok");
        EXPECT_TRUE(std::holds_alternative<std::monostate>(row[9]));
        EXPECT_EQ(std::get<std::string>(row[16]).rfind("failed: ", 0), 0u);
    }
}

TEST(Sweep, ExactG2CrossesTwoAtThreshold)
{
    SweepSpec s;
    s.methods = {Method::exact};
    s.delta_min = 19.0;
    s.delta_max = 21.0;
    s.points = 3;
    const Table t = cmd_sweep(s, 2);
    EXPECT_NEAR(std::get<double>(t.rows[1][7]), 2.0, 0.05);
    EXPECT_EQ(csv(t), csv(cmd_sweep(s, 1)));
}

TEST(Wigner, VacuumGridAndPeaks)
{
    WignerSpec w;
    w.params = ModelParams(0.0, 0.0, 1.0);
    w.resolution = 81;
    const Table t = cmd_wigner(w);
    EXPECT_EQ(t.rows.size(), 81u * 81u);
    bool found = false;
    for (const auto& [k, v] : t.summary) {
        if (k == "grid_integral") {
            EXPECT_NEAR(std::stod(v), 1.0, 1e-3);
            found = true;
        }
    }
    EXPECT_TRUE(found);
    w.method = Method::langevin;
    EXPECT_THROW(cmd_wigner(w), domain_error);
}

TEST(Wigner, PeaksAgreeAcrossMethodsAtThreshold)
{
    WignerSpec w;
    w.params = ModelParams(20.0, 20.0, 1.0);
    w.resolution = 121;
    w.half_width = 9.0;
    auto peak = [](const Table& t) {
        double x = 0, p = 0;
        for (const auto& [k, v] : t.summary) {
            if (k == "peak_x") x = std::stod(v);
            if (k == "peak_p") p = std::stod(v);
        }
        return std::pair{x, p};
    };
    const auto a = peak(cmd_wigner(w));
    w.method = Method::boltzmann;
    const auto b = peak(cmd_wigner(w));
    const double cell = 18.0 / 120.0;
    EXPECT_LE(std::abs(a.first - b.first), cell + 1e-12);
    EXPECT_LE(std::abs(a.second - b.second), cell + 1e-12);
}

TEST(Critical, BoltzmannRowsAndFitSummary)
{
    CriticalSpec c;
    c.methods = {Method::boltzmann};
    const Table t = cmd_critical(c);
    for (const auto& row : t.rows) EXPECT_EQ(std::get<double>(row[5]), 0.5);
    bool pass = false;
    for (const auto& [k, v] : t.summary) {
        if (k == "fit_boltzmann_x2_result") pass = v == "pass";
    }
    EXPECT_TRUE(pass);
}

TEST(Simulate, ByteIdenticalReruns)
{
    SimulateSpec s;
    s.params = ModelParams(23.0, 20.0, 1.0);
    s.config.n_traj = 8;
    s.config.t_burn = 1.0;
    s.config.t_sample = 20.0;
    EXPECT_EQ(csv(cmd_simulate(s, 1)), csv(cmd_simulate(s, 4)));
    s.mode = SimulateMode::trajectory;
    EXPECT_EQ(csv(cmd_simulate(s)), csv(cmd_simulate(s)));
}
