#include <tpo/criticality.hpp>
#include <tpo/equilibrium.hpp>
#include <tpo/exact.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace tpo;
using namespace tpo::criticality;

TEST(Exponents, ConsistencyConstraint)
{
    const auto e = ScalingExponents::consistent(0.34, 0.01);
    EXPECT_TRUE(e.is_consistent());
    EXPECT_DOUBLE_EQ(e.epsilon, 0.33);
    EXPECT_TRUE(predicted_exponents.is_consistent());
    EXPECT_FALSE((ScalingExponents{0.3, 0.0, 0.5}).is_consistent());
}

TEST(ScaleParams, RescalesDissipationOnly)
{
    const ModelParams p(20.0, 20.0, 1.0);
    EXPECT_EQ(scale_params(p, 1.0), p);
    const ModelParams q = scale_params(p, 8.0);
    EXPECT_EQ(q.delta(), 20.0);
    EXPECT_EQ(q.g(), 20.0);
    EXPECT_EQ(q.eta(), 0.125);
    EXPECT_THROW(scale_params(p, 0.0), domain_error);
}

TEST(ScaleParams, EquilibriumScalingAtCriticality)
{
    const ModelParams p(20.0, 20.0, 1.0);
    const equilibrium::EffectiveEquilibrium a(p), b(scale_params(p, 8.0));
    EXPECT_NEAR(b.moment(0, 2) / a.moment(0, 2), 4.0, 1e-8);
    EXPECT_NEAR(b.moment(2, 0), 0.5, 1e-8);
}

TEST(Fit, ClosedFormsArePurePowerLaws)
{
    const std::vector<double> g{10.0, 20.0, 40.0, 80.0, 160.0};
    const auto x2 = fit_exponent(
        [](const ModelParams& p) { return equilibrium::critical_closed_forms(p).observables.x2; }, g);
    EXPECT_NEAR(x2.slope, 2.0 / 3.0, 1e-6);
    EXPECT_GE(x2.r_squared, 1.0 - 1e-10);
    const auto xp = fit_exponent(
        [](const ModelParams& p) { return equilibrium::critical_closed_forms(p).observables.xp_sym; }, g,
        SignHandling::negate);
    EXPECT_NEAR(xp.slope, 1.0 / 3.0, 1e-6);
    EXPECT_GE(xp.r_squared, 1.0 - 1e-10);
    EXPECT_EQ(x2.points.size(), 5u);
}

TEST(Fit, NumericEquilibriumMomentsFollowTheSamePowerLaw)
{
    const std::vector<double> g{10.0, 20.0, 40.0, 80.0, 160.0};
    const auto fit = fit_exponent(
        [](const ModelParams& p) { return equilibrium::EffectiveEquilibrium(p).moment(0, 2); }, g);
    EXPECT_NEAR(fit.slope, 2.0 / 3.0, 1e-6);
}

TEST(Fit, ExactCovarianceExponent)
{
    const std::vector<double> g{20.0, 35.0, 50.0, 70.0, 100.0};
    const auto fit = fit_exponent([](const ModelParams& p) { return exact::exact_observables(p).xp_sym; }, g,
                                  SignHandling::negate);
    EXPECT_NEAR(fit.slope, 1.0 / 3.0, 0.03);
}

TEST(Fit, Errors)
{
    const std::vector<double> few{10.0, 20.0, 40.0, 80.0};
    EXPECT_THROW(fit_exponent([](const ModelParams&) { return 1.0; }, few), domain_error);
    const std::vector<double> g{10.0, 20.0, 40.0, 80.0, 160.0};
    EXPECT_THROW(fit_exponent([](const ModelParams& p) { return -p.g(); }, g), numerical_error);
}

TEST(ReducedScaling, SmallRunIsConsistent)
{
    langevin::TrajectoryConfig c;
    c.n_traj = 64;
    c.t_burn = 10.0;
    c.t_sample = 60.0;
    const std::vector<double> n{1.0, 8.0};
    const auto rep = verify_reduced_model_scaling(ModelParams(20.0, 20.0, 1.0), n, c);
    ASSERT_EQ(rep.points.size(), 2u);
    EXPECT_NEAR(rep.x2_ratio, 4.0, 4.0 * rep.x2_ratio_error + 0.05);
    EXPECT_NEAR(rep.p2_ratio, 1.0, 4.0 * rep.p2_ratio_error + 0.02);
    EXPECT_TRUE(rep.fitted.is_consistent());
    EXPECT_GT(rep.points[1].relaxation_time, rep.points[0].relaxation_time);
    EXPECT_THROW(verify_reduced_model_scaling(ModelParams(19.0, 20.0, 1.0), n, c), domain_error);
}
