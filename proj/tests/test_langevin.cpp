#include <tpo/equilibrium.hpp>
#include <tpo/langevin.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace tpo;
using namespace tpo::langevin;

namespace {

TrajectoryConfig short_config(int n_traj = 64, double t_sample = 50.0)
{
    TrajectoryConfig c;
    c.n_traj = n_traj;
    c.t_burn = 10.0;
    c.t_sample = t_sample;
    c.seed = 11;
    return c;
}

} // namespace

TEST(Drift, CorrectionExamples)
{
    const auto a = ito_stratonovich_drift_correction(ModelParams(0.0, 0.0, 1.0), {1.0, 0.0});
    EXPECT_EQ(a.re, -1.0);
    EXPECT_EQ(a.im, 0.0);
    const auto b = ito_stratonovich_drift_correction(ModelParams(0.0, 0.0, 0.5), {0.0, 2.0});
    EXPECT_EQ(b.re, 0.0);
    EXPECT_EQ(b.im, -1.0);
    const auto z = ito_stratonovich_drift_correction(ModelParams(3.0, 2.0, 1.0), {0.0, 0.0});
    EXPECT_EQ(z.re, 0.0);
    EXPECT_EQ(z.im, 0.0);
}

TEST(Drift, SchemesDifferByCorrectionPointwise)
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int k = 0; k < 200; ++k) {
        const ModelParams p(u(rng), std::abs(u(rng)), 0.1 + std::abs(u(rng)));
        const cplx a(u(rng), u(rng));
        const cplx diff = stratonovich_drift(p, a) - ito_drift(p, a);
        const cplx corr = ito_stratonovich_drift_correction(p, ComplexAmplitude::from(a)).value();
        EXPECT_LE(std::abs(diff - corr), 1e-13 * (1.0 + p.eta() * std::pow(std::abs(a), 3)));
    }
}

TEST(Step, OriginIsAbsorbing)
{
    const ModelParams p(17.0, 20.0, 1.0);
    const NoiseRealization n{0.03, -0.05};
    EXPECT_EQ(step_ito(p, {0.0, 0.0}, n, 1e-3).value(), cplx(0.0));
    EXPECT_EQ(step_stratonovich(p, {0.0, 0.0}, n, 1e-3).value(), cplx(0.0));
    const auto q = step_quadrature(p, {0.0, 0.0}, n, 1e-3);
    EXPECT_EQ(q.x, 0.0);
    EXPECT_EQ(q.p, 0.0);
    const auto r = step_reduced_critical(p, {0.0, 0.0}, n, 1e-3);
    EXPECT_EQ(r.x, 0.0);
    EXPECT_EQ(r.p, 0.0);
}

TEST(Step, LinearRotationLimit)
{
    const ModelParams p(2.0, 0.0, 1e-12);
    const double dt = 1e-3;
    const cplx a0(0.7, -0.2);
    const cplx exact = a0 * std::exp(cplx(0.0, 2.0 * dt));
    EXPECT_LE(std::abs(step_ito(p, ComplexAmplitude::from(a0), {}, dt).value() - exact), 5.0 * dt * dt);
    EXPECT_LE(std::abs(step_stratonovich(p, ComplexAmplitude::from(a0), {}, dt).value() - exact), 5.0 * dt * dt);
}

TEST(Step, NoiselessAtSteadyState)
{
    const ModelParams p(17.0, 20.0, 1.0);
    const auto b = semiclassical::steady_states(p).front();
    const ComplexAmplitude a = b.amplitude();
    const double dt = 1e-3;
    const auto s = step_stratonovich(p, a, {}, dt);
    EXPECT_LE(std::abs(s.value() - a.value()), 1e-9);
    // The Ito drift keeps the +eta*alpha term at the mean-field fixed point.
    const auto i = step_ito(p, a, {}, dt);
    EXPECT_LE(std::abs(i.value() - a.value() * (1.0 + p.eta() * dt)), 1e-9);
    const auto q = step_quadrature(p, {b.x_s, b.p_s}, {}, dt);
    EXPECT_NEAR(q.x, b.x_s, 1e-9);
    EXPECT_NEAR(q.p, b.p_s, 1e-9);
}

TEST(Step, ReducedSystemFixedPoint)
{
    const ModelParams p(18.0, 20.0, 1.0);
    const double x = std::pow(8.0 * 20.0 * 2.0, 0.25);
    const QuadratureState fp{x, -x * x * x / 80.0};
    const auto q = step_reduced_critical(p, fp, {}, 1e-3);
    EXPECT_NEAR(q.x, fp.x, 1e-12);
    EXPECT_NEAR(q.p, fp.p, 1e-12);
    EXPECT_NEAR(x, equilibrium::EffectiveEquilibrium(p).well_position(), 1e-12);
}

TEST(Step, ComplexAndQuadratureFormsAgreeUnderSameNoise)
{
    const ModelParams p(17.0, 20.0, 1.0);
    const double dt = 1e-3;
    NoiseSource rng(3, 0);
    ComplexAmplitude a{1.1, -0.6};
    QuadratureState q = to_quadratures(a);
    for (int k = 0; k < 2000; ++k) {
        const auto n = rng.next(dt);
        a = step_stratonovich(p, a, n, dt);
        q = step_quadrature(p, q, n, dt);
    }
    const auto qa = to_quadratures(a);
    EXPECT_NEAR(qa.x, q.x, 1e-8);
    EXPECT_NEAR(qa.p, q.p, 1e-8);
}

TEST(Noise, IncrementStatistics)
{
    NoiseSource rng(42, 9);
    const double dt = 1e-3;
    const int n = 200000;
    double sxx = 0.0, spp = 0.0, sxp = 0.0;
    for (int k = 0; k < n; ++k) {
        const auto r = rng.next(dt);
        sxx += r.xi_x * r.xi_x;
        spp += r.xi_p * r.xi_p;
        sxp += r.xi_x * r.xi_p;
    }
    const double total = n * dt;
    const double tol = 3.0 * std::sqrt(2.0 / n);
    EXPECT_NEAR(sxx / total, 1.0, tol);
    EXPECT_NEAR(spp / total, 1.0, tol);
    EXPECT_NEAR(sxp / total, 0.0, 3.0 / std::sqrt(double(n)));
}

TEST(Noise, StreamsAreDeterministicAndDistinct)
{
    NoiseSource a(1, 0), b(1, 0), c(1, 1), d(2, 0);
    const double va = a.standard_normal();
    EXPECT_EQ(va, b.standard_normal());
    EXPECT_NE(va, c.standard_normal());
    EXPECT_NE(va, d.standard_normal());
}

TEST(Noise, BridgeRefinementPreservesPath)
{
    const double dt = 1e-3;
    IncrementStream coarse(8, 2, 0, dt);
    IncrementStream fine(8, 2, 2, dt / 4.0);
    double fine_var = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto c = coarse.next();
        double sx = 0.0, sp = 0.0;
        for (int j = 0; j < 4; ++j) {
            const auto f = fine.next();
            sx += f.xi_x;
            sp += f.xi_p;
            fine_var += f.xi_x * f.xi_x;
        }
        EXPECT_NEAR(sx, c.xi_x, 1e-15);
        EXPECT_NEAR(sp, c.xi_p, 1e-15);
    }
    EXPECT_NEAR(fine_var / (4000 * dt / 4.0), 1.0, 3.0 * std::sqrt(2.0 / 4000));
}

TEST(Config, GuardsRefuseToStart)
{
    const ModelParams p(17.0, 20.0, 1.0);
    TrajectoryConfig c;
    c.dt = 0.01; // dt * n_s = 0.105
    EXPECT_THROW(run_ensemble(p, c), domain_error);
    c = TrajectoryConfig{};
    c.n_traj = 1;
    c.t_sample = 5.0; // 500 samples
    EXPECT_THROW(run_ensemble(p, c), domain_error);
    c = TrajectoryConfig{};
    c.sample_stride = 0;
    EXPECT_THROW(validate(p, c), domain_error);
}

TEST(Statistics, AutocorrelationTimeOfAr1)
{
    std::mt19937_64 rng(17);
    std::normal_distribution<double> z;
    const double phi = 0.9;
    std::vector<double> s(400000);
    double v = 0.0;
    for (auto& e : s) e = v = phi * v + z(rng);
    const double tau = integrated_autocorrelation_time(s);
    EXPECT_NEAR(tau, (1.0 + phi) / (2.0 * (1.0 - phi)), 0.1 * 9.5);
    std::vector<double> white(100000);
    for (auto& e : white) e = z(rng);
    EXPECT_NEAR(integrated_autocorrelation_time(white), 0.5, 0.05);
}

TEST(Ensemble, DeterministicAcrossThreadCounts)
{
    const ModelParams p(23.0, 20.0, 1.0);
    const auto c = short_config(24, 20.0);
    const auto a = run_ensemble(p, c, 1);
    const auto b = run_ensemble(p, c, 3);
    for (std::size_t m = 0; m < moment_count; ++m) {
        EXPECT_EQ(a.moments[m].mean, b.moments[m].mean);
        EXPECT_EQ(a.moments[m].std_error, b.moments[m].std_error);
    }
    EXPECT_EQ(*a.observables.g2, *b.observables.g2);
    auto c2 = c;
    c2.seed = 12;
    EXPECT_NE(run_ensemble(p, c2).moments[m_x2].mean, a.moments[m_x2].mean);
}

TEST(Ensemble, ParityAndConsistency)
{
    const ModelParams p(17.0, 20.0, 1.0);
    const auto r = run_ensemble(p, short_config());
    EXPECT_GE(r.batches, 16);
    EXPECT_EQ(r.aborted, 0);
    EXPECT_LE(std::abs(r[m_x].mean), 3.0 * r[m_x].std_error);
    EXPECT_LE(std::abs(r[m_p].mean), 3.0 * r[m_p].std_error);
    EXPECT_LE(r.observables.consistency_residual(), 1e-12);
    ASSERT_TRUE(r.observables.errors.has_value());
    EXPECT_GT(r.observables.errors->n, 0.0);
    EXPECT_GT(r[m_x2].autocorrelation_time_estimate, 0.0);
    EXPECT_EQ(r[m_x2].n_samples, 64LL * 5000);
}

TEST(Ensemble, FewTrajectoriesStillGiveSixteenBatches)
{
    auto c = short_config(2, 100.0);
    const auto r = run_ensemble(ModelParams(23.0, 20.0, 1.0), c);
    EXPECT_GE(r.batches, 16);
}

TEST(Ensemble, HalvingDtOnSharedBrownianPath)
{
    const ModelParams p(23.0, 20.0, 1.0);
    auto a = short_config(32, 40.0);
    auto b = a;
    b.dt = a.dt / 2.0;
    b.sample_stride = 2 * a.sample_stride;
    b.brownian_refinement = 1;
    const auto ra = run_ensemble(p, a);
    const auto rb = run_ensemble(p, b);
    for (const Moment m : {m_x2, m_p2, m_xp}) {
        EXPECT_LT(std::abs(ra[m].mean - rb[m].mean), ra[m].std_error) << moment_names[m];
    }
}

TEST(Ensemble, QuadratureSystemMatchesComplexSystem)
{
    const ModelParams p(17.0, 20.0, 1.0);
    auto c = short_config(16, 20.0);
    const auto a = run_ensemble(p, c);
    c.system = System::full_quadrature;
    const auto b = run_ensemble(p, c);
    EXPECT_NEAR(a[m_x2].mean, b[m_x2].mean, 3.0 * std::hypot(a[m_x2].std_error, b[m_x2].std_error));
}

TEST(Ensemble, ReducedCriticalMatchesEquilibrium)
{
    const ModelParams p(20.0, 20.0, 1.0);
    auto c = short_config(200, 100.0);
    c.system = System::reduced_critical;
    const auto r = run_ensemble(p, c);
    const auto cf = equilibrium::critical_closed_forms(p);
    EXPECT_NEAR(r[m_x2].mean, cf.observables.x2, 3.0 * r[m_x2].std_error + 0.01 * cf.observables.x2);
    EXPECT_NEAR(r[m_p2].mean, 0.5, 3.0 * r[m_p2].std_error + 0.005);
}

TEST(Trajectory, NoiselessMatchesDeterministicEvolution)
{
    const ModelParams p(17.0, 20.0, 1.0);
    TrajectoryConfig c;
    c.noise_enabled = false;
    c.t_burn = 0.0;
    c.t_sample = 2.0;
    c.dt = 1e-4;
    c.sample_stride = 1000;
    c.initial_state = QuadratureState{0.4, 0.3};
    const auto traj = simulate_trajectory(p, c);
    const auto ref = semiclassical::evolve(p, to_amplitude(*c.initial_state), 2.0, 1e-4, 1000);
    ASSERT_EQ(traj.size(), ref.size());
    for (std::size_t k = 0; k < ref.size(); ++k) {
        const auto q = to_quadratures(ref[k].alpha);
        EXPECT_NEAR(traj[k].x, q.x, 1e-6);
        EXPECT_NEAR(traj[k].p, q.p, 1e-6);
    }
}
