#include <tpo/model.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace tpo;

TEST(ModelParams, ValidatesInputs)
{
    EXPECT_NO_THROW(ModelParams(20.0, 20.0, 1.0));
    EXPECT_NO_THROW(ModelParams(-3.0, 0.0, 0.5));
    EXPECT_THROW(ModelParams(1.0, 1.0, 0.0), domain_error);
    EXPECT_THROW(ModelParams(1.0, 1.0, -1.0), domain_error);
    EXPECT_THROW(ModelParams(1.0, -0.1, 1.0), domain_error);
    EXPECT_THROW(ModelParams(std::nan(""), 1.0, 1.0), domain_error);
    EXPECT_THROW(ModelParams(1.0, std::numeric_limits<double>::infinity(), 1.0), domain_error);
}

TEST(ModelParams, DimensionlessRatiosAreScaleInvariant)
{
    const ModelParams p(17.0, 20.0, 1.0);
    const ModelParams q = p.rescaled(3.5);
    EXPECT_DOUBLE_EQ(q.delta_over_eta(), p.delta_over_eta());
    EXPECT_DOUBLE_EQ(q.g_over_eta(), p.g_over_eta());
    EXPECT_DOUBLE_EQ(q.eta(), 3.5);
    EXPECT_THROW(p.rescaled(0.0), domain_error);
}

TEST(Quadratures, RoundTrip)
{
    const ComplexAmplitude a{1.25, -0.75};
    const QuadratureState q = to_quadratures(a);
    EXPECT_DOUBLE_EQ(q.x, std::sqrt(2.0) * 1.25);
    EXPECT_DOUBLE_EQ(q.p, -std::sqrt(2.0) * 0.75);
    const ComplexAmplitude b = to_amplitude(q);
    EXPECT_NEAR(b.re, a.re, 1e-15);
    EXPECT_NEAR(b.im, a.im, 1e-15);
    EXPECT_THROW(to_quadratures({std::nan(""), 0.0}), domain_error);
}

TEST(EnergyGap, ClosesAtThreshold)
{
    EXPECT_NEAR(*energy_gap(ModelParams(25.0, 20.0, 1.0)), 15.0, 1e-12);
    EXPECT_NEAR(*energy_gap(ModelParams(20.0, 20.0, 1.0)), 0.0, 1e-12);
    EXPECT_FALSE(energy_gap(ModelParams(17.0, 20.0, 1.0)).has_value());
}

TEST(Method, NamesRoundTrip)
{
    for (Method m : {Method::semiclassical, Method::exact, Method::boltzmann, Method::langevin}) {
        EXPECT_EQ(parse_method(to_string(m)), m);
    }
    EXPECT_FALSE(parse_method("bogus").has_value());
}

TEST(ObservableSet, QuadratureIdentitiesBothWays)
{
    const ObservableSet a = ObservableSet::from_normal_ordered(3.0, cplx(1.5, -0.4), Method::exact);
    EXPECT_DOUBLE_EQ(a.x2, 5.0);
    EXPECT_DOUBLE_EQ(a.p2, 2.0);
    EXPECT_DOUBLE_EQ(a.xp_sym, -0.4);
    EXPECT_LE(a.consistency_residual(), 1e-15);

    const ObservableSet b = ObservableSet::from_quadratures(a.x2, a.p2, a.xp_sym, Method::langevin);
    EXPECT_NEAR(b.n, 3.0, 1e-15);
    EXPECT_NEAR(b.a2.real(), 1.5, 1e-15);
    EXPECT_NEAR(b.a2.imag(), -0.4, 1e-15);
}

TEST(SecondOrderCorrelation, GaussianStatesFromWignerMoments)
{
    // Thermal state with mean n: x, p independent Gaussians of variance n + 1/2.
    const double n = 2.5, v = n + 0.5;
    EXPECT_NEAR(g2_from_wigner_moments(v, v, 3 * v * v, v * v, 3 * v * v), 2.0, 1e-13);
    // Coherent state |alpha>, alpha = 2: x = 2 sqrt2 + noise(1/2), p = noise(1/2).
    const double m = 2.0 * std::sqrt(2.0), s = 0.5;
    const double x2 = m * m + s, x4 = m * m * m * m + 6 * m * m * s + 3 * s * s;
    EXPECT_NEAR(g2_from_wigner_moments(x2, s, x4, x2 * s, 3 * s * s), 1.0, 1e-13);
}
