#pragma once

// Truncated-Wigner Langevin dynamics with multiplicative noise.
//
//   Ito:          d(alpha) = [i D alpha - i G alpha* - eta alpha (|alpha|^2 - 1)] dt - i sqrt(2 eta) alpha* dW
//   Stratonovich: d(alpha) = [i D alpha - i G alpha* - eta alpha* alpha^2] dt - i sqrt(2 eta) alpha* o dW
//
// with complex dW = (dW_x + i dW_p)/sqrt(2), <dW_x^2> = <dW_p^2> = dt.
// Ensemble averages of symmetric quadrature moments give the Weyl-ordered
// operator averages.

#include <tpo/model.hpp>
#include <tpo/parallel.hpp>
#include <tpo/semiclassical.hpp>

#include <boost/random/normal_distribution.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tpo::langevin {

enum class Scheme { ito_euler_maruyama, stratonovich_heun };
enum class System { full_complex, full_quadrature, reduced_critical };

inline std::string_view to_string(Scheme s)
{
    return s == Scheme::ito_euler_maruyama ? "ito_euler_maruyama" : "stratonovich_heun";
}

inline std::string_view to_string(System s)
{
    switch (s) {
    case System::full_complex: return "full_complex";
    case System::full_quadrature: return "full_quadrature";
    case System::reduced_critical: return "reduced_critical";
    }
    return "unknown";
}

/// Ensemble configuration. Times are in units of 1/eta.
struct TrajectoryConfig {
    double dt = 1e-3;
    double t_burn = 20.0;
    double t_sample = 200.0;
    int sample_stride = 10;
    int n_traj = 2000;
    std::uint64_t seed = 20240917;
    Scheme scheme = Scheme::stratonovich_heun;
    System system = System::full_complex;
    /// Diagnostic: drop the stochastic term (deterministic limit).
    bool noise_enabled = true;
    /// Draw the Brownian path on a step 2^r * dt and refine it to dt by
    /// bridge sampling, so runs at dt and dt/2 share one path.
    int brownian_refinement = 0;
    /// Overrides the vacuum-plus-well initial draw when set.
    std::optional<QuadratureState> initial_state;
};

struct MomentEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long long n_samples = 0;
    /// Integrated autocorrelation time, in units of 1/eta.
    double autocorrelation_time_estimate = 0.0;
};

struct NoiseRealization {
    double xi_x = 0.0;
    double xi_p = 0.0;

    cplx complex_increment() const { return cplx(xi_x, xi_p) / std::sqrt(2.0); }
};

/// Independent Gaussian increments of variance dt, one stream per
/// (seed, trajectory index).
class NoiseSource {
public:
    NoiseSource(std::uint64_t seed, std::uint64_t stream)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), 0x7470u};
        engine_.seed(seq);
    }

    double standard_normal() { return normal_(engine_); }

    NoiseRealization next(double dt)
    {
        const double s = std::sqrt(dt);
        const double a = normal_(engine_);
        const double b = normal_(engine_);
        return {s * a, s * b};
    }

private:
    std::mt19937_64 engine_;
    boost::random::normal_distribution<double> normal_{0.0, 1.0}; // ziggurat
};

/// Per-trajectory Brownian increments, optionally bridge-refined from a
/// coarser path.
class IncrementStream {
public:
    IncrementStream(std::uint64_t seed, std::uint64_t index, int refinement, double dt)
        : coarse_(seed, index), fine_(seed ^ 0x9e3779b97f4a7c15ull, index), level_(refinement), dt_(dt)
    {
        if (refinement < 0 || refinement > 16) throw domain_error("brownian_refinement must lie in [0, 16]");
        buffer_.resize(std::size_t{1} << refinement);
        pos_ = buffer_.size();
    }

    /// Source for draws that are not path increments (initial state).
    NoiseSource& coarse() { return coarse_; }

    NoiseRealization next()
    {
        if (level_ == 0) return coarse_.next(dt_);
        if (pos_ == buffer_.size()) refill();
        return buffer_[pos_++];
    }

private:
    void refill()
    {
        const std::size_t n = buffer_.size();
        buffer_[0] = coarse_.next(dt_ * static_cast<double>(n));
        // Split each interval in half, level by level.
        for (std::size_t width = n; width > 1; width /= 2) {
            const double h = dt_ * static_cast<double>(width);
            const double s = 0.5 * std::sqrt(h);
            for (std::size_t start = 0; start < n; start += width) {
                const NoiseRealization w = buffer_[start];
                const double zx = s * fine_.standard_normal();
                const double zp = s * fine_.standard_normal();
                buffer_[start] = {0.5 * w.xi_x + zx, 0.5 * w.xi_p + zp};
                buffer_[start + width / 2] = {0.5 * w.xi_x - zx, 0.5 * w.xi_p - zp};
            }
        }
        pos_ = 0;
    }

    NoiseSource coarse_;
    NoiseSource fine_;
    int level_;
    double dt_;
    std::vector<NoiseRealization> buffer_;
    std::size_t pos_ = 0;
};

// --- drifts ---------------------------------------------------------------
// Written out in real arithmetic: plain complex products go through the
// Annex G NaN/inf checks and dominate the step cost.

namespace detail {

inline cplx mul(cplx a, cplx b)
{
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

} // namespace detail

inline cplx stratonovich_drift(const ModelParams& params, cplx a)
{
    const double re = a.real(), im = a.imag();
    const double k = params.eta() * (re * re + im * im); // eta a* a^2 = eta |a|^2 a
    return {-params.delta() * im - params.g() * im - k * re, params.delta() * re - params.g() * re - k * im};
}

inline cplx ito_drift(const ModelParams& params, cplx a)
{
    const double re = a.real(), im = a.imag();
    const double k = params.eta() * (re * re + im * im - 1.0);
    return {-params.delta() * im - params.g() * im - k * re, params.delta() * re - params.g() * re - k * im};
}

/// Stratonovich drift minus Ito drift: -eta * alpha.
inline ComplexAmplitude ito_stratonovich_drift_correction(const ModelParams& params, ComplexAmplitude alpha)
{
    return {-params.eta() * alpha.re, -params.eta() * alpha.im};
}

/// -i sqrt(2 eta) a*
inline cplx noise_coefficient(const ModelParams& params, cplx a)
{
    const double s = std::sqrt(2.0 * params.eta());
    return {-s * a.imag(), -s * a.real()};
}

// --- single steps -----------------------------------------------------------

inline ComplexAmplitude step_ito(const ModelParams& params, ComplexAmplitude alpha, NoiseRealization noise, double dt)
{
    const cplx a = alpha.value();
    const cplx xi = noise.complex_increment();
    return ComplexAmplitude::from(a + ito_drift(params, a) * dt + detail::mul(noise_coefficient(params, a), xi));
}

inline ComplexAmplitude step_stratonovich(const ModelParams& params, ComplexAmplitude alpha, NoiseRealization noise,
                                          double dt)
{
    const cplx a = alpha.value();
    const cplx xi = noise.complex_increment();
    const cplx f0 = stratonovich_drift(params, a);
    const cplx g0 = noise_coefficient(params, a);
    const cplx pred = a + f0 * dt + detail::mul(g0, xi);
    const cplx f1 = stratonovich_drift(params, pred);
    const cplx g1 = noise_coefficient(params, pred);
    return ComplexAmplitude::from(a + 0.5 * (f0 + f1) * dt + detail::mul(0.5 * (g0 + g1), xi));
}

namespace detail {

struct QuadIncrement {
    double dx, dp;
};

inline QuadIncrement quadrature_drift(const ModelParams& params, QuadratureState q)
{
    const double r2 = q.x * q.x + q.p * q.p;
    const double half_eta = 0.5 * params.eta();
    return {-(params.delta() + params.g()) * q.p - half_eta * q.x * r2,
            (params.delta() - params.g()) * q.x - half_eta * q.p * r2};
}

inline QuadIncrement quadrature_noise(const ModelParams& params, QuadratureState q, NoiseRealization n)
{
    const double s = std::sqrt(params.eta());
    return {s * (q.x * n.xi_p - q.p * n.xi_x), -s * (q.x * n.xi_x + q.p * n.xi_p)};
}

inline QuadIncrement reduced_drift(const ModelParams& params, QuadratureState q)
{
    const double half_eta = 0.5 * params.eta();
    return {-2.0 * params.g() * q.p - half_eta * q.x * q.x * q.x,
            (params.delta() - params.g()) * q.x - half_eta * q.p * q.x * q.x};
}

inline QuadIncrement reduced_noise(const ModelParams& params, QuadratureState q, NoiseRealization n)
{
    return {0.0, -std::sqrt(params.eta()) * q.x * n.xi_x};
}

template <class Drift, class Noise>
QuadratureState heun(const ModelParams& params, QuadratureState q, NoiseRealization n, double dt, Drift drift,
                     Noise noise)
{
    const QuadIncrement f0 = drift(params, q);
    const QuadIncrement g0 = noise(params, q, n);
    const QuadratureState pred{q.x + f0.dx * dt + g0.dx, q.p + f0.dp * dt + g0.dp};
    const QuadIncrement f1 = drift(params, pred);
    const QuadIncrement g1 = noise(params, pred, n);
    return {q.x + 0.5 * (f0.dx + f1.dx) * dt + 0.5 * (g0.dx + g1.dx),
            q.p + 0.5 * (f0.dp + f1.dp) * dt + 0.5 * (g0.dp + g1.dp)};
}

} // namespace detail

/// Stratonovich-Heun step of the coupled quadrature equations.
inline QuadratureState step_quadrature(const ModelParams& params, QuadratureState state, NoiseRealization noise,
                                       double dt)
{
    return detail::heun(params, state, noise, dt, detail::quadrature_drift, detail::quadrature_noise);
}

/// Ito-Euler step of the quadrature equations (drift gains +eta*(x, p)).
inline QuadratureState step_quadrature_ito(const ModelParams& params, QuadratureState q, NoiseRealization noise,
                                           double dt)
{
    const auto f = detail::quadrature_drift(params, q);
    const auto g = detail::quadrature_noise(params, q, noise);
    return {q.x + (f.dx + params.eta() * q.x) * dt + g.dx, q.p + (f.dp + params.eta() * q.p) * dt + g.dp};
}

/// Heun step of the near-critical reduced system (only the x*xi_x noise).
inline QuadratureState step_reduced_critical(const ModelParams& params, QuadratureState state, NoiseRealization noise,
                                             double dt)
{
    return detail::heun(params, state, noise, dt, detail::reduced_drift, detail::reduced_noise);
}

// --- configuration checks ---------------------------------------------------

/// |alpha|^2 beyond which a trajectory counts as diverged.
inline double abort_threshold(const ModelParams& params)
{
    const double n_s = semiclassical::photon_number(params);
    return 100.0 * std::max({n_s, std::pow(params.g_over_eta(), 2.0 / 3.0), 1.0});
}

inline void validate(const ModelParams& params, const TrajectoryConfig& c)
{
    if (!(c.dt > 0.0) || !(c.t_burn >= 0.0) || !(c.t_sample > 0.0) || c.sample_stride < 1 || c.n_traj < 1) {
        throw domain_error("trajectory config: need dt > 0, t_burn >= 0, t_sample > 0, stride >= 1, n_traj >= 1");
    }
    const double dt_phys = c.dt / params.eta();
    const double n_expected = std::max(semiclassical::photon_number(params), 1.0);
    if (dt_phys * params.eta() * n_expected > 0.05) {
        throw domain_error("trajectory config: dt*eta*<|alpha|^2> = " + std::to_string(c.dt * n_expected) +
                           " exceeds 0.05");
    }
    if (dt_phys * std::max(std::abs(params.delta()), params.g()) > 0.2) {
        throw domain_error("trajectory config: dt*max(|delta|, G) exceeds 0.2");
    }
    const double per_traj = std::floor(c.t_sample / c.dt / c.sample_stride);
    if (per_traj * c.n_traj < 1e4) {
        throw domain_error("trajectory config: fewer than 1e4 samples in total");
    }
}

// --- statistics -------------------------------------------------------------

/// Integrated autocorrelation time (in samples) with the self-consistent
/// window W >= 5 tau.
inline double integrated_autocorrelation_time(std::span<const double> series)
{
    const std::size_t n = series.size();
    if (n < 4) return 0.5;
    double mean = 0.0;
    for (double v : series) mean += v;
    mean /= static_cast<double>(n);
    double c0 = 0.0;
    for (double v : series) c0 += (v - mean) * (v - mean);
    c0 /= static_cast<double>(n);
    if (c0 <= 0.0) return 0.5;
    double tau = 0.5;
    const std::size_t max_lag = n / 4;
    for (std::size_t lag = 1; lag < max_lag; ++lag) {
        double c = 0.0;
        for (std::size_t i = 0; i + lag < n; ++i) c += (series[i] - mean) * (series[i + lag] - mean);
        c /= static_cast<double>(n - lag);
        tau += c / c0;
        if (static_cast<double>(lag) >= 5.0 * tau) break;
    }
    return std::max(tau, 0.5);
}

enum Moment : std::size_t { m_x, m_p, m_x2, m_p2, m_xp, m_x4, m_x2p2, m_p4, moment_count };

inline std::array<double, moment_count> moment_terms(double x, double p)
{
    const double x2 = x * x, p2 = p * p;
    return {x, p, x2, p2, x * p, x2 * x2, x2 * p2, p2 * p2};
}

// --- trajectories -----------------------------------------------------------

struct TrajectoryPoint {
    double t = 0.0; // units of 1/eta
    double x = 0.0;
    double p = 0.0;
};

namespace detail {

inline QuadratureState initial_state(const ModelParams& params, const TrajectoryConfig& c, std::uint64_t index,
                                     NoiseSource& rng)
{
    if (c.initial_state) return *c.initial_state;
    const double s = std::sqrt(0.5);
    QuadratureState q{s * rng.standard_normal(), s * rng.standard_normal()};
    const auto branches = semiclassical::steady_states(params);
    if (branches.size() == 3) {
        const auto& b = branches[index % 2 == 0 ? 0 : 1];
        q.x += b.x_s;
        q.p += b.p_s;
    }
    return q;
}

/// Advances one step of the configured system and scheme.
class Stepper {
public:
    Stepper(const ModelParams& params, const TrajectoryConfig& c) : params_(params), c_(c) {}

    QuadratureState operator()(QuadratureState q, NoiseRealization n, double dt) const
    {
        switch (c_.system) {
        case System::full_complex: {
            const ComplexAmplitude a = to_amplitude_unchecked(q);
            const ComplexAmplitude next = c_.scheme == Scheme::ito_euler_maruyama
                                              ? step_ito(params_, a, n, dt)
                                              : step_stratonovich(params_, a, n, dt);
            return {std::sqrt(2.0) * next.re, std::sqrt(2.0) * next.im};
        }
        case System::full_quadrature:
            return c_.scheme == Scheme::ito_euler_maruyama ? step_quadrature_ito(params_, q, n, dt)
                                                           : step_quadrature(params_, q, n, dt);
        case System::reduced_critical:
            return step_reduced_critical(params_, q, n, dt);
        }
        return q;
    }

private:
    static ComplexAmplitude to_amplitude_unchecked(QuadratureState q)
    {
        return {q.x / std::sqrt(2.0), q.p / std::sqrt(2.0)};
    }

    const ModelParams& params_;
    const TrajectoryConfig& c_;
};

struct TrajectoryOutcome {
    bool aborted = false;
    std::vector<std::array<double, moment_count>> block_means;
    std::vector<double> xs, ps; // retained sample series (autocorrelation)
};

inline TrajectoryOutcome run_trajectory(const ModelParams& params, const TrajectoryConfig& c, std::uint64_t index,
                                        int blocks, bool keep_series)
{
    IncrementStream noise(c.seed, index, c.brownian_refinement, c.dt / params.eta());
    QuadratureState q = initial_state(params, c, index, noise.coarse());
    const Stepper step(params, c);
    const double dt = c.dt / params.eta();
    const long burn = std::lround(c.t_burn / c.dt);
    const long samples = static_cast<long>(std::floor(c.t_sample / c.dt / c.sample_stride));
    const double limit = 2.0 * abort_threshold(params); // x^2 + p^2 = 2 |alpha|^2

    TrajectoryOutcome out;
    const auto advance = [&]() {
        NoiseRealization n = noise.next();
        if (!c.noise_enabled) n = {0.0, 0.0};
        q = step(q, n, dt);
        const double r2 = q.x * q.x + q.p * q.p;
        return std::isfinite(r2) && r2 <= limit;
    };
    for (long k = 0; k < burn; ++k) {
        if (!advance()) {
            out.aborted = true;
            return out;
        }
    }
    if (keep_series) {
        out.xs.reserve(static_cast<std::size_t>(samples));
        out.ps.reserve(static_cast<std::size_t>(samples));
    }
    out.block_means.assign(static_cast<std::size_t>(blocks), {});
    const long per_block = samples / blocks;
    for (long s = 0; s < samples; ++s) {
        for (int k = 0; k < c.sample_stride; ++k) {
            if (!advance()) {
                out.aborted = true;
                return out;
            }
        }
        const long b = std::min<long>(s / std::max(per_block, 1L), blocks - 1);
        const auto t = moment_terms(q.x, q.p);
        for (std::size_t m = 0; m < moment_count; ++m) out.block_means[static_cast<std::size_t>(b)][m] += t[m];
        if (keep_series) {
            out.xs.push_back(q.x);
            out.ps.push_back(q.p);
        }
    }
    for (int b = 0; b < blocks; ++b) {
        const long count = (b + 1 == blocks) ? samples - per_block * (blocks - 1) : per_block;
        for (double& v : out.block_means[static_cast<std::size_t>(b)]) v /= static_cast<double>(std::max(count, 1L));
    }
    return out;
}

} // namespace detail

/// Single trajectory sampled every `sample_stride` steps from t = 0.
inline std::vector<TrajectoryPoint> simulate_trajectory(const ModelParams& params, const TrajectoryConfig& c,
                                                        std::uint64_t index = 0)
{
    IncrementStream noise(c.seed, index, c.brownian_refinement, c.dt / params.eta());
    QuadratureState q = detail::initial_state(params, c, index, noise.coarse());
    const detail::Stepper step(params, c);
    const double dt = c.dt / params.eta();
    const long total = std::lround((c.t_burn + c.t_sample) / c.dt);
    const double limit = 2.0 * abort_threshold(params);
    std::vector<TrajectoryPoint> out;
    out.reserve(static_cast<std::size_t>(total / c.sample_stride + 1));
    out.push_back({0.0, q.x, q.p});
    for (long k = 1; k <= total; ++k) {
        NoiseRealization n = noise.next();
        if (!c.noise_enabled) n = {0.0, 0.0};
        q = step(q, n, dt);
        const double r2 = q.x * q.x + q.p * q.p;
        if (!std::isfinite(r2) || r2 > limit) {
            throw numerical_error("simulate_trajectory: trajectory diverged at t = " + std::to_string(k * c.dt));
        }
        if (k % c.sample_stride == 0) out.push_back({k * c.dt, q.x, q.p});
    }
    return out;
}

struct EnsembleResult {
    ObservableSet observables;
    std::array<MomentEstimate, moment_count> moments{};
    int n_traj = 0;
    int aborted = 0;
    int batches = 0;

    const MomentEstimate& operator[](Moment m) const { return moments[m]; }
};

inline constexpr std::array<std::string_view, moment_count> moment_names = {"x", "p", "x2", "p2", "xp", "x4",
                                                                            "x2p2", "p4"};

/// Time-and-ensemble averages over independent trajectories.
inline EnsembleResult run_ensemble(const ModelParams& params, const TrajectoryConfig& c, unsigned threads = 1)
{
    validate(params, c);
    const int blocks = std::max(1, (16 + c.n_traj - 1) / c.n_traj);
    const int series_traj = std::min(c.n_traj, 8);
    std::vector<detail::TrajectoryOutcome> outcomes(static_cast<std::size_t>(c.n_traj));
    parallel_for(outcomes.size(), threads, [&](std::size_t i) {
        outcomes[i] = detail::run_trajectory(params, c, i, blocks, static_cast<int>(i) < series_traj);
    });

    EnsembleResult r;
    r.n_traj = c.n_traj;
    std::vector<std::array<double, moment_count>> batch;
    for (const auto& o : outcomes) {
        if (o.aborted) {
            ++r.aborted;
            continue;
        }
        for (const auto& b : o.block_means) batch.push_back(b);
    }
    if (r.aborted > 0.01 * c.n_traj) {
        throw numerical_error("run_ensemble: " + std::to_string(r.aborted) + " of " + std::to_string(c.n_traj) +
                              " trajectories aborted (limit 1%); reduce dt");
    }
    const std::size_t nb = batch.size();
    if (nb < 2) throw numerical_error("run_ensemble: not enough batches");
    r.batches = static_cast<int>(nb);

    const long long per_traj = static_cast<long long>(std::floor(c.t_sample / c.dt / c.sample_stride));
    const long long n_samples = per_traj * (c.n_traj - r.aborted);

    // Batch-means estimate of a linear (or general) function of the moments.
    auto batch_stats = [&](auto f) {
        double mean = 0.0;
        for (const auto& b : batch) mean += f(b);
        mean /= static_cast<double>(nb);
        double var = 0.0;
        for (const auto& b : batch) var += (f(b) - mean) * (f(b) - mean);
        var /= static_cast<double>(nb - 1);
        return std::pair{mean, std::sqrt(var / static_cast<double>(nb))};
    };

    // Autocorrelation times from the retained series (first trajectories
    // that did not abort).
    std::array<double, moment_count> tau{};
    int tau_count = 0;
    for (int i = 0; i < series_traj; ++i) {
        const auto& o = outcomes[static_cast<std::size_t>(i)];
        if (o.aborted || o.xs.empty()) continue;
        std::vector<double> s(o.xs.size());
        for (std::size_t m = 0; m < moment_count; ++m) {
            for (std::size_t j = 0; j < s.size(); ++j) s[j] = moment_terms(o.xs[j], o.ps[j])[m];
            tau[m] += integrated_autocorrelation_time(s);
        }
        ++tau_count;
    }
    for (std::size_t m = 0; m < moment_count; ++m) {
        const auto [mean, se] = batch_stats([m](const auto& b) { return b[m]; });
        r.moments[m].mean = mean;
        r.moments[m].std_error = se;
        r.moments[m].n_samples = n_samples;
        r.moments[m].autocorrelation_time_estimate =
            tau_count > 0 ? tau[m] / tau_count * c.sample_stride * c.dt : 0.0;
    }

    ObservableSet s = ObservableSet::from_quadratures(r.moments[m_x2].mean, r.moments[m_p2].mean,
                                                      r.moments[m_xp].mean, Method::langevin);
    ObservableErrors e;
    e.x2 = r.moments[m_x2].std_error;
    e.p2 = r.moments[m_p2].std_error;
    e.xp_sym = r.moments[m_xp].std_error;
    e.im_a2 = e.xp_sym;
    e.n = batch_stats([](const auto& b) { return 0.5 * (b[m_x2] + b[m_p2] - 1.0); }).second;
    e.re_a2 = batch_stats([](const auto& b) { return 0.5 * (b[m_x2] - b[m_p2]); }).second;

    // g2 is a ratio of means: jackknife over batches.
    if (s.n > 0.0) {
        std::array<double, moment_count> total{};
        for (const auto& b : batch)
            for (std::size_t m = 0; m < moment_count; ++m) total[m] += b[m];
        auto g2_of = [](const std::array<double, moment_count>& mean) {
            return g2_from_wigner_moments(mean[m_x2], mean[m_p2], mean[m_x4], mean[m_x2p2], mean[m_p4]);
        };
        std::array<double, moment_count> full{};
        for (std::size_t m = 0; m < moment_count; ++m) full[m] = total[m] / static_cast<double>(nb);
        s.g2 = g2_of(full);
        double jk_mean = 0.0;
        std::vector<double> jk(nb);
        for (std::size_t j = 0; j < nb; ++j) {
            std::array<double, moment_count> loo{};
            for (std::size_t m = 0; m < moment_count; ++m)
                loo[m] = (total[m] - batch[j][m]) / static_cast<double>(nb - 1);
            jk[j] = g2_of(loo);
            jk_mean += jk[j];
        }
        jk_mean /= static_cast<double>(nb);
        double var = 0.0;
        for (double v : jk) var += (v - jk_mean) * (v - jk_mean);
        e.g2 = std::sqrt(var * static_cast<double>(nb - 1) / static_cast<double>(nb));
    }
    s.errors = e;
    r.observables = s;
    return r;
}

} // namespace tpo::langevin
