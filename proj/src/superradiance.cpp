#include "dce/superradiance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dce/rng.hpp"
#include "dce/stats.hpp"

namespace dce {

void EnsembleState::validate() const {
    if (!(n_atoms >= 1.0)) {
        throw std::invalid_argument("EnsembleState.n_atoms must be >= 1");
    }
    if (!(n_seed >= 0.0)) {
        throw std::invalid_argument("EnsembleState.n_seed must be >= 0");
    }
    if (t_sr.value_in(dims::time, "EnsembleState.t_sr") <= 0.0) {
        throw std::invalid_argument("EnsembleState.t_sr must be > 0");
    }
    if (omega.value_in(dims::frequency, "EnsembleState.omega") <= 0.0) {
        throw std::invalid_argument("EnsembleState.omega must be > 0");
    }
}

Quantity peak_power(const EnsembleState& ens) {
    ens.validate();
    const Quantity p =
        units::scalar(ens.n_atoms) * Constants::si().hbar * ens.omega / ens.t_sr;
    assert_dim(p, dims::power, "peak_power result");
    return p;
}

Quantity delay_time(const EnsembleState& ens) {
    ens.validate();
    const double ratio = ens.n_atoms / (1.0 + ens.n_seed);
    if (ratio <= 1.0) return units::seconds(0.0);
    const Quantity t_d = ens.t_sr * units::scalar(std::log(ratio));
    assert_dim(t_d, dims::time, "delay_time result");
    return t_d;
}

double logistic_population(const EnsembleState& ens, double t_s) {
    ens.validate();
    const double n = ens.n_atoms;
    const double floor_pop = 1.0 + ens.n_seed;
    const double c = n + floor_pop;
    const double t1_cav = ens.t_sr.value_in(dims::time) * n;
    // x = c * sigmoid(-z); split on the sign of z for stability at large |z|.
    const double z = c * t_s / t1_cav + std::log(floor_pop / n);
    if (z >= 0.0) {
        const double e = std::exp(-z);
        return c * e / (1.0 + e);
    }
    return c / (1.0 + std::exp(z));
}

PulseTrace pulse_shape(const EnsembleState& ens, const std::vector<double>& t_grid_s) {
    ens.validate();
    if (t_grid_s.empty() || t_grid_s.front() != 0.0) {
        throw std::invalid_argument("pulse_shape: grid must start at t = 0");
    }
    for (std::size_t i = 1; i < t_grid_s.size(); ++i) {
        if (!(t_grid_s[i] > t_grid_s[i - 1])) {
            throw std::invalid_argument("pulse_shape: grid must be strictly increasing");
        }
    }

    const double n = ens.n_atoms;
    const double floor_pop = 1.0 + ens.n_seed;
    const double c = n + floor_pop;
    const double t_sr_s = ens.t_sr.value_in(dims::time);
    const double t1_cav = t_sr_s * n;
    const double quantum_j =
        (Constants::si().hbar * ens.omega).value_in(dims::energy, "pulse_shape photon energy");

    const auto rate_of = [c, t1_cav](double x) { return x * (c - x) / t1_cav; };

    PulseTrace trace;
    trace.times_s = t_grid_s;
    trace.emission_rate_per_s.reserve(t_grid_s.size());
    trace.power_w.reserve(t_grid_s.size());

    // Classical Runge-Kutta on dx/dt = -rate(x); substeps capped well below
    // the cascade timescale keep the integrator ahead of the 1e-6 oracle.
    const double dt_max = t_sr_s / 200.0;
    double x = n;
    trace.emission_rate_per_s.push_back(rate_of(x));
    trace.power_w.push_back(quantum_j * rate_of(x));
    for (std::size_t i = 1; i < t_grid_s.size(); ++i) {
        const double span = t_grid_s[i] - t_grid_s[i - 1];
        const auto substeps = static_cast<std::size_t>(std::ceil(span / dt_max));
        const double h = span / static_cast<double>(substeps);
        for (std::size_t k = 0; k < substeps; ++k) {
            const double k1 = -rate_of(x);
            const double k2 = -rate_of(x + 0.5 * h * k1);
            const double k3 = -rate_of(x + 0.5 * h * k2);
            const double k4 = -rate_of(x + h * k3);
            x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        trace.emission_rate_per_s.push_back(rate_of(x));
        trace.power_w.push_back(quantum_j * rate_of(x));
    }

    trace.t_peak_s = std::max(0.0, t1_cav / c * std::log(n / floor_pop));
    trace.truncated = trace.t_peak_s > t_grid_s.back();
    trace.total_photons = n - x;
    return trace;
}

DelayDistribution sample_delays(const EnsembleState& ens, std::size_t n_trials,
                                std::uint64_t rng_seed, bool calibrated,
                                std::uint64_t stream) {
    ens.validate();
    if (n_trials < 1) throw std::invalid_argument("sample_delays: n_trials must be >= 1");

    const double t_sr_s = ens.t_sr.value_in(dims::time);
    const double offset_s = calibrated ? Constants::si().euler_gamma * t_sr_s : 0.0;

    DelayDistribution dist;
    dist.rng_seed = rng_seed;
    dist.samples_s.resize(n_trials);
    for (std::size_t i = 0; i < n_trials; ++i) {
        const double e = rng::exponential(rng::trial_word(rng_seed, stream, i));
        const double seed_photons = ens.n_seed + e;
        const double raw = t_sr_s * std::log(ens.n_atoms / seed_photons);
        dist.samples_s[i] = std::max(0.0, raw - offset_s);
    }

    dist.mean_s = stats::mean(dist.samples_s);
    dist.std_s = stats::sample_std(dist.samples_s, dist.mean_s);
    std::vector<double> sorted = dist.samples_s;
    std::sort(sorted.begin(), sorted.end());
    dist.q05_s = stats::quantile_sorted(sorted, 0.05);
    dist.q50_s = stats::quantile_sorted(sorted, 0.50);
    dist.q95_s = stats::quantile_sorted(sorted, 0.95);
    return dist;
}

}  // namespace dce
