#ifndef DCE_SUPERRADIANCE_HPP
#define DCE_SUPERRADIANCE_HPP

/// @file superradiance.hpp
/// Collective emission of an inverted ensemble sharing one cavity mode: peak
/// power, deterministic delay, the mean-field pulse envelope, and Monte Carlo
/// statistics of the delay fluctuations.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dce/quantity.hpp"

namespace dce {

/// Inverted ensemble at the moment it is placed in the cavity.
struct EnsembleState {
    double n_atoms = 1.0;  ///< N_at, atoms prepared in the upper state
    double n_seed = 0.0;   ///< N_ph, resonant photons already in the mode
    Quantity t_sr;         ///< collective emission time T_SR, s
    Quantity omega;        ///< transition angular frequency, rad/s

    /// Throws std::invalid_argument when any bound is violated.
    void validate() const;
};

/// Sampled emission burst. Arrays share one index; times strictly increase.
struct PulseTrace {
    std::vector<double> times_s;
    std::vector<double> emission_rate_per_s;
    std::vector<double> power_w;
    double t_peak_s = 0.0;       ///< analytic time of maximum emission rate
    double total_photons = 0.0;  ///< photons released by the end of the grid
    bool truncated = false;      ///< grid ends before the rate peak
};

/// Empirical delay-time distribution. Summary statistics are computed from
/// samples_s in index order (plain left-to-right sums), so they can be
/// recomputed from the samples bit-exactly.
struct DelayDistribution {
    std::vector<double> samples_s;  ///< one delay per trial, trial order
    double mean_s = 0.0;
    double std_s = 0.0;  ///< sample standard deviation (n-1 normalizer)
    double q05_s = 0.0;  ///< linearly interpolated order statistics
    double q50_s = 0.0;
    double q95_s = 0.0;
    std::uint64_t rng_seed = 0;
};

/// Peak power of the burst in the conventional estimate P = N_at hbar omega /
/// T_SR. The mean-field envelope below peaks at about a quarter of this
/// (its maximum rate is C^2/(4 T1_cav) with C = N_at + 1 + N_ph); both numbers
/// are exposed so the difference stays visible.
Quantity peak_power(const EnsembleState& ens);

/// Mean delay between inversion and the burst peak,
/// T_D = T_SR ln(N_at / (1 + N_ph)), floored at zero.
Quantity delay_time(const EnsembleState& ens);

/// Closed-form excited population of the mean-field pulse model,
/// x(t) = C / (1 + ((1+N_ph)/N_at) e^{C t / T1_cav}), C = N_at + 1 + N_ph,
/// with T1_cav = T_SR N_at. Used as the analytic oracle for pulse_shape.
double logistic_population(const EnsembleState& ens, double t_s);

/// Integrates the mean-field cascade dx/dt = -x (C - x) / T1_cav, x(0) =
/// N_at, over t_grid_s (seconds; starts at 0, strictly increasing) and
/// reports emission rate -dx/dt and power hbar omega (-dx/dt). The
/// integrator is classical Runge-Kutta with internal substeps of at most
/// T_SR/200 and tracks logistic_population to 1e-6 relative. A grid that
/// ends before the rate peak yields truncated = true.
PulseTrace pulse_shape(const EnsembleState& ens, const std::vector<double>& t_grid_s);

/// Draws n_trials delay times. Each trial seeds the cascade with s = N_ph +
/// E, E ~ Exponential(1) (the vacuum trigger fluctuates on the one-photon
/// scale), and records max(0, T_SR ln(N_at / s)). Relative to delay_time the
/// sample mean carries a +gamma_Euler T_SR offset from E[-ln E]; calibrated =
/// true subtracts that offset from every sample (still floored at zero).
/// Deterministic given (rng_seed, stream) regardless of evaluation order;
/// stream selects an independent substream of the same seed.
DelayDistribution sample_delays(const EnsembleState& ens, std::size_t n_trials,
                                std::uint64_t rng_seed, bool calibrated = false,
                                std::uint64_t stream = 0);

}  // namespace dce

#endif  // DCE_SUPERRADIANCE_HPP
