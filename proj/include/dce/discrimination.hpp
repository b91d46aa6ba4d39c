#ifndef DCE_DISCRIMINATION_HPP
#define DCE_DISCRIMINATION_HPP

/// @file discrimination.hpp
/// Decides whether a photon-seeded superradiant burst can be told apart from
/// the unseeded superfluorescent background by its earlier arrival.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dce/quantity.hpp"
#include "dce/superradiance.hpp"

namespace dce {

/// Verdict on one seeded-versus-background comparison.
///
/// relative_shift is the fractional advance of the seeded delay,
/// (T_D0 - T_D)/T_D0 = ln(1 + n_seed)/ln(N_at); it saturates at 1 when the
/// seed is large enough to erase the delay entirely. The deterministic path
/// sets discriminable = (relative_shift > timing_error); the Monte Carlo path
/// sets it from mc_overlap < 0.05 and leaves timing_error at 0.
struct DiscriminationReport {
    Quantity t_d_casimir;     ///< delay with the photon seed present, s
    Quantity t_d_background;  ///< delay of the unseeded cascade, s
    double relative_shift = 0.0;
    double timing_error = 0.0;
    bool discriminable = false;
    std::optional<double> mc_overlap;  ///< P(background delay <= seeded median)
    std::optional<double> detected_fraction_casimir;     ///< trials inside the window
    std::optional<double> detected_fraction_background;  ///< trials inside the window
};

/// Threshold test: the seeded pulse is distinguishable when its fractional
/// delay advance exceeds the relative timing error of the measurement.
/// timing_error must lie in (0, 1); n_casimir >= 0.
DiscriminationReport deterministic_discrimination(const EnsembleState& ens,
                                                  double n_casimir,
                                                  double timing_error);

/// One row of a borderline scan: the drive strength q_eps = q_opt * eps, the
/// photon seed sinh^2(2 q_eps) it saturates to, and the resulting verdict.
struct BorderlinePoint {
    double q_eps = 0.0;
    double n_casimir = 0.0;
    double relative_shift = 0.0;
    bool discriminable = false;
};

/// Scan result. crossing is the estimated q_eps where the verdict flips:
/// the midpoint of the first non-discriminable/discriminable grid bracket
/// (grid resolution is the honest precision of the flip location).
/// crossing_refined additionally interpolates relative_shift linearly across
/// that bracket to where it meets timing_error. Both are empty when the
/// verdict never flips; both equal the first grid point when the scan starts
/// already discriminable.
struct BorderlineScan {
    std::vector<BorderlinePoint> points;
    std::optional<double> crossing;
    std::optional<double> crossing_refined;
};

/// Sweeps the saturated photon seed n = sinh^2(2 q_eps) over a strictly
/// increasing grid of q_eps >= 0 and reports where discrimination sets in.
BorderlineScan borderline_scan(const EnsembleState& ens, double timing_error,
                               const std::vector<double>& qe_grid);

/// Monte Carlo verdict: draws matched seeded and background delay samples
/// (substreams 0 and 1 of rng_seed) and estimates the overlap
/// P(T_D_background <= median(T_D_seeded)), counting over all trials.
/// Discriminable iff the overlap is below 0.05. An observation window (atoms
/// removed after this long) turns later delays into non-detections: they are
/// excluded from the seeded median and reported via the detected fractions.
/// If no seeded trial lands inside the window the overlap is reported as 1.
/// n_trials must be >= 100.
DiscriminationReport mc_discrimination(const EnsembleState& ens, double n_casimir,
                                       std::size_t n_trials, std::uint64_t rng_seed,
                                       std::optional<Quantity> observation_window = {});

}  // namespace dce

#endif  // DCE_DISCRIMINATION_HPP
