#include "dce/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "dce/casimir_source.hpp"
#include "dce/stats.hpp"

namespace dce {

namespace {

// Fractional delay advance ln(1 + n_seed)/ln(N_at), saturated into [0, 1].
double shift_fraction(double n_atoms, double n_casimir) {
    if (n_atoms <= 1.0) return 0.0;  // no delay to advance
    const double raw = std::log1p(n_casimir) / std::log(n_atoms);
    return std::clamp(raw, 0.0, 1.0);
}

EnsembleState with_seed(const EnsembleState& ens, double n_seed) {
    EnsembleState out = ens;
    out.n_seed = n_seed;
    return out;
}

}  // namespace

DiscriminationReport deterministic_discrimination(const EnsembleState& ens,
                                                  double n_casimir,
                                                  double timing_error) {
    ens.validate();
    if (!(n_casimir >= 0.0)) {
        throw std::invalid_argument("deterministic_discrimination: n_casimir must be >= 0");
    }
    if (!(timing_error > 0.0) || timing_error >= 1.0) {
        throw std::invalid_argument(
            "deterministic_discrimination: timing_error must lie in (0, 1)");
    }

    DiscriminationReport report;
    report.t_d_background = delay_time(with_seed(ens, 0.0));
    report.t_d_casimir = delay_time(with_seed(ens, n_casimir));
    report.relative_shift = shift_fraction(ens.n_atoms, n_casimir);
    report.timing_error = timing_error;
    report.discriminable = report.relative_shift > timing_error;
    return report;
}

BorderlineScan borderline_scan(const EnsembleState& ens, double timing_error,
                               const std::vector<double>& qe_grid) {
    if (qe_grid.empty()) throw std::invalid_argument("borderline_scan: empty grid");
    if (!(qe_grid.front() >= 0.0)) {
        throw std::invalid_argument("borderline_scan: q_eps values must be >= 0");
    }
    for (std::size_t i = 1; i < qe_grid.size(); ++i) {
        if (!(qe_grid[i] > qe_grid[i - 1])) {
            throw std::invalid_argument("borderline_scan: grid must be strictly increasing");
        }
    }

    BorderlineScan scan;
    scan.points.reserve(qe_grid.size());
    for (double q : qe_grid) {
        // Saturated photon number for combined drive strength q = q_opt * eps.
        const double n_casimir =
            saturated_count(SeedState{}, 1.0, q).value_in(dims::dimensionless);
        const DiscriminationReport r =
            deterministic_discrimination(ens, n_casimir, timing_error);
        scan.points.push_back({q, n_casimir, r.relative_shift, r.discriminable});
    }

    for (std::size_t i = 0; i < scan.points.size(); ++i) {
        if (!scan.points[i].discriminable) continue;
        if (i == 0) {
            scan.crossing = scan.points.front().q_eps;
            scan.crossing_refined = scan.crossing;
            break;
        }
        const BorderlinePoint& lo = scan.points[i - 1];
        const BorderlinePoint& hi = scan.points[i];
        scan.crossing = 0.5 * (lo.q_eps + hi.q_eps);
        const double rise = hi.relative_shift - lo.relative_shift;
        scan.crossing_refined =
            rise > 0.0
                ? lo.q_eps + (timing_error - lo.relative_shift) / rise * (hi.q_eps - lo.q_eps)
                : *scan.crossing;
        break;
    }
    return scan;
}

DiscriminationReport mc_discrimination(const EnsembleState& ens, double n_casimir,
                                       std::size_t n_trials, std::uint64_t rng_seed,
                                       std::optional<Quantity> observation_window) {
    ens.validate();
    if (!(n_casimir >= 0.0)) {
        throw std::invalid_argument("mc_discrimination: n_casimir must be >= 0");
    }
    if (n_trials < 100) {
        throw std::invalid_argument("mc_discrimination: n_trials must be >= 100");
    }
    double window_s = std::numeric_limits<double>::infinity();
    if (observation_window) {
        window_s = observation_window->value_in(dims::time, "mc_discrimination window");
        if (window_s <= 0.0) {
            throw std::invalid_argument("mc_discrimination: observation window must be > 0");
        }
    }

    const DelayDistribution seeded =
        sample_delays(with_seed(ens, n_casimir), n_trials, rng_seed, false, 0);
    const DelayDistribution background =
        sample_delays(with_seed(ens, 0.0), n_trials, rng_seed, false, 1);

    std::vector<double> seeded_detected;
    seeded_detected.reserve(n_trials);
    for (double t : seeded.samples_s) {
        if (t <= window_s) seeded_detected.push_back(t);
    }
    std::size_t background_detected = 0;
    for (double t : background.samples_s) {
        if (t <= window_s) ++background_detected;
    }

    DiscriminationReport report;
    report.t_d_background = delay_time(with_seed(ens, 0.0));
    report.t_d_casimir = delay_time(with_seed(ens, n_casimir));
    report.relative_shift = shift_fraction(ens.n_atoms, n_casimir);
    report.detected_fraction_casimir =
        static_cast<double>(seeded_detected.size()) / static_cast<double>(n_trials);
    report.detected_fraction_background =
        static_cast<double>(background_detected) / static_cast<double>(n_trials);

    if (seeded_detected.empty()) {
        report.mc_overlap = 1.0;
        report.discriminable = false;
        return report;
    }

    std::sort(seeded_detected.begin(), seeded_detected.end());
    const double seeded_median = stats::quantile_sorted(seeded_detected, 0.5);
    std::size_t below = 0;
    for (double t : background.samples_s) {
        if (t <= window_s && t <= seeded_median) ++below;
    }
    report.mc_overlap = static_cast<double>(below) / static_cast<double>(n_trials);
    report.discriminable = *report.mc_overlap < 0.05;
    return report;
}

}  // namespace dce
