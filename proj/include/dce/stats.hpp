#ifndef DCE_STATS_HPP
#define DCE_STATS_HPP

/// @file stats.hpp
/// Order-stable summary statistics shared by the Monte Carlo code. All sums
/// run left to right over the input so repeated calls are bit-identical.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace dce::stats {

inline double mean(const std::vector<double>& xs) {
    if (xs.empty()) throw std::invalid_argument("stats::mean: empty sample");
    double sum = 0.0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

/// Sample standard deviation with the n-1 normalizer; 0 for a single sample.
inline double sample_std(const std::vector<double>& xs, double mean_value) {
    if (xs.empty()) throw std::invalid_argument("stats::sample_std: empty sample");
    if (xs.size() == 1) return 0.0;
    double sum_sq = 0.0;
    for (double x : xs) {
        const double d = x - mean_value;
        sum_sq += d * d;
    }
    return std::sqrt(sum_sq / static_cast<double>(xs.size() - 1));
}

/// Linearly interpolated order statistic (the h = (n-1)p convention) of an
/// ascending-sorted sample.
inline double quantile_sorted(const std::vector<double>& sorted, double p) {
    if (sorted.empty()) throw std::invalid_argument("stats::quantile_sorted: empty sample");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("stats::quantile_sorted: p outside [0,1]");
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

/// Convenience: sorts a copy and interpolates.
inline double quantile(std::vector<double> xs, double p) {
    std::sort(xs.begin(), xs.end());
    return quantile_sorted(xs, p);
}

}  // namespace dce::stats

#endif  // DCE_STATS_HPP
