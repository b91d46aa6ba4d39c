#include "dce/casimir_source.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dce {

void DriveConfig::validate() const {
    if (mech_freq.value_in(dims::frequency, "DriveConfig.mech_freq") <= 0.0) {
        throw std::invalid_argument("DriveConfig.mech_freq must be > 0");
    }
    if (modulation_depth < 0.0 || modulation_depth >= 1.0) {
        throw std::invalid_argument("DriveConfig.modulation_depth must be in [0, 1)");
    }
    if (mech_q < 1.0) throw std::invalid_argument("DriveConfig.mech_q must be >= 1");
    if (area.value_in(dims::area, "DriveConfig.area") <= 0.0) {
        throw std::invalid_argument("DriveConfig.area must be > 0");
    }
    if (density.value_in(dims::mass_density, "DriveConfig.density") <= 0.0) {
        throw std::invalid_argument("DriveConfig.density must be > 0");
    }
    if (acoustic_velocity.value_in(dims::velocity, "DriveConfig.acoustic_velocity") <= 0.0) {
        throw std::invalid_argument("DriveConfig.acoustic_velocity must be > 0");
    }
}

Quantity photon_count(const SeedState& seed, const DriveConfig& drive, Quantity t) {
    drive.validate();
    if (t.value_in(dims::time, "photon_count.t") < 0.0) {
        throw std::invalid_argument("photon_count: t must be >= 0");
    }
    const Quantity arg_q =
        drive.mech_freq * units::scalar(drive.modulation_depth) * t;
    const double arg = arg_q.value_in(dims::dimensionless, "photon_count argument");
    if (arg > kSinhArgLimit) {
        throw std::range_error(
            "photon_count: Omega*eps*t = " + std::to_string(arg) +
            " overflows sinh; the population has long saturated, use saturated_count");
    }
    const double s = std::sinh(arg);
    return units::scalar(seed.n0 * s * s);
}

Quantity saturated_count(const SeedState& seed, double q_opt, double epsilon) {
    if (q_opt < 1.0) throw std::invalid_argument("saturated_count: q_opt must be >= 1");
    if (epsilon < 0.0) throw std::invalid_argument("saturated_count: epsilon must be >= 0");
    const double arg = 2.0 * q_opt * epsilon;
    if (arg > kSinhArgLimit) {
        throw std::range_error("saturated_count: 2*q_opt*eps = " + std::to_string(arg) +
                               " overflows sinh");
    }
    const double s = std::sinh(arg);
    return units::scalar(seed.n0 * s * s);
}

Quantity saturated_power(double n_max, Quantity omega, double q_opt) {
    if (omega.value_in(dims::frequency, "saturated_power.omega") <= 0.0) {
        throw std::invalid_argument("saturated_power: omega must be > 0");
    }
    if (q_opt < 1.0) throw std::invalid_argument("saturated_power: q_opt must be >= 1");
    const Quantity p = units::scalar(n_max) * Constants::si().hbar * omega * omega / q_opt;
    assert_dim(p, dims::power, "saturated_power result");
    return p;
}

Quantity fbar_drive_power(const DriveConfig& drive) {
    drive.validate();
    const double pi3 = constants::raw::pi * constants::raw::pi * constants::raw::pi;
    const Quantity p = drive.density * drive.area * drive.acoustic_velocity *
                       units::scalar(pi3 * drive.modulation_depth * drive.modulation_depth) *
                       Constants::si().c * Constants::si().c / drive.mech_q;
    assert_dim(p, dims::power, "fbar_drive_power result");
    return p;
}

Quantity thermal_occupancy(Quantity freq, Quantity temperature) {
    const double nu = freq.value_in(dims::frequency, "thermal_occupancy.freq");
    const double temp = temperature.value_in(dims::temperature, "thermal_occupancy.temperature");
    if (nu <= 0.0) throw std::invalid_argument("thermal_occupancy: freq must be > 0");
    if (temp < 0.0) throw std::invalid_argument("thermal_occupancy: temperature must be >= 0");
    if (temp == 0.0) return units::scalar(0.0);
    const Quantity x_q = Constants::si().h * freq / (Constants::si().k_b * temperature);
    const double x = x_q.value_in(dims::dimensionless, "thermal_occupancy exponent");
    // expm1 keeps the Rayleigh-Jeans regime (x << 1) accurate.
    const double em1 = std::expm1(x);
    return units::scalar(std::isinf(em1) ? 0.0 : 1.0 / em1);
}

}  // namespace dce
