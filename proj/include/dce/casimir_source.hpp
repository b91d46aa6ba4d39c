#ifndef DCE_CASIMIR_SOURCE_HPP
#define DCE_CASIMIR_SOURCE_HPP

/// @file casimir_source.hpp
/// Photon generation side of the experiment: parametric growth of the cavity
/// photon number under mechanical modulation, its saturation by cavity loss,
/// the radiated power, the FBAR drive power budget, and the thermal photon
/// seed.

#include "dce/quantity.hpp"

namespace dce {

/// Mechanical drive of the moving cavity wall (an FBAR film).
struct DriveConfig {
    Quantity mech_freq;             ///< drive angular frequency, rad/s
    double modulation_depth = 0.0;  ///< peak wall velocity over c
    double mech_q = 1.0;            ///< mechanical quality factor
    Quantity area;                  ///< vibrating film cross section, m^2
    Quantity density;               ///< film mass density, kg/m^3
    Quantity acoustic_velocity;     ///< sound speed in the film, m/s

    /// Throws std::invalid_argument when any bound is violated.
    void validate() const;
};

/// Photon population present before the parametric drive acts. n0 = 1 is the
/// vacuum-state convention used throughout; n_thermal is kept separate and
/// seeds the superradiant stage, not the parametric gain.
struct SeedState {
    double n0 = 1.0;
    double n_thermal = 0.0;
};

/// Largest sinh argument accepted before photon_count/saturated_count refuse
/// to evaluate (double overflows near 710).
inline constexpr double kSinhArgLimit = 700.0;

/// Mean photon number after driving for time t at exact parametric resonance:
/// N(t) = n0 sinh^2(Omega eps t). Monotone nondecreasing in t, eps and n0.
/// Throws std::range_error when Omega*eps*t exceeds kSinhArgLimit (use
/// saturated_count instead) and std::invalid_argument for t < 0.
Quantity photon_count(const SeedState& seed, const DriveConfig& drive, Quantity t);

/// Photon number once cavity leakage halts the growth, reached at the hold
/// time tau = q_opt/omega: N_max = n0 sinh^2(2 q_opt eps).
Quantity saturated_count(const SeedState& seed, double q_opt, double epsilon);

/// Power radiated at saturation, P = n_max hbar omega / tau = n_max hbar
/// omega^2 / q_opt. Result in watts.
Quantity saturated_power(double n_max, Quantity omega, double q_opt);

/// Electrical power dissipated driving the film: rho A v_a pi^3 eps^2 c^2 /
/// Q_m. Independent of the drive frequency.
Quantity fbar_drive_power(const DriveConfig& drive);

/// Planck occupancy 1/(exp(h nu / k_B T) - 1) of one cavity mode; 0 at T = 0.
Quantity thermal_occupancy(Quantity freq, Quantity temperature);

}  // namespace dce

#endif  // DCE_CASIMIR_SOURCE_HPP
