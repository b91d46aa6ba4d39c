#ifndef DCE_CONFIG_HPP
#define DCE_CONFIG_HPP

/// @file config.hpp
/// Flat sectioned key/value configuration for the bench, chosen over nested
/// formats so experiment logs diff cleanly. Unknown sections or keys are
/// errors, not warnings: a typo in a physics parameter must not silently
/// fall back to a default.
///
/// Schema (defaults in parentheses; "auto" marks derivable values):
///   [species]     name (23Na), hyperfine_freq_ghz (from registry)
///   [cavity]      q_opt (1e8), cross_section_cm2 (1)
///   [drive]       modulation_depth (1e-8), mech_q (1e3),
///                 mech_freq_ghz (auto: twice the transition frequency),
///                 area_cm2 (1), density_kg_m3 (1e3),
///                 acoustic_velocity_m_s (1.04e4)
///   [ensemble]    n_atoms (auto: lifetime / detector response)
///   [environment] temperature_mk (10)
///   [detection]   detector_response_ms (0.5), transfer_speed_cm_s (10),
///                 transfer_distance_cm (1), timing_error (0.1),
///                 observation_window_ms (auto: T_D + 2 T_SR)

#include <optional>
#include <string>

#include "dce/design_bench.hpp"
#include "dce/errors.hpp"

namespace dce {

/// Parsed configuration before unit conversion and derivation.
struct BenchConfig {
    std::string species_name = "23Na";
    std::optional<double> hyperfine_freq_ghz;  ///< set: custom species

    double q_opt = 1.0e8;
    double cross_section_cm2 = 1.0;

    double modulation_depth = 1.0e-8;
    double mech_q = 1.0e3;
    std::optional<double> mech_freq_ghz;  ///< unset: parametric point 2 nu
    double area_cm2 = 1.0;
    double density_kg_m3 = 1.0e3;
    double acoustic_velocity_m_s = 1.04e4;

    std::optional<double> n_atoms;  ///< unset: T_SR matches the detector

    double temperature_mk = 10.0;

    double detector_response_ms = 0.5;
    double transfer_speed_cm_s = 10.0;
    double transfer_distance_cm = 1.0;
    double timing_error = 0.1;
    std::optional<double> observation_window_ms;  ///< unset: T_D + 2 T_SR
};

/// Parses configuration text. Grammar: "[section]" headers, "key = value"
/// entries, "#" comments, blank lines. Throws config_error naming the
/// offending section.key on unknown keys or malformed values.
BenchConfig parse_config_text(const std::string& text);

/// Reads and parses a configuration file. Throws config_error on parse
/// problems and std::ios_base::failure when the file cannot be read.
BenchConfig parse_config_file(const std::string& path);

/// Binds a parsed configuration into a runnable scenario: resolves the
/// species, builds the resonant cavity, converts units, derives auto values,
/// and sets the resonance warning flag when the drive is off the parametric
/// point (a warning, never an error). Throws config_error naming the field
/// on any out-of-range value.
ExperimentScenario build_scenario(const BenchConfig& config);

}  // namespace dce

#endif  // DCE_CONFIG_HPP
