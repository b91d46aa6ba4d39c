#ifndef DCE_ATOM_CAVITY_HPP
#define DCE_ATOM_CAVITY_HPP

/// @file atom_cavity.hpp
/// The absorbing side of the experiment: alkali atoms whose hyperfine
/// splitting is matched to the fundamental mode of a long microwave cavity.
/// Provides the species registry, cavity geometry, the free-space and
/// cavity-enhanced hyperfine lifetimes, and the collective emission time.

#include <string>
#include <string_view>
#include <vector>

#include "dce/quantity.hpp"

namespace dce {

/// Alkali species with a microwave ground-state hyperfine transition.
struct AtomSpecies {
    std::string name;        ///< isotope label, e.g. "23Na"
    Quantity hyperfine_freq; ///< transition frequency nu, Hz
};

/// The four species the bench knows out of the box, ordered by frequency.
const std::vector<AtomSpecies>& species_registry();

/// Looks a species up by full isotope label ("23Na") or bare element symbol
/// ("Na"). Throws std::out_of_range listing the known labels on a miss.
const AtomSpecies& find_species(std::string_view name);

/// One-dimensional cavity whose fundamental mode is tuned to an atomic
/// transition. length is the mirror spacing, cross_section the mode area.
struct CavityConfig {
    double q_opt = 1.0e8;   ///< optical (microwave) quality factor
    Quantity cross_section; ///< mode cross section A, m^2
    Quantity length;        ///< mirror spacing L, m
    Quantity resonant_freq; ///< fundamental mode frequency, Hz

    /// Mode volume V = A * L.
    Quantity volume() const;

    /// Throws std::invalid_argument when any bound is violated.
    void validate() const;
};

/// Cavity whose fundamental mode sits exactly on the species transition:
/// L = c / (2 nu).
CavityConfig cavity_for_species(const AtomSpecies& species, Quantity cross_section,
                                double q_opt);

/// Thrown when a cavity is paired with a species it is not tuned to.
class resonance_mismatch : public std::runtime_error {
  public:
    resonance_mismatch(double species_freq_hz, double cavity_freq_hz);
    double species_freq_hz() const { return species_freq_hz_; }
    double cavity_freq_hz() const { return cavity_freq_hz_; }

  private:
    double species_freq_hz_;
    double cavity_freq_hz_;
};

/// Free-space magnetic-dipole lifetime of the hyperfine transition,
/// T1 = 3 pi eps0 hbar c^5 / (mu_B^2 omega^3) with omega = 2 pi nu.
Quantity free_space_lifetime(const AtomSpecies& species);

/// Lifetime inside the cavity, T1_cav = (4 pi^2 / 3 q_opt) (V / lambda^3) T1
/// with lambda = c / nu. The cavity mode must match the transition to within
/// 1e-6 relative or resonance_mismatch is thrown.
Quantity cavity_lifetime(const AtomSpecies& species, const CavityConfig& cavity);

/// Photon storage time of the cavity, tau = q_opt / omega.
Quantity hold_time(const CavityConfig& cavity);

/// Collective emission time of n_atoms sharing the mode, T_SR = T1_cav / N.
/// Throws std::domain_error for n_atoms < 1.
Quantity superradiant_lifetime(Quantity t1_cav, double n_atoms);

}  // namespace dce

#endif  // DCE_ATOM_CAVITY_HPP
