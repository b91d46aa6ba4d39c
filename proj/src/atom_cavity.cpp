#include "dce/atom_cavity.hpp"

#include <cctype>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dce {

namespace {

// Relative detuning beyond which a species/cavity pair is rejected.
constexpr double kResonanceTolerance = 1.0e-6;

std::string strip_mass_number(const std::string& label) {
    std::size_t i = 0;
    while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
    return label.substr(i);
}

}  // namespace

const std::vector<AtomSpecies>& species_registry() {
    static const std::vector<AtomSpecies> registry = {
        {"6Li", units::hertz(0.228e9)},
        {"23Na", units::hertz(1.77e9)},
        {"87Rb", units::hertz(6.83e9)},
        {"133Cs", units::hertz(9.19e9)},
    };
    return registry;
}

const AtomSpecies& find_species(std::string_view name) {
    for (const AtomSpecies& sp : species_registry()) {
        if (sp.name == name || strip_mass_number(sp.name) == name) return sp;
    }
    std::ostringstream msg;
    msg << "unknown species \"" << name << "\"; known:";
    for (const AtomSpecies& sp : species_registry()) msg << ' ' << sp.name;
    throw std::out_of_range(msg.str());
}

Quantity CavityConfig::volume() const {
    const Quantity v = cross_section * length;
    assert_dim(v, dims::volume, "CavityConfig.volume");
    return v;
}

void CavityConfig::validate() const {
    if (q_opt < 1.0) throw std::invalid_argument("CavityConfig.q_opt must be >= 1");
    if (cross_section.value_in(dims::area, "CavityConfig.cross_section") <= 0.0) {
        throw std::invalid_argument("CavityConfig.cross_section must be > 0");
    }
    if (length.value_in(dims::length, "CavityConfig.length") <= 0.0) {
        throw std::invalid_argument("CavityConfig.length must be > 0");
    }
    if (resonant_freq.value_in(dims::frequency, "CavityConfig.resonant_freq") <= 0.0) {
        throw std::invalid_argument("CavityConfig.resonant_freq must be > 0");
    }
}

CavityConfig cavity_for_species(const AtomSpecies& species, Quantity cross_section,
                                double q_opt) {
    CavityConfig cavity;
    cavity.q_opt = q_opt;
    cavity.cross_section = cross_section;
    cavity.length = Constants::si().c / (units::scalar(2.0) * species.hyperfine_freq);
    cavity.resonant_freq = species.hyperfine_freq;
    cavity.validate();
    return cavity;
}

resonance_mismatch::resonance_mismatch(double species_freq_hz, double cavity_freq_hz)
    : std::runtime_error("cavity mode at " + std::to_string(cavity_freq_hz) +
                         " Hz is detuned from the transition at " +
                         std::to_string(species_freq_hz) + " Hz"),
      species_freq_hz_(species_freq_hz),
      cavity_freq_hz_(cavity_freq_hz) {}

Quantity free_space_lifetime(const AtomSpecies& species) {
    const double nu = species.hyperfine_freq.value_in(dims::frequency, "hyperfine_freq");
    if (nu <= 0.0) throw std::invalid_argument("free_space_lifetime: freq must be > 0");
    const Constants& k = Constants::si();
    const Quantity omega = units::scalar(2.0 * constants::raw::pi) * species.hyperfine_freq;
    const Quantity t1 = units::scalar(3.0 * constants::raw::pi) * k.eps0 * k.hbar *
                        pow(k.c, 5) / (pow(k.mu_b, 2) * pow(omega, 3));
    assert_dim(t1, dims::time, "free_space_lifetime result");
    return t1;
}

Quantity cavity_lifetime(const AtomSpecies& species, const CavityConfig& cavity) {
    cavity.validate();
    const double nu_atom = species.hyperfine_freq.value_in(dims::frequency);
    const double nu_cav = cavity.resonant_freq.value_in(dims::frequency);
    if (std::abs(nu_cav - nu_atom) > kResonanceTolerance * nu_atom) {
        throw resonance_mismatch(nu_atom, nu_cav);
    }
    const Constants& k = Constants::si();
    const Quantity lambda = k.c / species.hyperfine_freq;
    const Quantity mode_ratio = cavity.volume() / pow(lambda, 3);
    const double pi2 = constants::raw::pi * constants::raw::pi;
    const Quantity t1_cav = units::scalar(4.0 * pi2 / (3.0 * cavity.q_opt)) * mode_ratio *
                            free_space_lifetime(species);
    assert_dim(t1_cav, dims::time, "cavity_lifetime result");
    return t1_cav;
}

Quantity hold_time(const CavityConfig& cavity) {
    cavity.validate();
    const Quantity omega = units::scalar(2.0 * constants::raw::pi) * cavity.resonant_freq;
    const Quantity tau = units::scalar(cavity.q_opt) / omega;
    assert_dim(tau, dims::time, "hold_time result");
    return tau;
}

Quantity superradiant_lifetime(Quantity t1_cav, double n_atoms) {
    if (t1_cav.value_in(dims::time, "superradiant_lifetime.t1_cav") <= 0.0) {
        throw std::invalid_argument("superradiant_lifetime: t1_cav must be > 0");
    }
    if (n_atoms < 1.0) {
        throw std::domain_error("superradiant_lifetime: n_atoms must be >= 1");
    }
    return t1_cav / units::scalar(n_atoms);
}

}  // namespace dce
