#include "dce/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>

namespace dce {

namespace {

std::string trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && is_space(s[begin])) ++begin;
    while (end > begin && is_space(s[end - 1])) --end;
    return std::string(s.substr(begin, end - begin));
}

double parse_number(const std::string& value, const std::string& where) {
    std::string_view text = value;
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double parsed = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw config_error(where + ": expected a number, got \"" + value + "\"");
    }
    return parsed;
}

std::optional<double> parse_number_or_auto(const std::string& value,
                                           const std::string& where) {
    if (value == "auto") return std::nullopt;
    return parse_number(value, where);
}

}  // namespace

BenchConfig parse_config_text(const std::string& text) {
    BenchConfig cfg;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::size_t comment = raw.find('#');
        if (comment != std::string::npos) raw.erase(comment);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') {
                throw config_error("line " + std::to_string(line_no) +
                                   ": unterminated section header");
            }
            section = trim(std::string_view(line).substr(1, line.size() - 2));
            if (section != "species" && section != "cavity" && section != "drive" &&
                section != "ensemble" && section != "environment" &&
                section != "detection") {
                throw config_error("unknown section [" + section + "]");
            }
            continue;
        }

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw config_error("line " + std::to_string(line_no) +
                               ": expected key = value");
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (section.empty()) {
            throw config_error("line " + std::to_string(line_no) + ": key \"" + key +
                               "\" outside any section");
        }
        const std::string where = section + "." + key;
        if (value.empty()) throw config_error(where + ": empty value");

        if (section == "species") {
            if (key == "name") cfg.species_name = value;
            else if (key == "hyperfine_freq_ghz") cfg.hyperfine_freq_ghz = parse_number(value, where);
            else throw config_error("unknown key " + where);
        } else if (section == "cavity") {
            if (key == "q_opt") cfg.q_opt = parse_number(value, where);
            else if (key == "cross_section_cm2") cfg.cross_section_cm2 = parse_number(value, where);
            else throw config_error("unknown key " + where);
        } else if (section == "drive") {
            if (key == "modulation_depth") cfg.modulation_depth = parse_number(value, where);
            else if (key == "mech_q") cfg.mech_q = parse_number(value, where);
            else if (key == "mech_freq_ghz") cfg.mech_freq_ghz = parse_number_or_auto(value, where);
            else if (key == "area_cm2") cfg.area_cm2 = parse_number(value, where);
            else if (key == "density_kg_m3") cfg.density_kg_m3 = parse_number(value, where);
            else if (key == "acoustic_velocity_m_s") cfg.acoustic_velocity_m_s = parse_number(value, where);
            else throw config_error("unknown key " + where);
        } else if (section == "ensemble") {
            if (key == "n_atoms") cfg.n_atoms = parse_number_or_auto(value, where);
            else throw config_error("unknown key " + where);
        } else if (section == "environment") {
            if (key == "temperature_mk") cfg.temperature_mk = parse_number(value, where);
            else throw config_error("unknown key " + where);
        } else {  // detection
            if (key == "detector_response_ms") cfg.detector_response_ms = parse_number(value, where);
            else if (key == "transfer_speed_cm_s") cfg.transfer_speed_cm_s = parse_number(value, where);
            else if (key == "transfer_distance_cm") cfg.transfer_distance_cm = parse_number(value, where);
            else if (key == "timing_error") cfg.timing_error = parse_number(value, where);
            else if (key == "observation_window_ms") cfg.observation_window_ms = parse_number_or_auto(value, where);
            else throw config_error("unknown key " + where);
        }
    }
    return cfg;
}

BenchConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open config file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::ios_base::failure("cannot read config file: " + path);
    return parse_config_text(buffer.str());
}

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw config_error(message);
}

}  // namespace

ExperimentScenario build_scenario(const BenchConfig& c) {
    require(!c.species_name.empty(), "species.name: must not be empty");
    if (c.hyperfine_freq_ghz) {
        require(*c.hyperfine_freq_ghz > 0.0, "species.hyperfine_freq_ghz: must be > 0");
    }
    require(c.q_opt >= 1.0, "cavity.q_opt: must be >= 1");
    require(c.cross_section_cm2 > 0.0, "cavity.cross_section_cm2: must be > 0");
    require(c.modulation_depth >= 0.0 && c.modulation_depth < 1.0,
            "drive.modulation_depth: must lie in [0, 1)");
    require(c.mech_q >= 1.0, "drive.mech_q: must be >= 1");
    if (c.mech_freq_ghz) require(*c.mech_freq_ghz > 0.0, "drive.mech_freq_ghz: must be > 0");
    require(c.area_cm2 > 0.0, "drive.area_cm2: must be > 0");
    require(c.density_kg_m3 > 0.0, "drive.density_kg_m3: must be > 0");
    require(c.acoustic_velocity_m_s > 0.0, "drive.acoustic_velocity_m_s: must be > 0");
    if (c.n_atoms) require(*c.n_atoms >= 1.0, "ensemble.n_atoms: must be >= 1");
    require(c.temperature_mk >= 0.0, "environment.temperature_mk: must be >= 0");
    require(c.detector_response_ms > 0.0, "detection.detector_response_ms: must be > 0");
    require(c.transfer_speed_cm_s > 0.0, "detection.transfer_speed_cm_s: must be > 0");
    require(c.transfer_distance_cm > 0.0, "detection.transfer_distance_cm: must be > 0");
    require(c.timing_error > 0.0 && c.timing_error < 1.0,
            "detection.timing_error: must lie in (0, 1)");
    if (c.observation_window_ms) {
        require(*c.observation_window_ms > 0.0, "detection.observation_window_ms: must be > 0");
    }

    AtomSpecies species;
    if (c.hyperfine_freq_ghz) {
        species = {c.species_name, units::hertz(*c.hyperfine_freq_ghz * 1.0e9)};
    } else {
        try {
            species = find_species(c.species_name);
        } catch (const std::out_of_range& miss) {
            throw config_error(std::string("species.name: ") + miss.what());
        }
    }

    ExperimentScenario s;
    s.species = species;
    s.cavity = cavity_for_species(
        species, units::square_meters(c.cross_section_cm2 * 1.0e-4), c.q_opt);
    s.drive.modulation_depth = c.modulation_depth;
    s.drive.mech_q = c.mech_q;
    s.drive.area = units::square_meters(c.area_cm2 * 1.0e-4);
    s.drive.density = units::kg_per_m3(c.density_kg_m3);
    s.drive.acoustic_velocity = units::meters_per_sec(c.acoustic_velocity_m_s);
    const Quantity omega =
        units::scalar(2.0 * constants::raw::pi) * species.hyperfine_freq;
    s.drive.mech_freq =
        c.mech_freq_ghz
            ? units::scalar(2.0 * constants::raw::pi) * units::hertz(*c.mech_freq_ghz * 1.0e9)
            : 2.0 * omega;
    s.temperature = units::kelvin(c.temperature_mk * 1.0e-3);
    s.detector_response = units::seconds(c.detector_response_ms * 1.0e-3);
    s.transfer_speed = units::meters_per_sec(c.transfer_speed_cm_s * 1.0e-2);
    s.transfer_distance = units::meters(c.transfer_distance_cm * 1.0e-2);
    s.timing_error = c.timing_error;
    if (c.observation_window_ms) {
        s.observation_window = units::seconds(*c.observation_window_ms * 1.0e-3);
    }
    if (c.n_atoms) {
        s.n_atoms = *c.n_atoms;
    } else {
        s.n_atoms = cavity_lifetime(species, s.cavity).value_in(dims::time) /
                    s.detector_response.value_in(dims::time);
        if (!(s.n_atoms >= 1.0)) {
            throw config_error("ensemble.n_atoms: auto-derived value " +
                               std::to_string(s.n_atoms) +
                               " is below 1; set it explicitly");
        }
    }
    s.resonance_warning = !parametric_resonance(s.drive, s.cavity);
    s.validate();
    return s;
}

}  // namespace dce
