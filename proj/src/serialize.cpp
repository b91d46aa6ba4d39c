#include "dce/serialize.hpp"

#include <charconv>
#include <cstdio>
#include <ctime>
#include <ostream>

namespace dce {

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) return "nan";  // unreachable for finite doubles
    return std::string(buf, ptr);
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    return std::string(buf, 16);
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out << ',';
        out << cells[i];
    }
    out << '\n';
}

ordered_json to_json(const ScenarioRecord& r) {
    ordered_json j;
    j["nu_hz"] = r.nu_hz;
    j["cavity_length_m"] = r.cavity_length_m;
    j["n_cas_max"] = r.n_cas_max;
    j["p_cas_w"] = r.p_cas_w;
    j["t1_s"] = r.t1_s;
    j["t1_cav_s"] = r.t1_cav_s;
    j["t_sr_s"] = r.t_sr_s;
    j["n_atoms"] = r.n_atoms;
    j["t_d0_s"] = r.t_d0_s;
    j["t_d_s"] = r.t_d_s;
    j["p_sr_w"] = r.p_sr_w;
    j["thermal_seed"] = r.thermal_seed;
    j["fbar_power_w"] = r.fbar_power_w;
    j["relative_shift"] = r.relative_shift;
    j["discriminable"] = r.discriminable;
    j["hold_time_s"] = r.hold_time_s;
    j["observation_window_s"] = r.observation_window_s;
    j["transfer_time_s"] = r.transfer_time_s;
    return j;
}

ordered_json to_json(const ConstraintReport& report) {
    ordered_json j;
    j["pass"] = report.pass;
    j["entries"] = ordered_json::array();
    for (const ConstraintEntry& e : report.entries) {
        ordered_json entry;
        entry["name"] = e.name;
        entry["relation"] = e.relation;
        entry["value"] = e.value.value();
        entry["bound"] = e.bound.value();
        entry["unit"] = to_string(e.value.dim());
        entry["pass"] = e.pass;
        entry["marginal"] = e.marginal;
        j["entries"].push_back(std::move(entry));
    }
    return j;
}

ordered_json to_json(const DiscriminationReport& report) {
    ordered_json j;
    j["t_d_casimir_s"] = report.t_d_casimir.value_in(dims::time, "report.t_d_casimir");
    j["t_d_background_s"] =
        report.t_d_background.value_in(dims::time, "report.t_d_background");
    j["relative_shift"] = report.relative_shift;
    j["timing_error"] = report.timing_error;
    j["discriminable"] = report.discriminable;
    j["mc_overlap"] = report.mc_overlap ? ordered_json(*report.mc_overlap)
                                        : ordered_json(nullptr);
    j["detected_fraction_casimir"] =
        report.detected_fraction_casimir ? ordered_json(*report.detected_fraction_casimir)
                                         : ordered_json(nullptr);
    j["detected_fraction_background"] =
        report.detected_fraction_background
            ? ordered_json(*report.detected_fraction_background)
            : ordered_json(nullptr);
    return j;
}

ordered_json to_json(const BorderlineScan& scan) {
    ordered_json j;
    j["points"] = ordered_json::array();
    for (const BorderlinePoint& p : scan.points) {
        ordered_json point;
        point["q_eps"] = p.q_eps;
        point["n_casimir"] = p.n_casimir;
        point["relative_shift"] = p.relative_shift;
        point["discriminable"] = p.discriminable;
        j["points"].push_back(std::move(point));
    }
    j["crossing"] = scan.crossing ? ordered_json(*scan.crossing) : ordered_json(nullptr);
    j["crossing_refined"] = scan.crossing_refined ? ordered_json(*scan.crossing_refined)
                                                  : ordered_json(nullptr);
    return j;
}

ordered_json to_json(const DelayDistribution& dist) {
    ordered_json j;
    j["n_samples"] = dist.samples_s.size();
    j["mean_s"] = dist.mean_s;
    j["std_s"] = dist.std_s;
    j["q05_s"] = dist.q05_s;
    j["q50_s"] = dist.q50_s;
    j["q95_s"] = dist.q95_s;
    j["rng_seed"] = dist.rng_seed;
    return j;
}

ordered_json to_json(const Table1Result& result) {
    ordered_json j;
    j["all_pass"] = result.all_pass;
    j["columns"] = ordered_json::array();
    for (const Table1Column& column : result.columns) {
        ordered_json col;
        col["species"] = column.species;
        col["record"] = to_json(column.record);
        col["cells"] = ordered_json::array();
        for (const Table1Cell& cell : column.cells) {
            ordered_json c;
            c["quantity"] = cell.quantity;
            c["computed"] = cell.computed;
            c["golden"] = cell.golden;
            c["tolerance"] = cell.tolerance;
            c["pass"] = cell.pass;
            col["cells"].push_back(std::move(c));
        }
        j["columns"].push_back(std::move(col));
    }
    return j;
}

ordered_json make_manifest(const std::string& command, const std::string& config_hash,
                           std::optional<std::uint64_t> rng_seed,
                           const std::vector<ManifestOutput>& outputs) {
    char stamp[32];
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &utc);

    ordered_json m;
    m["command"] = command;
    m["tool_version"] = kToolVersion;
    m["config_hash"] = config_hash;
    m["rng_seed"] = rng_seed ? ordered_json(*rng_seed) : ordered_json(nullptr);
    m["timestamp_utc"] = stamp;
    m["outputs"] = ordered_json::array();
    for (const ManifestOutput& o : outputs) {
        ordered_json entry;
        entry["path"] = o.path;
        entry["fnv1a64"] = o.fnv1a64;
        m["outputs"].push_back(std::move(entry));
    }
    return m;
}

std::string dump_payload(const ordered_json& payload) { return payload.dump(2) + "\n"; }

}  // namespace dce
