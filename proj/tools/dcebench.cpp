// dcebench: design bench for a vibrating-wall microwave photon source read
// out through the delayed superradiant burst of a cold-atom ensemble.
//
// Subcommands: table1, simulate, mc, sweep, discriminate. All file outputs
// are deterministic for identical inputs; the manifest carries the only
// timestamp. Exit codes: 0 success; table1 returns 1 when a reference check
// fails; 2 flags configuration or internal errors; 3 flags I/O errors.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dce/config.hpp"
#include "dce/design_bench.hpp"
#include "dce/discrimination.hpp"
#include "dce/errors.hpp"
#include "dce/serialize.hpp"
#include "dce/superradiance.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitGoldenFailure = 1;
constexpr int kExitConfigError = 2;
constexpr int kExitIoError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::ios_base::failure("cannot read " + path);
    return buffer.str();
}

/// Collects payload files for one run and writes the manifest last.
class OutputSet {
  public:
    explicit OutputSet(const std::string& dir) : dir_(dir) {
        fs::create_directories(dir_);
    }

    void add(const std::string& name, const std::string& payload) {
        std::ofstream out(dir_ / name, std::ios::binary);
        if (!out) throw std::ios_base::failure("cannot create " + (dir_ / name).string());
        out << payload;
        out.flush();
        if (!out) throw std::ios_base::failure("cannot write " + (dir_ / name).string());
        outputs_.push_back({name, dce::fnv1a64_hex(payload)});
    }

    void finish(const std::string& command, const std::string& config_hash,
                std::optional<std::uint64_t> rng_seed) {
        const std::string manifest =
            dce::dump_payload(dce::make_manifest(command, config_hash, rng_seed, outputs_));
        std::ofstream out(dir_ / dce::kManifestName, std::ios::binary);
        if (!out) {
            throw std::ios_base::failure("cannot create " +
                                         (dir_ / dce::kManifestName).string());
        }
        out << manifest;
        out.flush();
        if (!out) {
            throw std::ios_base::failure("cannot write " +
                                         (dir_ / dce::kManifestName).string());
        }
        for (const dce::ManifestOutput& o : outputs_) {
            std::cout << "wrote " << (dir_ / o.path).string() << "\n";
        }
        std::cout << "wrote " << (dir_ / dce::kManifestName).string() << "\n";
    }

  private:
    fs::path dir_;
    std::vector<dce::ManifestOutput> outputs_;
};

/// "lo:hi:count[:lin|log]", "v1,v2,..." or a single number.
std::vector<double> parse_grid(const std::string& spec, const std::string& where) {
    const auto parse_one = [&where](const std::string& text) {
        try {
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return v;
        } catch (const std::exception&) {
            throw dce::config_error(where + ": expected a number, got \"" + text + "\"");
        }
    };

    if (spec.find(',') != std::string::npos) {
        std::vector<double> values;
        std::istringstream in(spec);
        std::string cell;
        while (std::getline(in, cell, ',')) values.push_back(parse_one(cell));
        if (values.empty()) throw dce::config_error(where + ": empty value list");
        return values;
    }
    if (spec.find(':') == std::string::npos) return {parse_one(spec)};

    std::vector<std::string> parts;
    std::istringstream in(spec);
    std::string part;
    while (std::getline(in, part, ':')) parts.push_back(part);
    if (parts.size() < 3 || parts.size() > 4) {
        throw dce::config_error(where + ": expected lo:hi:count[:lin|log], got \"" +
                                spec + "\"");
    }
    const double lo = parse_one(parts[0]);
    const double hi = parse_one(parts[1]);
    const double count_d = parse_one(parts[2]);
    if (!(count_d >= 1.0) || count_d != static_cast<double>(static_cast<long>(count_d)) ||
        count_d > 1.0e7) {
        throw dce::config_error(where + ": count must be a positive integer <= 1e7");
    }
    const auto count = static_cast<std::size_t>(count_d);
    const std::string mode = parts.size() == 4 ? parts[3] : "lin";
    if (mode != "lin" && mode != "log") {
        throw dce::config_error(where + ": spacing must be lin or log");
    }
    if (count == 1) return {lo};
    std::vector<double> values(count);
    if (mode == "lin") {
        for (std::size_t i = 0; i < count; ++i) {
            values[i] = lo + (hi - lo) * static_cast<double>(i) /
                                 static_cast<double>(count - 1);
        }
    } else {
        if (!(lo > 0.0) || !(hi > 0.0)) {
            throw dce::config_error(where + ": log spacing needs positive endpoints");
        }
        const double log_lo = std::log(lo);
        const double log_hi = std::log(hi);
        for (std::size_t i = 0; i < count; ++i) {
            values[i] = std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(i) /
                                              static_cast<double>(count - 1));
        }
    }
    values.front() = lo;
    values.back() = hi;
    return values;
}

/// "name=grid;name=grid" in declaration order.
std::vector<dce::SweepAxis> parse_axes(const std::string& spec) {
    std::vector<dce::SweepAxis> axes;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ';')) {
        if (item.empty()) continue;
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos) {
            throw dce::config_error("axes: expected name=grid, got \"" + item + "\"");
        }
        dce::SweepAxis axis;
        axis.name = item.substr(0, eq);
        axis.values = parse_grid(item.substr(eq + 1), "axes " + axis.name);
        axes.push_back(std::move(axis));
    }
    if (axes.empty()) throw dce::config_error("axes: no axes given");
    return axes;
}

dce::ordered_json scenario_inputs_json(const dce::ExperimentScenario& s) {
    dce::ordered_json j;
    j["species"] = s.species.name;
    j["hyperfine_freq_hz"] = s.species.hyperfine_freq.value_in(dce::dims::frequency);
    j["q_opt"] = s.cavity.q_opt;
    j["cross_section_m2"] = s.cavity.cross_section.value_in(dce::dims::area);
    j["modulation_depth"] = s.drive.modulation_depth;
    j["mech_freq_rad_s"] = s.drive.mech_freq.value_in(dce::dims::frequency);
    j["mech_q"] = s.drive.mech_q;
    j["fbar_area_m2"] = s.drive.area.value_in(dce::dims::area);
    j["fbar_density_kg_m3"] = s.drive.density.value_in(dce::dims::mass_density);
    j["fbar_acoustic_velocity_m_s"] =
        s.drive.acoustic_velocity.value_in(dce::dims::velocity);
    j["n_atoms"] = s.n_atoms;
    j["temperature_k"] = s.temperature.value_in(dce::dims::temperature);
    j["detector_response_s"] = s.detector_response.value_in(dce::dims::time);
    j["transfer_speed_m_s"] = s.transfer_speed.value_in(dce::dims::velocity);
    j["transfer_distance_m"] = s.transfer_distance.value_in(dce::dims::length);
    j["timing_error"] = s.timing_error;
    j["observation_window_s"] =
        s.observation_window
            ? dce::ordered_json(s.observation_window->value_in(dce::dims::time))
            : dce::ordered_json(nullptr);
    j["resonance_warning"] = s.resonance_warning;
    return j;
}

int run_table1(const std::string& format, const std::string& golden_path) {
    std::vector<dce::Table1Golden> golden;
    if (golden_path.empty()) {
        golden = dce::embedded_table1_golden();
    } else {
        golden = dce::load_table1_golden_csv(golden_path);
    }
    const dce::Table1Result result = dce::reproduce_table1(golden);

    if (format == "json") {
        std::cout << dce::dump_payload(dce::to_json(result));
    } else if (format == "csv") {
        dce::write_csv_row(std::cout,
                           {"species", "quantity", "computed", "golden", "tolerance",
                            "pass"});
        for (const dce::Table1Column& column : result.columns) {
            for (const dce::Table1Cell& cell : column.cells) {
                dce::write_csv_row(
                    std::cout,
                    {column.species, cell.quantity, dce::format_double(cell.computed),
                     dce::format_double(cell.golden), dce::format_double(cell.tolerance),
                     cell.pass ? "1" : "0"});
            }
        }
    } else {
        std::printf("reference reproduction, %zu species, tolerance 5%% (p_cas_w 10%%)\n\n",
                    result.columns.size());
        std::printf("%-18s", "quantity");
        for (const dce::Table1Column& c : result.columns) {
            std::printf("%-18s", c.species.c_str());
        }
        std::printf("\n%-18s", "nu_hz");
        for (const dce::Table1Column& c : result.columns) {
            std::printf("%-18.4g", c.record.nu_hz);
        }
        std::printf("\n");
        const std::size_t n_cells = result.columns.front().cells.size();
        int failed = 0;
        int total = 0;
        for (std::size_t row = 0; row < n_cells; ++row) {
            std::printf("%-18s", result.columns.front().cells[row].quantity.c_str());
            for (const dce::Table1Column& c : result.columns) {
                const dce::Table1Cell& cell = c.cells[row];
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.4g %s", cell.computed,
                              cell.pass ? "ok" : "FAIL");
                std::printf("%-18s", buf);
                ++total;
                if (!cell.pass) ++failed;
            }
            std::printf("\n");
        }
        std::printf("\nresult: %s (%d/%d cells within tolerance)\n",
                    result.all_pass ? "PASS" : "FAIL", total - failed, total);
    }
    return result.all_pass ? 0 : kExitGoldenFailure;
}

int run_simulate(const std::string& config_path, const std::string& out_dir) {
    const std::string config_text = read_file(config_path);
    const dce::ExperimentScenario scenario =
        dce::build_scenario(dce::parse_config_text(config_text));
    const dce::ScenarioRecord record = dce::evaluate_scenario(scenario);
    const dce::ConstraintReport constraints = dce::check_constraints(scenario, record);

    dce::ordered_json record_json;
    record_json["manifest"] = dce::kManifestName;
    record_json["inputs"] = scenario_inputs_json(scenario);
    record_json["record"] = dce::to_json(record);

    dce::ordered_json constraints_json;
    constraints_json["manifest"] = dce::kManifestName;
    const dce::ordered_json body = dce::to_json(constraints);
    constraints_json["pass"] = body["pass"];
    constraints_json["entries"] = body["entries"];

    // Pulse envelope over three background delays (the full burst); fall
    // back to the collective timescale when the delay is zero.
    const double span = record.t_d0_s > 0.0 ? 3.0 * record.t_d0_s : 10.0 * record.t_sr_s;
    constexpr std::size_t kPoints = 1000;
    std::vector<double> grid(kPoints);
    for (std::size_t i = 0; i < kPoints; ++i) {
        grid[i] = span * static_cast<double>(i) / static_cast<double>(kPoints - 1);
    }
    const dce::Quantity omega =
        2.0 * dce::constants::raw::pi * scenario.species.hyperfine_freq;
    const dce::EnsembleState ens{record.n_atoms,
                                 record.n_cas_max + record.thermal_seed,
                                 dce::units::seconds(record.t_sr_s), omega};
    const dce::PulseTrace trace = dce::pulse_shape(ens, grid);

    std::ostringstream pulse_csv;
    pulse_csv << "# manifest: " << dce::kManifestName << "\n";
    dce::write_csv_row(pulse_csv, {"time_s", "emission_rate_per_s", "power_w"});
    for (std::size_t i = 0; i < trace.times_s.size(); ++i) {
        dce::write_csv_row(pulse_csv, {dce::format_double(trace.times_s[i]),
                                       dce::format_double(trace.emission_rate_per_s[i]),
                                       dce::format_double(trace.power_w[i])});
    }

    OutputSet out(out_dir);
    out.add("record.json", dce::dump_payload(record_json));
    out.add("constraints.json", dce::dump_payload(constraints_json));
    out.add("pulse.csv", pulse_csv.str());
    out.finish("simulate", dce::fnv1a64_hex(config_text), std::nullopt);

    std::cout << "constraints: " << (constraints.pass ? "PASS" : "FAIL");
    for (const dce::ConstraintEntry& e : constraints.entries) {
        if (!e.pass) std::cout << " " << e.name << (e.marginal ? "(marginal)" : "");
    }
    std::cout << "\n";
    return 0;
}

std::string histogram_csv(const std::vector<double>& samples, double lo, double hi,
                          std::size_t bins) {
    std::vector<std::size_t> counts(bins, 0);
    const double width = (hi - lo) / static_cast<double>(bins);
    for (double x : samples) {
        auto bin = static_cast<std::size_t>((x - lo) / width);
        if (bin >= bins) bin = bins - 1;  // right edge lands in the last bin
        ++counts[bin];
    }
    std::ostringstream csv;
    csv << "# manifest: " << dce::kManifestName << "\n";
    dce::write_csv_row(csv, {"bin_lo_s", "bin_hi_s", "count"});
    for (std::size_t i = 0; i < bins; ++i) {
        dce::write_csv_row(csv, {dce::format_double(lo + width * static_cast<double>(i)),
                                 dce::format_double(lo + width * static_cast<double>(i + 1)),
                                 std::to_string(counts[i])});
    }
    return csv.str();
}

int run_mc(const std::string& config_path, std::size_t trials, std::uint64_t seed,
           const std::string& out_dir) {
    const std::string config_text = read_file(config_path);
    const dce::ExperimentScenario scenario =
        dce::build_scenario(dce::parse_config_text(config_text));
    const dce::ScenarioRecord record = dce::evaluate_scenario(scenario);

    const double n_casimir = record.n_cas_max + record.thermal_seed;
    const dce::Quantity omega =
        2.0 * dce::constants::raw::pi * scenario.species.hyperfine_freq;
    dce::EnsembleState ens{record.n_atoms, 0.0, dce::units::seconds(record.t_sr_s),
                           omega};
    const dce::Quantity window = dce::units::seconds(record.observation_window_s);

    const dce::DiscriminationReport report =
        dce::mc_discrimination(ens, n_casimir, trials, seed, window);

    dce::EnsembleState seeded = ens;
    seeded.n_seed = n_casimir;
    const dce::DelayDistribution cas = dce::sample_delays(seeded, trials, seed, false, 0);
    const dce::DelayDistribution bg = dce::sample_delays(ens, trials, seed, false, 1);

    double lo = cas.samples_s.front();
    double hi = lo;
    for (double x : cas.samples_s) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    for (double x : bg.samples_s) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    if (hi <= lo) hi = lo + 1.0e-12;  // degenerate distributions
    constexpr std::size_t kBins = 64;

    dce::ordered_json disc_json;
    disc_json["manifest"] = dce::kManifestName;
    disc_json["n_casimir"] = n_casimir;
    disc_json["n_trials"] = trials;
    disc_json["rng_seed"] = seed;
    disc_json["observation_window_s"] = record.observation_window_s;
    disc_json["report"] = dce::to_json(report);
    disc_json["seeded"] = dce::to_json(cas);
    disc_json["background"] = dce::to_json(bg);

    OutputSet out(out_dir);
    out.add("histogram_casimir.csv", histogram_csv(cas.samples_s, lo, hi, kBins));
    out.add("histogram_background.csv", histogram_csv(bg.samples_s, lo, hi, kBins));
    out.add("discrimination.json", dce::dump_payload(disc_json));
    out.finish("mc", dce::fnv1a64_hex(config_text), seed);

    std::cout << "overlap: " << dce::format_double(*report.mc_overlap) << " ("
              << (report.discriminable ? "discriminable" : "not discriminable") << ")\n";
    return 0;
}

int run_sweep(const std::string& config_path, const std::string& axes_spec,
              const std::string& out_dir) {
    const std::string config_text = read_file(config_path);
    const dce::ExperimentScenario base =
        dce::build_scenario(dce::parse_config_text(config_text));
    const std::vector<dce::SweepAxis> axes = parse_axes(axes_spec);
    const dce::SweepResult result = dce::sweep(base, axes);

    std::ostringstream csv;
    csv << "# manifest: " << dce::kManifestName << "\n";
    std::vector<std::string> header;
    for (const dce::SweepAxis& ax : result.axes) header.push_back(ax.name);
    const std::vector<std::string> record_fields = {
        "nu_hz",        "cavity_length_m", "n_cas_max",      "p_cas_w",
        "t1_s",         "t1_cav_s",        "t_sr_s",         "n_atoms",
        "t_d0_s",       "t_d_s",           "p_sr_w",         "thermal_seed",
        "fbar_power_w", "relative_shift",  "discriminable",  "hold_time_s",
        "observation_window_s", "transfer_time_s"};
    header.insert(header.end(), record_fields.begin(), record_fields.end());
    const std::vector<std::string> flag_fields = {
        "ok_fbar_power",        "ok_hold_time_unseeded", "ok_hold_time_seeded",
        "ok_detector_response", "ok_transfer_time",      "ok_observation_window",
        "ok_all"};
    header.insert(header.end(), flag_fields.begin(), flag_fields.end());
    dce::write_csv_row(csv, header);

    for (const dce::SweepRow& row : result.rows) {
        std::vector<std::string> cells;
        cells.reserve(header.size());
        for (double v : row.inputs) cells.push_back(dce::format_double(v));
        const dce::ScenarioRecord& r = row.record;
        for (double v : {r.nu_hz, r.cavity_length_m, r.n_cas_max, r.p_cas_w, r.t1_s,
                         r.t1_cav_s, r.t_sr_s, r.n_atoms, r.t_d0_s, r.t_d_s, r.p_sr_w,
                         r.thermal_seed, r.fbar_power_w, r.relative_shift}) {
            cells.push_back(dce::format_double(v));
        }
        cells.push_back(r.discriminable ? "1" : "0");
        for (double v : {r.hold_time_s, r.observation_window_s, r.transfer_time_s}) {
            cells.push_back(dce::format_double(v));
        }
        const dce::ConstraintFlags& f = row.constraints;
        for (bool b : {f.fbar_power, f.hold_time_unseeded, f.hold_time_seeded,
                       f.detector_response, f.transfer_time, f.observation_window,
                       f.all}) {
            cells.push_back(b ? "1" : "0");
        }
        dce::write_csv_row(csv, cells);
    }

    OutputSet out(out_dir);
    out.add("sweep.csv", csv.str());
    out.finish("sweep", dce::fnv1a64_hex(config_text), std::nullopt);
    std::cout << result.rows.size() << " grid points evaluated\n";
    return 0;
}

int run_discriminate(const std::string& config_path, const std::string& qe_grid_spec,
                     const std::string& format, const std::string& out_dir) {
    const std::string config_text = read_file(config_path);
    const dce::ExperimentScenario scenario =
        dce::build_scenario(dce::parse_config_text(config_text));
    const dce::ScenarioRecord record = dce::evaluate_scenario(scenario);

    const dce::Quantity omega =
        2.0 * dce::constants::raw::pi * scenario.species.hyperfine_freq;
    const dce::EnsembleState ens{record.n_atoms, 0.0,
                                 dce::units::seconds(record.t_sr_s), omega};
    const double n_casimir = record.n_cas_max + record.thermal_seed;
    const dce::DiscriminationReport report =
        dce::deterministic_discrimination(ens, n_casimir, scenario.timing_error);
    const std::vector<double> grid = parse_grid(qe_grid_spec, "qe-grid");
    const dce::BorderlineScan scan =
        dce::borderline_scan(ens, scenario.timing_error, grid);

    dce::ordered_json j;
    j["manifest"] = dce::kManifestName;
    j["n_casimir"] = n_casimir;
    j["report"] = dce::to_json(report);
    j["scan"] = dce::to_json(scan);

    if (!out_dir.empty()) {
        OutputSet out(out_dir);
        out.add("discriminate.json", dce::dump_payload(j));
        out.finish("discriminate", dce::fnv1a64_hex(config_text), std::nullopt);
    }
    if (format == "json") {
        j.erase("manifest");
        std::cout << dce::dump_payload(j);
    } else {
        std::printf("deterministic report (n_casimir = %s)\n",
                    dce::format_double(n_casimir).c_str());
        std::printf("  t_d_background_s  %.6g\n",
                    report.t_d_background.value_in(dce::dims::time));
        std::printf("  t_d_casimir_s     %.6g\n",
                    report.t_d_casimir.value_in(dce::dims::time));
        std::printf("  relative_shift    %.6g\n", report.relative_shift);
        std::printf("  timing_error      %.6g\n", report.timing_error);
        std::printf("  discriminable     %s\n\n", report.discriminable ? "yes" : "no");
        std::printf("borderline scan, n = sinh^2(2 q_eps)\n");
        std::printf("  %-10s%-14s%-16s%s\n", "q_eps", "n_casimir", "relative_shift",
                    "discriminable");
        for (const dce::BorderlinePoint& p : scan.points) {
            std::printf("  %-10.4g%-14.6g%-16.6g%s\n", p.q_eps, p.n_casimir,
                        p.relative_shift, p.discriminable ? "yes" : "no");
        }
        if (scan.crossing) {
            std::printf("\ncrossing: q_eps = %.4g (bracket midpoint; interpolated %.4g)\n",
                        *scan.crossing, *scan.crossing_refined);
        } else {
            std::printf("\ncrossing: none inside the grid\n");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"design bench for a vibrating-wall microwave photon source with "
                 "cold-atom superradiant readout"};
    app.set_version_flag("--version", dce::kToolVersion);
    app.require_subcommand(1);

    std::string format = "text";
    std::string golden_path;
    CLI::App* table1 = app.add_subcommand("table1", "reproduce the summary table");
    table1->add_option("--format", format, "text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    table1->add_option("--golden", golden_path, "alternative reference CSV");

    std::string config_path;
    std::string out_dir;
    CLI::App* simulate =
        app.add_subcommand("simulate", "evaluate one scenario and its constraints");
    simulate->add_option("--config", config_path, "configuration file")->required();
    simulate->add_option("--out", out_dir, "output directory")->required();

    std::size_t trials = 100000;
    std::uint64_t seed = 0;
    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo delay statistics");
    mc->add_option("--config", config_path, "configuration file")->required();
    mc->add_option("--out", out_dir, "output directory")->required();
    mc->add_option("--trials", trials, "number of trials (>= 100)");
    mc->add_option("--seed", seed, "random seed");

    std::string axes_spec;
    CLI::App* sweep = app.add_subcommand("sweep", "evaluate a parameter grid");
    sweep->add_option("--config", config_path, "configuration file")->required();
    sweep->add_option("--out", out_dir, "output directory")->required();
    sweep->add_option("--axes", axes_spec,
                      "axes, e.g. \"n_atoms=1e5:1e8:31:log;q_eps=0,0.5,1\"")
        ->required();

    std::string qe_grid = "0:2:9";
    std::string disc_out;
    CLI::App* discriminate =
        app.add_subcommand("discriminate", "threshold report and borderline scan");
    discriminate->add_option("--config", config_path, "configuration file")->required();
    discriminate->add_option("--qe-grid", qe_grid, "q_eps grid (default 0:2:9)");
    discriminate->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    discriminate->add_option("--out", disc_out, "optional output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (table1->parsed()) return run_table1(format, golden_path);
        if (simulate->parsed()) return run_simulate(config_path, out_dir);
        if (mc->parsed()) return run_mc(config_path, trials, seed, out_dir);
        if (sweep->parsed()) return run_sweep(config_path, axes_spec, out_dir);
        if (discriminate->parsed())
            return run_discriminate(config_path, qe_grid, format, disc_out);
    } catch (const dce::golden_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const dce::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIoError;
    } catch (const dce::dimension_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitConfigError;
    }
    return 0;
}
