#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dce/design_bench.hpp"
#include "dce/errors.hpp"

using namespace dce;

namespace {

ExperimentScenario na_reference() { return reference_scenario(find_species("23Na")); }

bool records_identical(const ScenarioRecord& a, const ScenarioRecord& b) {
    return a.nu_hz == b.nu_hz && a.cavity_length_m == b.cavity_length_m &&
           a.n_cas_max == b.n_cas_max && a.p_cas_w == b.p_cas_w && a.t1_s == b.t1_s &&
           a.t1_cav_s == b.t1_cav_s && a.t_sr_s == b.t_sr_s && a.n_atoms == b.n_atoms &&
           a.t_d0_s == b.t_d0_s && a.t_d_s == b.t_d_s && a.p_sr_w == b.p_sr_w &&
           a.thermal_seed == b.thermal_seed && a.fbar_power_w == b.fbar_power_w &&
           a.relative_shift == b.relative_shift && a.discriminable == b.discriminable &&
           a.hold_time_s == b.hold_time_s &&
           a.observation_window_s == b.observation_window_s &&
           a.transfer_time_s == b.transfer_time_s;
}

/// RAII temp file seeded with the given text.
class TempFile {
public:
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("dce_golden_" + std::to_string(++counter) + ".csv"))
                    .string();
        std::ofstream out(path_);
        out << text;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

const char* kGoldenHeader =
    "species,nu_hz,length_m,t1_s,t1_cav_s,n_at_max,t_d0_s,t_d_s,p_cas_w,p_sr_w\n";

}  // namespace

TEST_SUITE("design_bench") {

TEST_CASE("evaluate_scenario is pure") {
    const ExperimentScenario s = na_reference();
    const ScenarioRecord a = evaluate_scenario(s);
    const ScenarioRecord b = evaluate_scenario(s);
    const ExperimentScenario copy = s;
    const ScenarioRecord c = evaluate_scenario(copy);
    CHECK(records_identical(a, b));
    CHECK(records_identical(a, c));
}

TEST_CASE("sodium reference record frozen points") {
    const ScenarioRecord r = evaluate_scenario(na_reference());
    CHECK(r.nu_hz == 1.77e9);
    CHECK(r.cavity_length_m == doctest::Approx(0.0846871).epsilon(1e-5));
    CHECK(r.n_cas_max == doctest::Approx(13.1541164).epsilon(1e-6));
    CHECK(r.p_cas_w == doctest::Approx(1.7157112e-21).epsilon(1e-6));
    CHECK(r.t1_s == doctest::Approx(1.8013790e14).epsilon(1e-6));
    CHECK(r.t1_cav_s == doctest::Approx(41316.042).epsilon(1e-6));
    CHECK(r.n_atoms == doctest::Approx(8.2632083e7).epsilon(1e-6));
    CHECK(r.t_sr_s == doctest::Approx(5.0e-4).epsilon(1e-12));
    CHECK(r.thermal_seed == doctest::Approx(2.0459960e-4).epsilon(1e-6));
    CHECK(r.t_d0_s == doctest::Approx(9.1149543e-3).epsilon(1e-6));
    CHECK(r.t_d_s == doctest::Approx(7.7899443e-3).epsilon(1e-6));
    CHECK(r.p_sr_w == doctest::Approx(1.9382423e-13).epsilon(1e-6));
    CHECK(r.fbar_power_w == doctest::Approx(289.81734).epsilon(1e-6));
    CHECK(r.relative_shift == doctest::Approx(0.1453666).epsilon(1e-5));
    CHECK(r.discriminable);
    CHECK(r.hold_time_s == doctest::Approx(8.9918047e-3).epsilon(1e-6));
    CHECK(r.observation_window_s == doctest::Approx(8.7899443e-3).epsilon(1e-6));
    CHECK(r.transfer_time_s == doctest::Approx(0.1).epsilon(1e-12));
}

TEST_CASE("an undriven cold scenario produces no photon seed") {
    ExperimentScenario s = na_reference();
    s.drive.modulation_depth = 0.0;
    s.temperature = units::kelvin(0.0);
    const ScenarioRecord r = evaluate_scenario(s);
    CHECK(r.n_cas_max == 0.0);
    CHECK(r.p_cas_w == 0.0);
    CHECK(r.thermal_seed == 0.0);
    CHECK(r.t_d_s == r.t_d0_s);
    CHECK(r.relative_shift == 0.0);
    CHECK_FALSE(r.discriminable);
    CHECK(r.fbar_power_w == 0.0);
}

TEST_CASE("sodium reference constraints: verdicts, order and margins") {
    const ExperimentScenario s = na_reference();
    const ScenarioRecord r = evaluate_scenario(s);
    const ConstraintReport report = check_constraints(s, r);
    REQUIRE(report.entries.size() == 6);

    CHECK(report.entries[0].name == "fbar_power");
    CHECK(report.entries[0].relation == "<");
    CHECK_FALSE(report.entries[0].pass);  // 290 W against the 10 W limit
    CHECK_FALSE(report.entries[0].marginal);
    CHECK(report.entries[0].bound.value_in(dims::power) == 10.0);

    CHECK(report.entries[1].name == "hold_time_unseeded");
    CHECK_FALSE(report.entries[1].pass);  // 9.11 ms exceeds the 8.99 ms hold
    CHECK(report.entries[1].marginal);    // ... by only 1.4%

    CHECK(report.entries[2].name == "hold_time_seeded");
    CHECK(report.entries[2].pass);  // 7.79 ms fits
    CHECK_FALSE(report.entries[2].marginal);

    CHECK(report.entries[3].name == "detector_response");
    CHECK(report.entries[3].relation == ">=");
    CHECK(report.entries[3].pass);  // T_SR equals the response time by design
    CHECK(report.entries[3].marginal);

    CHECK(report.entries[4].name == "transfer_time");
    CHECK_FALSE(report.entries[4].pass);  // 100 ms transport against 0.5 ms

    CHECK(report.entries[5].name == "observation_window");
    CHECK(report.entries[5].pass);

    CHECK_FALSE(report.pass);
}

TEST_CASE("a gentle drive clears the power constraint") {
    ExperimentScenario s = na_reference();
    s.drive.modulation_depth = 1.0e-9;
    const ConstraintReport report = check_constraints(s, evaluate_scenario(s));
    CHECK(report.entries[0].pass);
    CHECK(report.entries[0].value.value_in(dims::power) ==
          doctest::Approx(2.8981734).epsilon(1e-6));
}

TEST_CASE("transfer constraint caps the atom number near 4.1e5") {
    ExperimentScenario s = na_reference();
    s.n_atoms = 413160.0;
    ConstraintReport at_cap = check_constraints(s, evaluate_scenario(s));
    CHECK(at_cap.entries[4].pass);  // T_SR = 0.100000...

    s.n_atoms = 413161.0;
    ConstraintReport over_cap = check_constraints(s, evaluate_scenario(s));
    CHECK_FALSE(over_cap.entries[4].pass);
    CHECK(over_cap.entries[4].marginal);
}

TEST_CASE("explicit observation window narrows the late-arrival margin") {
    ExperimentScenario s = na_reference();
    s.observation_window = units::seconds(1.0e-3);
    const ScenarioRecord r = evaluate_scenario(s);
    CHECK(r.observation_window_s == 1.0e-3);
    const ConstraintReport report = check_constraints(s, r);
    CHECK_FALSE(report.entries[5].pass);  // 7.8 ms delay misses a 1 ms window
}

TEST_CASE("parametric_resonance detects the 2x drive point") {
    const ExperimentScenario s = na_reference();
    CHECK(parametric_resonance(s.drive, s.cavity));
    CHECK_FALSE(s.resonance_warning);
    DriveConfig detuned = s.drive;
    detuned.mech_freq = units::scalar(1.01) * s.drive.mech_freq;
    CHECK_FALSE(parametric_resonance(detuned, s.cavity));
}

TEST_CASE("scenario validation rejects out-of-range fields") {
    ExperimentScenario s = na_reference();
    s.n_atoms = 0.5;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = na_reference();
    s.timing_error = 1.0;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = na_reference();
    s.temperature = units::kelvin(-1.0);
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = na_reference();
    s.observation_window = units::seconds(0.0);
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s = na_reference();
    s.transfer_speed = units::meters_per_sec(0.0);
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("reproduce_table1 matches the embedded reference") {
    const Table1Result result = reproduce_table1();
    CHECK(result.all_pass);
    REQUIRE(result.columns.size() == 4);
    for (const Table1Column& col : result.columns) {
        REQUIRE(col.cells.size() == 8);
        for (const Table1Cell& cell : col.cells) {
            INFO(col.species, " ", cell.quantity, ": computed ", cell.computed,
                 " vs golden ", cell.golden);
            CHECK(cell.pass);
        }
    }
    CHECK(result.columns[1].species == "23Na");
    CHECK(result.columns[1].record.t1_cav_s == doctest::Approx(41316.042).epsilon(1e-6));
    CHECK(result.columns[1].cells[6].quantity == "p_cas_w");
    CHECK(result.columns[1].cells[6].tolerance == 0.10);
    CHECK(result.columns[1].cells[1].tolerance == 0.05);
}

TEST_CASE("reproduce_table1 flags a reference that does not match") {
    std::vector<Table1Golden> tampered = embedded_table1_golden();
    tampered[1].t1_cav_s = 5.0e4;  // 21% away from the computed 4.13e4
    const Table1Result result = reproduce_table1(tampered);
    CHECK_FALSE(result.all_pass);
    bool found = false;
    for (const Table1Cell& cell : result.columns[1].cells) {
        if (cell.quantity == "t1_cav_s") {
            found = true;
            CHECK_FALSE(cell.pass);
        } else {
            CHECK(cell.pass);
        }
    }
    CHECK(found);
    CHECK_THROWS_AS(reproduce_table1({}), golden_error);
}

TEST_CASE("golden CSV loader round-trips the embedded table") {
    std::string text = kGoldenHeader;
    text += "6Li,0.228e9,657.0e-3,8.4e16,3.2e5,6.4e8,10.1e-3,8.8e-3,2.8e-23,1.9e-13\n";
    text += "23Na,1.77e9,84.6e-3,1.8e14,4.1e4,8.2e7,9.1e-3,7.8e-3,1.7e-21,1.9e-13\n";
    const TempFile file(text);
    const std::vector<Table1Golden> loaded = load_table1_golden_csv(file.path());
    REQUIRE(loaded.size() == 2);
    CHECK(loaded[0].species == "6Li");
    CHECK(loaded[0].nu_hz == 0.228e9);
    CHECK(loaded[1].p_cas_w == 1.7e-21);
    CHECK(loaded[1].t_d_s == 7.8e-3);
    const Table1Result result = reproduce_table1(loaded);
    CHECK(result.all_pass);
    REQUIRE(result.columns.size() == 2);
}

TEST_CASE("golden CSV loader rejects malformed input") {
    CHECK_THROWS_AS(load_table1_golden_csv("/nonexistent/golden.csv"), golden_error);

    const TempFile bad_header("species,nu_hz\n23Na,1.77e9\n");
    CHECK_THROWS_AS(load_table1_golden_csv(bad_header.path()), golden_error);

    const TempFile short_row(std::string(kGoldenHeader) + "23Na,1.77e9,84.6e-3\n");
    CHECK_THROWS_AS(load_table1_golden_csv(short_row.path()), golden_error);

    const TempFile bad_number(
        std::string(kGoldenHeader) +
        "23Na,1.77e9,84.6e-3,1.8e14,4.1eX,8.2e7,9.1e-3,7.8e-3,1.7e-21,1.9e-13\n");
    CHECK_THROWS_AS(load_table1_golden_csv(bad_number.path()), golden_error);

    const TempFile negative(
        std::string(kGoldenHeader) +
        "23Na,1.77e9,84.6e-3,-1.8e14,4.1e4,8.2e7,9.1e-3,7.8e-3,1.7e-21,1.9e-13\n");
    CHECK_THROWS_AS(load_table1_golden_csv(negative.path()), golden_error);

    const TempFile empty_table(kGoldenHeader);
    CHECK_THROWS_AS(load_table1_golden_csv(empty_table.path()), golden_error);
}

TEST_CASE("sweep over the atom number matches direct evaluation") {
    const ExperimentScenario base = na_reference();
    SweepAxis axis;
    axis.name = "n_atoms";
    for (int i = 0; i < 31; ++i) {
        axis.values.push_back(1.0e5 * std::pow(10.0, 3.0 * i / 30.0));
    }
    const SweepResult result = sweep(base, {axis});
    REQUIRE(result.rows.size() == 31);
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        REQUIRE(result.rows[i].inputs.size() == 1);
        CHECK(result.rows[i].inputs[0] == axis.values[i]);
        if (i > 0) {
            REQUIRE(result.rows[i].record.t_sr_s < result.rows[i - 1].record.t_sr_s);
        }
    }
    ExperimentScenario direct = base;
    direct.n_atoms = axis.values[17];
    CHECK(records_identical(result.rows[17].record, evaluate_scenario(direct)));
    const ConstraintReport report = check_constraints(direct, result.rows[17].record);
    CHECK(result.rows[17].constraints.all == report.pass);
    CHECK(result.rows[17].constraints.transfer_time == report.entries[4].pass);
}

TEST_CASE("sweep walks the cross product with the last axis fastest") {
    const ExperimentScenario base = na_reference();
    const SweepAxis outer{"q_opt", {1.0e7, 1.0e8, 1.0e9}};
    SweepAxis inner{"n_atoms", {}};
    for (int i = 1; i <= 9; ++i) inner.values.push_back(1.0e5 * i);
    const SweepResult result = sweep(base, {outer, inner});
    REQUIRE(result.rows.size() == 27);
    REQUIRE(result.axes.size() == 2);
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        CHECK(result.rows[i].inputs[0] == outer.values[i / 9]);
        CHECK(result.rows[i].inputs[1] == inner.values[i % 9]);
        CHECK(result.rows[i].record.n_atoms == inner.values[i % 9]);
    }
}

TEST_CASE("sweep q_eps rescales the modulation depth against q_opt") {
    const ExperimentScenario base = na_reference();
    const SweepResult direct = sweep(base, {{"q_eps", {0.5, 1.0, 2.0}}});
    REQUIRE(direct.rows.size() == 3);
    CHECK(direct.rows[0].record.n_cas_max == doctest::Approx(1.3810978).epsilon(1e-6));
    CHECK(direct.rows[1].record.n_cas_max == doctest::Approx(13.1541164).epsilon(1e-6));
    CHECK(direct.rows[2].record.n_cas_max == doctest::Approx(744.7395806).epsilon(1e-6));

    // Declared after q_opt, q_eps compensates for whatever q_opt was set to.
    const SweepResult paired =
        sweep(base, {{"q_opt", {1.0e7, 1.0e8}}, {"q_eps", {1.0}}});
    REQUIRE(paired.rows.size() == 2);
    CHECK(paired.rows[0].record.n_cas_max ==
          doctest::Approx(paired.rows[1].record.n_cas_max).epsilon(1e-9));
}

TEST_CASE("sweep rejects bad axis specifications") {
    const ExperimentScenario base = na_reference();
    CHECK_THROWS_AS(sweep(base, {}), config_error);
    CHECK_THROWS_AS(sweep(base, {{"flux_capacitance", {1.0}}}), config_error);
    CHECK_THROWS_AS(sweep(base, {{"n_atoms", {}}}), config_error);
    CHECK_THROWS_AS(
        sweep(base, {{"n_atoms", std::vector<double>(4000, 1.0e6)},
                     {"timing_error", std::vector<double>(3000, 0.1)}}),
        config_error);
    try {
        sweep(base, {{"flux_capacitance", {1.0}}});
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(std::string(e.what()).find("n_atoms") != std::string::npos);
    }
}

TEST_CASE("sweep axis names are the documented ten") {
    const std::vector<std::string>& names = sweep_axis_names();
    REQUIRE(names.size() == 10);
    CHECK(names[0] == "n_atoms");
    CHECK(names[3] == "q_eps");
    CHECK(names[9] == "mech_q");
}

}  // TEST_SUITE
