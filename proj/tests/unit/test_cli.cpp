// End-to-end tests that drive the installed command-line binary exactly the
// way a user would: argv parsing, config loading, artifact rendering, exit
// codes, and the machine-readable error records on stderr.

#include "run_config.hpp"

#include "support/reference.hpp"

#include <doctest/doctest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace magnomech;
using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CliResult run_cli(const std::string& args) {
    const std::string err_path = "/tmp/magnomech_cli_test_stderr.txt";
    const std::string command = std::string(MAGNOMECH_CLI_BIN) + " " + args + " 2>" + err_path;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    size_t n = 0;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.out.append(buffer, n);
    }
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.err = slurp(err_path);
    return result;
}

std::string write_config(const json& doc, const std::string& name) {
    const std::string path = "/tmp/magnomech_cli_test_" + name + ".json";
    std::ofstream out(path);
    out << doc.dump(2);
    return path;
}

json baseline_config() {
    return cli::config_to_json(cli::load_preset("fig2_baseline"));
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("point on the bundled preset emits the reference report") {
    const CliResult r = run_cli("point --preset fig2_baseline --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["command"] == "point");
    CHECK(doc["resolved_config"]["system"]["omega_a_hz"] == 1.0e10);
    CHECK(doc["resolved_config"]["system"]["sphere_diameter_m"] == 2.5e-4);

    const json& result = doc["result"];
    CHECK(result["stability"]["stable"] == true);
    CHECK(result["validity"]["all_ok"] == true);
    bool found = false;
    for (const json& entry : result["entanglement"]) {
        if (entry["pair"] == "magnon1-magnon2") {
            found = true;
            CHECK(entry["log_negativity"].get<double>() ==
                  doctest::Approx(reference::Frozen::log_neg[3]).epsilon(1e-11));
            CHECK(entry["entangled"] == true);
        }
    }
    CHECK(found);
}

TEST_CASE("csv output is self-describing") {
    const CliResult r = run_cli("point --preset fig2_baseline");
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() > 3);
    CHECK(lines[0].rfind("# resolved_config: {", 0) == 0);
    CHECK(lines[1] == "key,value");
    // The flattened keys index the entanglement list; entry 3 is the
    // magnon1-magnon2 pair.
    bool found_pair = false;
    bool found_value = false;
    for (const auto& line : lines) {
        if (line == "entanglement[3].pair,magnon1-magnon2") {
            found_pair = true;
        }
        if (line == "entanglement[3].log_negativity,0.178827220956") {
            found_value = true;
        }
    }
    CHECK(found_pair);
    CHECK(found_value);
    // The comment payload reloads as a valid config document.
    const json resolved =
        json::parse(lines[0].substr(std::string("# resolved_config: ").size()));
    CHECK_NOTHROW(cli::parse_config(resolved, "comment"));
}

TEST_CASE("the positional command overrides the config command") {
    const CliResult r = run_cli("audit --preset fig2_baseline --format json");
    REQUIRE(r.exit_code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["command"] == "audit");
    CHECK(doc["result"]["derived"]["n_spins"].get<double>() ==
          doctest::Approx(reference::Frozen::n_spins).epsilon(1e-11));
    CHECK(doc["result"]["derived"]["kerr_coeff_hz"].get<double>() ==
          doctest::Approx(6.4e-9).epsilon(1e-11));
}

TEST_CASE("one-axis sweep renders an axis-labelled table") {
    json doc = baseline_config();
    doc["command"] = "sweep";
    doc["sweep"] = {{"axes", json::array({{{"knob", "delta_a"},
                                           {"start_hz", -1.5e7},
                                           {"stop_hz", -0.5e7},
                                           {"points", 5}}})},
                    {"links", json::array({{{"target", "delta_2"},
                                            {"source", "delta_a"},
                                            {"factor", 1.0}}})}};
    const std::string path = write_config(doc, "sweep1d");
    const CliResult r = run_cli("sweep --config " + path);
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 7);  // comment + header + 5 rows
    CHECK(lines[1] == "delta_a_hz,log_negativity");
    CHECK(lines[2].rfind("-15000000,", 0) == 0);
    CHECK(lines[6].rfind("-5000000,", 0) == 0);

    // Axis values are external (cycles/s), and the row values match the
    // library evaluated at the same points.
    SystemParams p = reference::params();
    p.delta_a = p.delta_2 = -two_pi * 1.0e7;
    const double expected = log_negativity_at(p, reference::pair_m1_m2());
    const auto& cols = lines[4];
    const auto comma = cols.find(',');
    CHECK(std::stod(cols.substr(0, comma)) == -1.0e7);
    CHECK(std::stod(cols.substr(comma + 1)) == doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("two-axis sweep renders a row-major grid with axis headers") {
    json doc = baseline_config();
    doc["command"] = "sweep";
    doc["sweep"] = {{"axes", json::array({{{"knob", "delta_a"},
                                           {"start_hz", -1.2e7},
                                           {"stop_hz", -0.6e7},
                                           {"points", 3}},
                                          {{"knob", "delta_2"},
                                           {"start_hz", -1.4e7},
                                           {"stop_hz", -0.6e7},
                                           {"points", 2}}})}};
    const std::string path = write_config(doc, "sweep2d");
    const CliResult r = run_cli("sweep --config " + path);
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);  // comment + axis header + 3 rows
    CHECK(lines[1] == "delta_a_hz\\delta_2_hz,-14000000,-6000000");
    CHECK(lines[2].rfind("-12000000,", 0) == 0);
    CHECK(lines[4].rfind("-6000000,", 0) == 0);

    // Cell (1, 0): delta_a = -9 MHz, delta_2 = -14 MHz.
    SystemParams p = reference::params();
    p.delta_a = -two_pi * 9.0e6;
    p.delta_2 = -two_pi * 1.4e7;
    const double expected = log_negativity_at(p, reference::pair_m1_m2());
    const auto row = lines[3];
    const auto first_comma = row.find(',');
    const auto second_comma = row.find(',', first_comma + 1);
    const double cell = std::stod(row.substr(first_comma + 1, second_comma - first_comma - 1));
    CHECK(cell == doctest::Approx(expected).epsilon(1e-11));
}

TEST_CASE("tcurve renders the temperature table") {
    json doc = baseline_config();
    doc["command"] = "tcurve";
    doc["tcurve"] = {{"temperatures_k", json::array({0.0, 0.01, 0.3})}};
    const std::string path = write_config(doc, "tcurve");
    const CliResult r = run_cli("tcurve --config " + path);
    REQUIRE(r.exit_code == 0);
    const auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[1] == "temperature_k,log_negativity");
    CHECK(lines[2] == "0,0.179525600686");
    CHECK(lines[3] == "0.01,0.178827220956");
    CHECK(lines[4] == "0.3,0");
}

TEST_CASE("tcrit emits the bisection result and bracket") {
    json doc = baseline_config();
    doc["command"] = "tcrit";
    doc["tcrit"] = {{"t_low_k", 0.1}, {"t_high_k", 0.3}, {"tol_k", 1e-3}};
    const std::string path = write_config(doc, "tcrit");
    const CliResult r = run_cli("tcrit --config " + path + " --format json");
    REQUIRE(r.exit_code == 0);
    const json out = json::parse(r.out);
    CHECK(out["result"]["critical_temperature_k"].get<double>() ==
          doctest::Approx(reference::Frozen::t_crit).epsilon(0.02));
    CHECK(out["result"]["tol_k"] == 1e-3);
    CHECK(out["result"]["t_low_k"] == 0.1);
}

TEST_CASE("artifacts can be written to a file") {
    const std::string out_path = "/tmp/magnomech_cli_test_artifact.json";
    std::remove(out_path.c_str());
    const CliResult r =
        run_cli("point --preset fig2_baseline --format json --out " + out_path);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    const json doc = json::parse(slurp(out_path));
    CHECK(doc["command"] == "point");
    std::remove(out_path.c_str());
}

TEST_CASE("rerunning an emitted resolved config reproduces the results") {
    const CliResult first = run_cli("point --preset fig2_baseline --format json");
    REQUIRE(first.exit_code == 0);
    const json doc = json::parse(first.out);
    const std::string path = write_config(doc["resolved_config"], "roundtrip");
    const CliResult second = run_cli("point --config " + path + " --format json");
    REQUIRE(second.exit_code == 0);
    const json redone = json::parse(second.out);
    CHECK(redone["result"] == doc["result"]);
}

TEST_CASE("sweep results are independent of the thread count") {
    json doc = baseline_config();
    doc["command"] = "sweep";
    doc["sweep"] = {{"axes", json::array({{{"knob", "delta_a"},
                                           {"start_hz", -1.5e7},
                                           {"stop_hz", -0.5e7},
                                           {"points", 4}},
                                          {{"knob", "delta_2"},
                                           {"start_hz", -1.5e7},
                                           {"stop_hz", -0.5e7},
                                           {"points", 4}}})}};
    const std::string path = write_config(doc, "threads");
    const CliResult serial = run_cli("sweep --config " + path + " --threads 1");
    const CliResult threaded = run_cli("sweep --config " + path + " --threads 4");
    REQUIRE(serial.exit_code == 0);
    REQUIRE(threaded.exit_code == 0);
    // Byte-identical apart from the echoed thread count in the comment line.
    const auto serial_lines = lines_of(serial.out);
    const auto threaded_lines = lines_of(threaded.out);
    REQUIRE(serial_lines.size() == threaded_lines.size());
    for (size_t k = 1; k < serial_lines.size(); ++k) {
        CHECK(serial_lines[k] == threaded_lines[k]);
    }
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli("point --no-such-flag").exit_code == 1);
    CHECK(run_cli("transmogrify --preset fig2_baseline").exit_code == 1);
}

TEST_CASE("configuration errors exit with code 2 and a typed record") {
    SUBCASE("missing source") {
        const CliResult r = run_cli("point");
        CHECK(r.exit_code == 2);
        CHECK(json::parse(r.err)["error"]["type"] == "config");
    }
    SUBCASE("both sources") {
        json doc = baseline_config();
        const std::string path = write_config(doc, "both");
        const CliResult r = run_cli("point --config " + path + " --preset fig2_baseline");
        CHECK(r.exit_code == 2);
        CHECK(json::parse(r.err)["error"]["type"] == "config");
    }
    SUBCASE("unknown preset") {
        const CliResult r = run_cli("point --preset fig9z");
        CHECK(r.exit_code == 2);
        const json err = json::parse(r.err);
        CHECK(err["error"]["type"] == "config");
        CHECK(err["error"]["message"].get<std::string>().find("fig2a") != std::string::npos);
    }
    SUBCASE("malformed document") {
        json doc = baseline_config();
        doc["system"].erase("g_1_hz");
        const std::string path = write_config(doc, "missingkey");
        const CliResult r = run_cli("point --config " + path);
        CHECK(r.exit_code == 2);
        const json err = json::parse(r.err);
        CHECK(err["error"]["message"].get<std::string>().find("system.g_1_hz") !=
              std::string::npos);
    }
}

TEST_CASE("pipeline errors exit with code 3 and a typed record") {
    json doc = baseline_config();
    doc["command"] = "tcrit";
    doc["tcrit"] = {{"t_low_k", 0.5}, {"t_high_k", 0.005}, {"tol_k", 1e-3}};
    const std::string path = write_config(doc, "inverted");
    const CliResult r = run_cli("tcrit --config " + path);
    CHECK(r.exit_code == 3);
    const json err = json::parse(r.err);
    CHECK(err["error"]["type"] == "bracket");
    CHECK_FALSE(err["error"]["message"].get<std::string>().empty());
}

TEST_SUITE_END();
