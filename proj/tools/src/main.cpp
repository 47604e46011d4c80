#include "run.hpp"
#include "run_config.hpp"

#include <magnomech/errors.hpp>

#include <CLI/CLI.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <stdexcept>
#include <string>

namespace {

using magnomech::cli::ConfigError;
using magnomech::cli::RunConfig;

void emit_error_record(const std::string& type, const std::string& message) {
    std::cerr << nlohmann::json{{"error", {{"type", type}, {"message", message}}}}.dump() << "\n";
}

struct CliOptions {
    std::string config_path;
    std::string preset;
    std::string out_path;
    std::string format;
    int threads = -1;  // -1: not given, keep the config's value
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Steady-state Gaussian correlations and magnon-magnon entanglement of a "
                 "driven four-mode cavity magnomechanical system"};
    app.require_subcommand(1);

    CliOptions options;
    const struct {
        const char* name;
        const char* description;
    } commands[] = {
        {"point", "Full report (amplitudes, stability, entanglement, validity) at one "
                  "operating point"},
        {"sweep", "Log-negativity or critical temperature over a 1- or 2-axis grid"},
        {"tcurve", "Log-negativity at each listed temperature"},
        {"tcrit", "Critical temperature located by bisection"},
        {"audit", "Validity audit: excitation, Kerr, Markov, and stability checks"},
    };
    for (const auto& command : commands) {
        CLI::App* sub = app.add_subcommand(command.name, command.description);
        sub->add_option("--config", options.config_path, "Path to a JSON run configuration");
        std::string preset_help = "Embedded preset name (";
        bool first = true;
        for (const std::string& name : magnomech::cli::preset_names()) {
            preset_help += (first ? "" : ", ") + name;
            first = false;
        }
        preset_help += ")";
        sub->add_option("--preset", options.preset, preset_help);
        sub->add_option("--out", options.out_path, "Output file path (default: stdout)");
        sub->add_option("--format", options.format, "Output format")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--threads", options.threads, "Worker threads for sweep grids")
            ->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return 1;
    }

    try {
        const bool have_config = !options.config_path.empty();
        const bool have_preset = !options.preset.empty();
        if (have_config == have_preset) {
            throw ConfigError("give exactly one of --config <path> or --preset <name>");
        }
        RunConfig config = have_config ? magnomech::cli::load_config(options.config_path)
                                       : magnomech::cli::load_preset(options.preset);

        config.command = app.get_subcommands().front()->get_name();
        if (!options.out_path.empty()) {
            config.out_path = options.out_path;
        }
        if (!options.format.empty()) {
            config.out_format = options.format;
        }
        if (options.threads > 0) {
            config.threads = options.threads;
        }
        return magnomech::cli::run_and_write(config);
    } catch (const ConfigError& err) {
        emit_error_record("config", err.what());
        return 2;
    } catch (const magnomech::BracketError& err) {
        emit_error_record("bracket", err.what());
        return 3;
    } catch (const magnomech::SingularConfigurationError& err) {
        emit_error_record("singular_configuration", err.what());
        return 3;
    } catch (const magnomech::InconsistentParametersError& err) {
        emit_error_record("inconsistent_parameters", err.what());
        return 3;
    } catch (const magnomech::ConvergenceError& err) {
        emit_error_record("convergence", err.what());
        return 3;
    } catch (const magnomech::StabilityError& err) {
        emit_error_record("stability", err.what());
        return 3;
    } catch (const magnomech::NumericalError& err) {
        emit_error_record("numerical", err.what());
        return 3;
    } catch (const std::domain_error& err) {
        emit_error_record("domain", err.what());
        return 3;
    } catch (const std::exception& err) {
        emit_error_record("runtime", err.what());
        return 3;
    }
}
