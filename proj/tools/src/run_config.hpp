#pragma once

#include <magnomech/params.hpp>
#include <magnomech/sweep.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace magnomech::cli {

/// Configuration or command-line content that cannot be acted on. Carries the
/// offending key path in the message.
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One sweep axis in external units (frequencies as cycles/s, temperature in
/// K, coupling ratios dimensionless).
struct AxisConfig {
    Knob knob = Knob::DeltaA;
    double start = 0.0;
    double stop = 0.0;
    int points = 2;
};

struct LinkConfig {
    LinkTarget target = LinkTarget::Delta2;
    Knob source = Knob::DeltaA;
    double factor = 1.0;
};

struct SweepArgs {
    std::vector<AxisConfig> axes{};
    std::vector<LinkConfig> links{};
    std::string quantity = "log_negativity";  ///< or "critical_temperature"
};

struct TcurveArgs {
    std::vector<double> temperatures_k{};
};

struct TcritArgs {
    double t_low_k = 0.005;
    double t_high_k = 0.5;
    double tol_k = 1e-3;
};

/// System block exactly as configured, in external units: every *_hz value is
/// a frequency divided by 2*pi. Kept verbatim so that echoing the resolved
/// configuration and reloading it is bit-identical.
struct SystemConfig {
    double omega_a_hz = 0.0;
    double omega_b_hz = 0.0;
    double gamma_b_hz = 0.0;
    double kappa_a_hz = 0.0;
    double kappa_1_hz = 0.0;
    double kappa_2_hz = 0.0;
    double g_1_hz = 0.0;
    double g_2_hz = 0.0;
    double delta_a_hz = 0.0;
    double delta_2_hz = 0.0;
    double temperature_k = 0.0;
    double g_0_hz = 0.0;
    double sphere_diameter_m = 2.5e-4;
    double b_field_t = 3.9e-5;

    bool drive_effective = true;
    double delta_1_tilde_hz = 0.0;  ///< effective drive
    double g_eff_hz = 0.0;          ///< effective drive
    double delta_1_hz = 0.0;        ///< physical drive
    double rabi_rad_s = 0.0;        ///< physical drive (angular units)
    bool rabi_from_b_field = false; ///< physical drive: derive rabi from b_field_t
};

/// Fully resolved run description: what to compute, on which system, and how
/// to emit it.
struct RunConfig {
    std::string command = "point";  ///< point | sweep | tcurve | tcrit | audit
    SystemConfig system{};
    std::string pair = "magnon1-magnon2";
    SweepArgs sweep{};
    TcurveArgs tcurve{};
    TcritArgs tcrit{};
    std::string out_format = "csv";  ///< csv | json
    std::string out_path{};          ///< empty = stdout
    int threads = 1;
};

/// Parses a configuration document. `origin` names the source (file path or
/// preset name) for error messages.
RunConfig parse_config(const nlohmann::json& doc, const std::string& origin);

/// Loads and parses a configuration file.
RunConfig load_config(const std::string& path);

/// Returns the embedded preset of that name.
/// Throws ConfigError for unknown names (message lists the known ones).
RunConfig load_preset(const std::string& name);

/// Names of the embedded presets, sorted.
std::vector<std::string> preset_names();

/// Converts the external-unit system block into internal SystemParams
/// (frequencies multiplied by 2*pi; the one conversion site).
/// Throws ConfigError on sanity violations (e.g. a dissipation rate above the
/// mechanical frequency, which indicates mixed-up units).
SystemParams to_system_params(const SystemConfig& config);

/// Mode pair from its config name, e.g. "magnon1-magnon2".
ModePair parse_pair(const std::string& name);
std::string pair_name(ModePair pair);

/// Axis in internal units for the sweep engine.
AxisSpec to_axis_spec(const AxisConfig& axis);

/// Key suffix documenting the external unit of a knob's axis values:
/// "hz" for frequencies, "k" for temperature, "" for dimensionless ratios.
const char* knob_unit(Knob knob);

/// Column label for an axis in external units, e.g. "delta_a_hz".
std::string axis_label(const AxisConfig& axis);

/// Serializes the resolved configuration back to a document that reloads to
/// identical results.
nlohmann::json config_to_json(const RunConfig& config);

} // namespace magnomech::cli
