#include "run_config.hpp"

#include "presets_data.hpp"

#include <magnomech/errors.hpp>
#include <magnomech/types.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace magnomech::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError("config error at '" + path + "': " + what);
}

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

const json& require_object(const json& j, const std::string& path) {
    if (!j.is_object()) {
        fail(path, "expected an object");
    }
    return j;
}

const json& require_key(const json& j, const std::string& path, const std::string& key) {
    if (!j.contains(key)) {
        fail(join(path, key), "missing required key");
    }
    return j.at(key);
}

double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) {
        fail(path, "expected a number");
    }
    return j.get<double>();
}

double require_number(const json& j, const std::string& path, const std::string& key) {
    return as_number(require_key(j, path, key), join(path, key));
}

double optional_number(const json& j, const std::string& path, const std::string& key,
                       double fallback) {
    return j.contains(key) ? as_number(j.at(key), join(path, key)) : fallback;
}

int require_integer(const json& j, const std::string& path, const std::string& key) {
    const json& v = require_key(j, path, key);
    if (!v.is_number_integer()) {
        fail(join(path, key), "expected an integer");
    }
    return v.get<int>();
}

std::string require_string(const json& j, const std::string& path, const std::string& key) {
    const json& v = require_key(j, path, key);
    if (!v.is_string()) {
        fail(join(path, key), "expected a string");
    }
    return v.get<std::string>();
}

bool optional_bool(const json& j, const std::string& path, const std::string& key,
                   bool fallback) {
    if (!j.contains(key)) {
        return fallback;
    }
    if (!j.at(key).is_boolean()) {
        fail(join(path, key), "expected a boolean");
    }
    return j.at(key).get<bool>();
}

void reject_unknown_keys(const json& j, const std::string& path,
                         const std::set<std::string>& known) {
    for (const auto& item : j.items()) {
        if (known.count(item.key()) == 0) {
            fail(join(path, item.key()), "unknown key");
        }
    }
}

Knob parse_knob(const std::string& name, const std::string& path) {
    for (const Knob knob : {Knob::DeltaA, Knob::Delta2, Knob::Delta1Tilde, Knob::G2OverG1,
                            Knob::GOverG1, Knob::Temperature, Knob::Kappa12}) {
        if (name == knob_name(knob)) {
            return knob;
        }
    }
    fail(path, "unknown knob '" + name +
                   "' (expected one of delta_a, delta_2, delta_1_tilde, g2_over_g1, "
                   "g_over_g1, temperature, kappa_12)");
}

LinkTarget parse_link_target(const std::string& name, const std::string& path) {
    if (name == "delta_2") {
        return LinkTarget::Delta2;
    }
    if (name == "kappa_a") {
        return LinkTarget::KappaA;
    }
    fail(path, "unknown link target '" + name + "' (expected delta_2 or kappa_a)");
}

std::string unit_key(const char* base, Knob knob) {
    const std::string unit = knob_unit(knob);
    return unit.empty() ? base : std::string(base) + "_" + unit;
}

double axis_endpoint(const json& j, const std::string& path, const char* base, Knob knob) {
    const std::string expected = unit_key(base, knob);
    if (!j.contains(expected)) {
        // Point at the exact key the knob needs, catching wrong-unit keys.
        for (const char* suffix : {"", "_hz", "_k"}) {
            if (j.contains(std::string(base) + suffix)) {
                fail(join(path, std::string(base) + suffix),
                     "wrong unit suffix for knob '" + std::string(knob_name(knob)) +
                         "'; expected key '" + expected + "'");
            }
        }
        fail(join(path, expected), "missing required key");
    }
    return as_number(j.at(expected), join(path, expected));
}

AxisConfig parse_axis(const json& j, const std::string& path) {
    require_object(j, path);
    AxisConfig axis;
    axis.knob = parse_knob(require_string(j, path, "knob"), join(path, "knob"));
    // Read the endpoints before rejecting stray keys so that a wrong unit
    // suffix gets the specific "expected key ..." diagnostic instead of a
    // generic unknown-key error.
    axis.start = axis_endpoint(j, path, "start", axis.knob);
    axis.stop = axis_endpoint(j, path, "stop", axis.knob);
    axis.points = require_integer(j, path, "points");
    reject_unknown_keys(j, path,
                        {"knob", "points", unit_key("start", axis.knob),
                         unit_key("stop", axis.knob)});
    if (axis.points < 1) {
        fail(join(path, "points"), "an axis needs at least one point");
    }
    return axis;
}

LinkConfig parse_link(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, path, {"target", "source", "factor"});
    LinkConfig link;
    link.target = parse_link_target(require_string(j, path, "target"), join(path, "target"));
    link.source = parse_knob(require_string(j, path, "source"), join(path, "source"));
    link.factor = optional_number(j, path, "factor", 1.0);
    return link;
}

SweepArgs parse_sweep(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, path, {"axes", "links", "quantity"});
    SweepArgs args;
    const json& axes = require_key(j, path, "axes");
    if (!axes.is_array() || axes.empty() || axes.size() > 2) {
        fail(join(path, "axes"), "expected an array of one or two axes");
    }
    for (size_t i = 0; i < axes.size(); ++i) {
        args.axes.push_back(parse_axis(axes[i], join(path, "axes[" + std::to_string(i) + "]")));
    }
    if (j.contains("links")) {
        const json& links = j.at("links");
        if (!links.is_array()) {
            fail(join(path, "links"), "expected an array");
        }
        for (size_t i = 0; i < links.size(); ++i) {
            args.links.push_back(
                parse_link(links[i], join(path, "links[" + std::to_string(i) + "]")));
        }
    }
    if (j.contains("quantity")) {
        args.quantity = require_string(j, path, "quantity");
        if (args.quantity != "log_negativity" && args.quantity != "critical_temperature") {
            fail(join(path, "quantity"),
                 "expected 'log_negativity' or 'critical_temperature'");
        }
    }
    return args;
}

SystemConfig parse_system(const json& j, const std::string& path) {
    require_object(j, path);
    reject_unknown_keys(j, path,
                        {"omega_a_hz", "omega_b_hz", "gamma_b_hz", "kappa_a_hz", "kappa_1_hz",
                         "kappa_2_hz", "g_1_hz", "g_2_hz", "delta_a_hz", "delta_2_hz",
                         "temperature_k", "g_0_hz", "sphere_diameter_m", "b_field_t", "drive"});
    SystemConfig sys;
    sys.omega_a_hz = require_number(j, path, "omega_a_hz");
    sys.omega_b_hz = require_number(j, path, "omega_b_hz");
    sys.gamma_b_hz = require_number(j, path, "gamma_b_hz");
    sys.kappa_a_hz = require_number(j, path, "kappa_a_hz");
    sys.kappa_1_hz = require_number(j, path, "kappa_1_hz");
    sys.kappa_2_hz = require_number(j, path, "kappa_2_hz");
    sys.g_1_hz = require_number(j, path, "g_1_hz");
    sys.g_2_hz = require_number(j, path, "g_2_hz");
    sys.delta_a_hz = require_number(j, path, "delta_a_hz");
    sys.delta_2_hz = require_number(j, path, "delta_2_hz");
    sys.temperature_k = require_number(j, path, "temperature_k");
    sys.g_0_hz = require_number(j, path, "g_0_hz");
    sys.sphere_diameter_m = optional_number(j, path, "sphere_diameter_m", 2.5e-4);
    sys.b_field_t = optional_number(j, path, "b_field_t", 3.9e-5);
    if (!(sys.sphere_diameter_m > 0.0)) {
        fail(join(path, "sphere_diameter_m"), "must be positive");
    }

    const std::string drive_path = join(path, "drive");
    const json& drive = require_object(require_key(j, path, "drive"), drive_path);
    const std::string type = require_string(drive, drive_path, "type");
    if (type == "effective") {
        reject_unknown_keys(drive, drive_path, {"type", "delta_1_tilde_hz", "g_eff_hz"});
        sys.drive_effective = true;
        sys.delta_1_tilde_hz = require_number(drive, drive_path, "delta_1_tilde_hz");
        sys.g_eff_hz = require_number(drive, drive_path, "g_eff_hz");
    } else if (type == "physical") {
        reject_unknown_keys(drive, drive_path,
                            {"type", "delta_1_hz", "rabi_rad_s", "from_b_field"});
        sys.drive_effective = false;
        sys.delta_1_hz = require_number(drive, drive_path, "delta_1_hz");
        sys.rabi_from_b_field = optional_bool(drive, drive_path, "from_b_field", false);
        if (sys.rabi_from_b_field) {
            if (drive.contains("rabi_rad_s")) {
                fail(join(drive_path, "rabi_rad_s"),
                     "give either rabi_rad_s or from_b_field, not both");
            }
        } else {
            sys.rabi_rad_s = require_number(drive, drive_path, "rabi_rad_s");
        }
    } else {
        fail(join(drive_path, "type"), "expected 'effective' or 'physical'");
    }
    return sys;
}

} // namespace

namespace {

RunConfig parse_config_impl(const json& doc) {
    const std::string root;
    require_object(doc, root);
    reject_unknown_keys(doc, root,
                        {"schema_version", "command", "system", "pair", "sweep", "tcurve",
                         "tcrit", "output", "threads"});
    if (doc.contains("schema_version")) {
        const int version = require_integer(doc, root, "schema_version");
        if (version != 1) {
            fail(join(root, "schema_version"), "unsupported schema version");
        }
    }

    RunConfig config;
    if (doc.contains("command")) {
        config.command = require_string(doc, root, "command");
    }
    const std::set<std::string> commands{"point", "sweep", "tcurve", "tcrit", "audit"};
    if (commands.count(config.command) == 0) {
        fail(join(root, "command"), "unknown command '" + config.command +
                                        "' (expected point, sweep, tcurve, tcrit, or audit)");
    }

    config.system = parse_system(require_key(doc, root, "system"), join(root, "system"));

    if (doc.contains("pair")) {
        config.pair = require_string(doc, root, "pair");
        parse_pair(config.pair);  // validates
    }

    if (doc.contains("sweep")) {
        config.sweep = parse_sweep(doc.at("sweep"), join(root, "sweep"));
    } else if (config.command == "sweep") {
        fail(join(root, "sweep"), "missing required key for the sweep command");
    }

    if (doc.contains("tcurve")) {
        const std::string path = join(root, "tcurve");
        const json& t = require_object(doc.at("tcurve"), path);
        reject_unknown_keys(t, path, {"temperatures_k"});
        const json& temps = require_key(t, path, "temperatures_k");
        if (!temps.is_array() || temps.empty()) {
            fail(join(path, "temperatures_k"), "expected a non-empty array");
        }
        for (size_t i = 0; i < temps.size(); ++i) {
            const std::string item_path = join(path, "temperatures_k[" + std::to_string(i) + "]");
            const double t = as_number(temps[i], item_path);
            if (!(t >= 0.0)) {
                fail(item_path, "temperatures must be non-negative");
            }
            if (i > 0 && t <= config.tcurve.temperatures_k.back()) {
                fail(item_path, "temperatures must be strictly ascending");
            }
            config.tcurve.temperatures_k.push_back(t);
        }
    } else if (config.command == "tcurve") {
        fail(join(root, "tcurve"), "missing required key for the tcurve command");
    }

    if (doc.contains("tcrit")) {
        const std::string path = join(root, "tcrit");
        const json& t = require_object(doc.at("tcrit"), path);
        reject_unknown_keys(t, path, {"t_low_k", "t_high_k", "tol_k"});
        config.tcrit.t_low_k = optional_number(t, path, "t_low_k", config.tcrit.t_low_k);
        config.tcrit.t_high_k = optional_number(t, path, "t_high_k", config.tcrit.t_high_k);
        config.tcrit.tol_k = optional_number(t, path, "tol_k", config.tcrit.tol_k);
    }

    if (doc.contains("output")) {
        const std::string path = join(root, "output");
        const json& out = require_object(doc.at("output"), path);
        reject_unknown_keys(out, path, {"format", "path"});
        if (out.contains("format")) {
            config.out_format = require_string(out, path, "format");
            if (config.out_format != "csv" && config.out_format != "json") {
                fail(join(path, "format"), "expected 'csv' or 'json'");
            }
        }
        if (out.contains("path")) {
            config.out_path = require_string(out, path, "path");
        }
    }

    if (doc.contains("threads")) {
        config.threads = require_integer(doc, root, "threads");
        if (config.threads < 1) {
            fail(join(root, "threads"), "must be at least 1");
        }
    }
    return config;
}

} // namespace

RunConfig parse_config(const json& doc, const std::string& origin) {
    try {
        return parse_config_impl(doc);
    } catch (const ConfigError& err) {
        throw ConfigError(std::string(err.what()) + " [" + origin + "]");
    }
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& err) {
        throw ConfigError("config file '" + path + "' is not valid JSON: " + err.what());
    }
    return parse_config(doc, path);
}

RunConfig load_preset(const std::string& name) {
    for (const auto& entry : generated::preset_table) {
        if (entry.name == name) {
            return parse_config(json::parse(entry.content), "preset:" + std::string(name));
        }
    }
    std::ostringstream msg;
    msg << "unknown preset '" << name << "' (available:";
    for (const std::string& known : preset_names()) {
        msg << " " << known;
    }
    msg << ")";
    throw ConfigError(msg.str());
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    names.reserve(generated::preset_table.size());
    for (const auto& entry : generated::preset_table) {
        names.emplace_back(entry.name);
    }
    std::sort(names.begin(), names.end());
    return names;
}

SystemParams to_system_params(const SystemConfig& config) {
    SystemParams params;
    params.omega_a = two_pi * config.omega_a_hz;
    params.omega_b = two_pi * config.omega_b_hz;
    params.gamma_b = two_pi * config.gamma_b_hz;
    params.kappa_a = two_pi * config.kappa_a_hz;
    params.kappa_1 = two_pi * config.kappa_1_hz;
    params.kappa_2 = two_pi * config.kappa_2_hz;
    params.g_1 = two_pi * config.g_1_hz;
    params.g_2 = two_pi * config.g_2_hz;
    params.delta_a = two_pi * config.delta_a_hz;
    params.delta_2 = two_pi * config.delta_2_hz;
    params.temperature = config.temperature_k;
    params.g_0 = two_pi * config.g_0_hz;
    params.b_field = config.b_field_t;
    params.sphere = derive_sphere(config.sphere_diameter_m);

    // A dissipation rate above the mechanical frequency in a config file is
    // almost always an angular value pasted into a cycles/s key.
    const struct { const char* key; double value; } kappas[] = {
        {"kappa_a_hz", config.kappa_a_hz},
        {"kappa_1_hz", config.kappa_1_hz},
        {"kappa_2_hz", config.kappa_2_hz},
    };
    for (const auto& [key, value] : kappas) {
        if (value > config.omega_b_hz) {
            throw ConfigError(std::string("config error at 'system.") + key +
                              "': dissipation rate exceeds the mechanical frequency; "
                              "check the units (keys ending in _hz take frequency/2pi)");
        }
    }

    if (config.drive_effective) {
        params.drive = EffectiveDrive{two_pi * config.delta_1_tilde_hz, two_pi * config.g_eff_hz};
    } else {
        const double rabi = config.rabi_from_b_field
                                ? rabi_frequency(config.b_field_t, params.sphere, params.constants)
                                : config.rabi_rad_s;
        params.drive = PhysicalDrive{two_pi * config.delta_1_hz, rabi};
    }
    return params;
}

ModePair parse_pair(const std::string& name) {
    const auto dash = name.find('-');
    if (dash == std::string::npos) {
        throw ConfigError("invalid mode pair '" + name +
                          "': expected '<mode>-<mode>' with modes cavity, magnon1, magnon2, "
                          "mechanics");
    }
    const std::string first = name.substr(0, dash);
    const std::string second = name.substr(dash + 1);
    const auto lookup = [&](const std::string& part) -> Mode {
        for (const Mode mode :
             {Mode::Cavity, Mode::Magnon1, Mode::Magnon2, Mode::Mechanics}) {
            if (part == mode_name(mode)) {
                return mode;
            }
        }
        throw ConfigError("invalid mode name '" + part +
                          "' in pair '" + name +
                          "' (expected cavity, magnon1, magnon2, or mechanics)");
    };
    const ModePair pair{lookup(first), lookup(second)};
    if (pair.first == pair.second) {
        throw ConfigError("invalid mode pair '" + name + "': the two modes must differ");
    }
    return pair;
}

std::string pair_name(ModePair pair) {
    return std::string(mode_name(pair.first)) + "-" + mode_name(pair.second);
}

const char* knob_unit(Knob knob) {
    switch (knob) {
    case Knob::DeltaA:
    case Knob::Delta2:
    case Knob::Delta1Tilde:
    case Knob::Kappa12:
        return "hz";
    case Knob::Temperature:
        return "k";
    case Knob::G2OverG1:
    case Knob::GOverG1:
        return "";
    }
    return "";
}

AxisSpec to_axis_spec(const AxisConfig& axis) {
    const bool angular = std::string(knob_unit(axis.knob)) == "hz";
    const double scale = angular ? two_pi : 1.0;
    return AxisSpec{axis.knob, scale * axis.start, scale * axis.stop, axis.points};
}

std::string axis_label(const AxisConfig& axis) {
    return unit_key(knob_name(axis.knob), axis.knob);
}

nlohmann::json config_to_json(const RunConfig& config) {
    json system{
        {"omega_a_hz", config.system.omega_a_hz},
        {"omega_b_hz", config.system.omega_b_hz},
        {"gamma_b_hz", config.system.gamma_b_hz},
        {"kappa_a_hz", config.system.kappa_a_hz},
        {"kappa_1_hz", config.system.kappa_1_hz},
        {"kappa_2_hz", config.system.kappa_2_hz},
        {"g_1_hz", config.system.g_1_hz},
        {"g_2_hz", config.system.g_2_hz},
        {"delta_a_hz", config.system.delta_a_hz},
        {"delta_2_hz", config.system.delta_2_hz},
        {"temperature_k", config.system.temperature_k},
        {"g_0_hz", config.system.g_0_hz},
        {"sphere_diameter_m", config.system.sphere_diameter_m},
        {"b_field_t", config.system.b_field_t},
    };
    if (config.system.drive_effective) {
        system["drive"] = json{{"type", "effective"},
                               {"delta_1_tilde_hz", config.system.delta_1_tilde_hz},
                               {"g_eff_hz", config.system.g_eff_hz}};
    } else {
        json drive{{"type", "physical"}, {"delta_1_hz", config.system.delta_1_hz}};
        if (config.system.rabi_from_b_field) {
            drive["from_b_field"] = true;
        } else {
            drive["rabi_rad_s"] = config.system.rabi_rad_s;
        }
        system["drive"] = drive;
    }

    json doc{
        {"schema_version", 1},
        {"command", config.command},
        {"system", system},
        {"pair", config.pair},
        {"threads", config.threads},
    };

    if (!config.sweep.axes.empty()) {
        json axes = json::array();
        for (const AxisConfig& axis : config.sweep.axes) {
            json a{{"knob", knob_name(axis.knob)}, {"points", axis.points}};
            a[unit_key("start", axis.knob)] = axis.start;
            a[unit_key("stop", axis.knob)] = axis.stop;
            axes.push_back(a);
        }
        json sweep{{"axes", axes}, {"quantity", config.sweep.quantity}};
        if (!config.sweep.links.empty()) {
            json links = json::array();
            for (const LinkConfig& link : config.sweep.links) {
                links.push_back(
                    json{{"target", link.target == LinkTarget::Delta2 ? "delta_2" : "kappa_a"},
                         {"source", knob_name(link.source)},
                         {"factor", link.factor}});
            }
            sweep["links"] = links;
        }
        doc["sweep"] = sweep;
    }
    if (!config.tcurve.temperatures_k.empty()) {
        doc["tcurve"] = json{{"temperatures_k", config.tcurve.temperatures_k}};
    }
    if (config.command == "tcrit" ||
        (config.command == "sweep" && config.sweep.quantity == "critical_temperature")) {
        doc["tcrit"] = json{{"t_low_k", config.tcrit.t_low_k},
                            {"t_high_k", config.tcrit.t_high_k},
                            {"tol_k", config.tcrit.tol_k}};
    }

    json output{{"format", config.out_format}};
    if (!config.out_path.empty()) {
        output["path"] = config.out_path;
    }
    doc["output"] = output;
    return doc;
}

} // namespace magnomech::cli
