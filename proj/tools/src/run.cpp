#include "run.hpp"

#include "emit.hpp"

#include <magnomech/magnomech.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace magnomech::cli {

namespace {

using nlohmann::json;

/// Axis value at index i in external units, mirroring AxisSpec::value_at.
double axis_ext_value(const AxisConfig& axis, int i) {
    if (axis.points == 1) {
        return axis.start;
    }
    return axis.start +
           (axis.stop - axis.start) * static_cast<double>(i) / static_cast<double>(axis.points - 1);
}

json amplitudes_json(const ModeAmplitudes& amplitudes) {
    return json{
        {"a_re", round_sig(amplitudes.a_avg.real())},
        {"a_im", round_sig(amplitudes.a_avg.imag())},
        {"m1_re", round_sig(amplitudes.m1_avg.real())},
        {"m1_im", round_sig(amplitudes.m1_avg.imag())},
        {"m2_re", round_sig(amplitudes.m2_avg.real())},
        {"m2_im", round_sig(amplitudes.m2_avg.imag())},
        {"q", round_sig(amplitudes.q_avg)},
        {"p", round_sig(amplitudes.p_avg)},
        {"delta_1_tilde_rad_s", round_sig(amplitudes.delta_1_tilde)},
        {"g_eff_rad_s", round_sig(amplitudes.g_eff)},
        {"gauge_phase_rad", round_sig(amplitudes.gauge_phase)},
        {"rabi_rad_s", round_sig(amplitudes.rabi)},
    };
}

json validity_json(const ValidityReport& validity) {
    return json{
        {"excitation_ratio_1", round_sig(validity.excitation_ratio_1)},
        {"excitation_ratio_2", round_sig(validity.excitation_ratio_2)},
        {"kerr_ratio", round_sig(validity.kerr_ratio)},
        {"markov_q", round_sig(validity.markov_q)},
        {"stable", validity.stable},
        {"max_re_eig_rad_s", round_sig(validity.max_re_eig)},
        {"excitation_ok", validity.excitation_ok},
        {"kerr_ok", validity.kerr_ok},
        {"all_ok", validity.all_ok()},
    };
}

json entanglement_json(const std::array<EntanglementResult, 6>& pairs) {
    json list = json::array();
    for (const EntanglementResult& entry : pairs) {
        list.push_back(json{{"pair", pair_name(entry.pair)},
                            {"nu_minus", round_sig(entry.nu_minus)},
                            {"log_negativity", round_sig(entry.log_negativity)},
                            {"entangled", entry.entangled}});
    }
    return list;
}

json point_json(const PointResult& point) {
    json eig_re = json::array();
    json eig_im = json::array();
    for (const Complex& eig : point.stability.eigenvalues) {
        eig_re.push_back(round_sig(eig.real()));
        eig_im.push_back(round_sig(eig.imag()));
    }
    json result{
        {"amplitudes", amplitudes_json(point.amplitudes)},
        {"stability",
         json{{"stable", point.stability.stable},
              {"max_re_eig_rad_s", round_sig(point.stability.max_re_eig)},
              {"eigenvalues_re_rad_s", eig_re},
              {"eigenvalues_im_rad_s", eig_im}}},
        {"validity", validity_json(point.validity)},
        {"warnings", point.amplitudes.warnings},
    };
    if (point.pairs.has_value()) {
        result["entanglement"] = entanglement_json(*point.pairs);
        json diag = json::array();
        for (int i = 0; i < 8; ++i) {
            diag.push_back(round_sig(point.covariance->entries(i, i)));
        }
        result["covariance_diag"] = diag;
    }
    return result;
}

json run_point(const RunConfig& config) {
    const SystemParams params = to_system_params(config.system);
    return point_json(evaluate_point(params));
}

json run_audit(const RunConfig& config) {
    const SystemParams params = to_system_params(config.system);
    const PointResult point = evaluate_point(params);
    const double rabi_b = rabi_frequency(config.system.b_field_t, params.sphere, params.constants);
    const double m1_abs = std::abs(point.amplitudes.m1_avg);
    json derived{
        {"sphere_volume_m3", round_sig(params.sphere.volume)},
        {"n_spins", round_sig(params.sphere.n_spins)},
        {"kerr_coeff_rad_s", round_sig(params.sphere.kerr_coeff)},
        {"kerr_coeff_hz", round_sig(params.sphere.kerr_coeff / two_pi)},
        {"rabi_from_b_field_rad_s", round_sig(rabi_b)},
        {"m1_abs", round_sig(m1_abs)},
        {"m1_occupation", round_sig(m1_abs * m1_abs)},
        {"kerr_shift_rad_s", round_sig(params.sphere.kerr_coeff * m1_abs * m1_abs * m1_abs)},
    };
    return json{{"derived", derived},
                {"amplitudes", amplitudes_json(point.amplitudes)},
                {"validity", validity_json(point.validity)},
                {"warnings", point.amplitudes.warnings}};
}

json run_sweep(const RunConfig& config) {
    const SystemParams params = to_system_params(config.system);
    const ModePair pair = parse_pair(config.pair);
    std::vector<AxisSpec> axes;
    for (const AxisConfig& axis : config.sweep.axes) {
        axes.push_back(to_axis_spec(axis));
    }
    std::vector<ParamLink> links;
    for (const LinkConfig& link : config.sweep.links) {
        links.push_back(ParamLink{link.target, link.source, link.factor});
    }

    json axes_json = json::array();
    for (const AxisConfig& axis : config.sweep.axes) {
        json values = json::array();
        for (int i = 0; i < axis.points; ++i) {
            values.push_back(round_sig(axis_ext_value(axis, i)));
        }
        const char* unit = knob_unit(axis.knob);
        axes_json.push_back(json{{"knob", knob_name(axis.knob)},
                                 {"unit", *unit ? unit : "dimensionless"},
                                 {"values", values}});
    }

    json result{{"pair", config.pair}, {"quantity", config.sweep.quantity}, {"axes", axes_json}};

    if (config.sweep.quantity == "critical_temperature") {
        if (axes.size() != 1) {
            throw ConfigError("config error at 'sweep.axes': critical_temperature sweeps "
                              "take exactly one axis");
        }
        const std::vector<double> tc =
            critical_temperature_sweep(params, axes[0], pair, links, config.tcrit.t_low_k,
                                       config.tcrit.t_high_k, config.tcrit.tol_k);
        json values = json::array();
        for (const double v : tc) {
            values.push_back(round_sig(v));
        }
        result["values"] = values;
        result["bracket"] = json{{"t_low_k", config.tcrit.t_low_k},
                                 {"t_high_k", config.tcrit.t_high_k},
                                 {"tol_k", config.tcrit.tol_k}};
        return result;
    }

    const SweepResult grid = sweep(params, axes, pair, links, config.threads);
    if (grid.cols() == 1 && axes.size() == 1) {
        json values = json::array();
        json flags = json::array();
        for (int i = 0; i < grid.rows(); ++i) {
            values.push_back(round_sig(grid.at(i, 0)));
            flags.push_back(grid.validity_flags[static_cast<size_t>(i)] != 0);
        }
        result["values"] = values;
        result["validity_flags"] = flags;
    } else {
        json values = json::array();
        json flags = json::array();
        for (int i = 0; i < grid.rows(); ++i) {
            json row = json::array();
            json flag_row = json::array();
            for (int j = 0; j < grid.cols(); ++j) {
                row.push_back(round_sig(grid.at(i, j)));
                flag_row.push_back(
                    grid.validity_flags[static_cast<size_t>(i) * grid.cols() + j] != 0);
            }
            values.push_back(row);
            flags.push_back(flag_row);
        }
        result["values"] = values;
        result["validity_flags"] = flags;
    }
    return result;
}

json run_tcurve(const RunConfig& config) {
    const SystemParams params = to_system_params(config.system);
    const ModePair pair = parse_pair(config.pair);
    const std::vector<double> curve =
        temperature_curve(params, config.tcurve.temperatures_k, pair);
    json temps = json::array();
    json values = json::array();
    for (size_t i = 0; i < curve.size(); ++i) {
        temps.push_back(round_sig(config.tcurve.temperatures_k[i]));
        values.push_back(round_sig(curve[i]));
    }
    return json{{"pair", config.pair},
                {"temperatures_k", temps},
                {"log_negativity", values}};
}

json run_tcrit(const RunConfig& config) {
    const SystemParams params = to_system_params(config.system);
    const ModePair pair = parse_pair(config.pair);
    const double tc = critical_temperature(params, pair, config.tcrit.t_low_k,
                                           config.tcrit.t_high_k, config.tcrit.tol_k);
    return json{{"pair", config.pair},
                {"critical_temperature_k", round_sig(tc)},
                {"t_low_k", config.tcrit.t_low_k},
                {"t_high_k", config.tcrit.t_high_k},
                {"tol_k", config.tcrit.tol_k}};
}

std::string render_csv(const RunConfig& config, const json& resolved, const json& result) {
    std::ostringstream out;
    out << resolved_config_comment(resolved);

    if (config.command == "sweep") {
        const json& axes = result.at("axes");
        const json& values = result.at("values");
        const std::string quantity = config.sweep.quantity == "critical_temperature"
                                         ? "critical_temperature_k"
                                         : "log_negativity";
        const auto cell = [](const json& v) {
            return v.is_null() ? std::string("nan") : format_number(v.get<double>());
        };
        if (axes.size() == 1) {
            out << axis_label(config.sweep.axes[0]) << "," << quantity << "\n";
            const json& axis_values = axes[0].at("values");
            for (size_t i = 0; i < values.size(); ++i) {
                out << format_number(axis_values[i].get<double>()) << "," << cell(values[i])
                    << "\n";
            }
        } else {
            out << axis_label(config.sweep.axes[0]) << "\\" << axis_label(config.sweep.axes[1]);
            for (const json& v : axes[1].at("values")) {
                out << "," << format_number(v.get<double>());
            }
            out << "\n";
            const json& axis0_values = axes[0].at("values");
            for (size_t i = 0; i < values.size(); ++i) {
                out << format_number(axis0_values[i].get<double>());
                for (const json& v : values[i]) {
                    out << "," << cell(v);
                }
                out << "\n";
            }
        }
        return out.str();
    }

    if (config.command == "tcurve") {
        out << "temperature_k,log_negativity\n";
        const json& temps = result.at("temperatures_k");
        const json& values = result.at("log_negativity");
        for (size_t i = 0; i < temps.size(); ++i) {
            out << format_number(temps[i].get<double>()) << ","
                << format_number(values[i].get<double>()) << "\n";
        }
        return out.str();
    }

    out << "key,value\n";
    for (const auto& [key, value] : flatten(result)) {
        out << key << "," << value << "\n";
    }
    return out.str();
}

} // namespace

RunOutput run_command(const RunConfig& config) {
    json result;
    if (config.command == "point") {
        result = run_point(config);
    } else if (config.command == "sweep") {
        result = run_sweep(config);
    } else if (config.command == "tcurve") {
        result = run_tcurve(config);
    } else if (config.command == "tcrit") {
        result = run_tcrit(config);
    } else if (config.command == "audit") {
        result = run_audit(config);
    } else {
        throw ConfigError("unknown command '" + config.command + "'");
    }

    const json resolved = config_to_json(config);
    RunOutput output;
    output.document = json{{"schema_version", 1},
                           {"command", config.command},
                           {"resolved_config", resolved},
                           {"result", result}};
    if (config.out_format == "json") {
        output.rendered = output.document.dump(2) + "\n";
    } else {
        output.rendered = render_csv(config, resolved, result);
    }
    return output;
}

int run_and_write(const RunConfig& config) {
    const RunOutput output = run_command(config);
    if (config.out_path.empty()) {
        std::cout << output.rendered;
        std::cout.flush();
        return 0;
    }
    std::ofstream out(config.out_path);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + config.out_path + "'");
    }
    out << output.rendered;
    if (!out) {
        throw std::runtime_error("failed writing output file '" + config.out_path + "'");
    }
    return 0;
}

} // namespace magnomech::cli
