#include "emit.hpp"

#include <cmath>
#include <cstdio>

namespace magnomech::cli {

double round_sig(double value) {
    if (!std::isfinite(value)) {
        return value;
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return std::strtod(buffer, nullptr);
}

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

namespace {

void flatten_into(const nlohmann::json& value, const std::string& path,
                  std::vector<std::pair<std::string, std::string>>& out) {
    switch (value.type()) {
    case nlohmann::json::value_t::object:
        for (const auto& item : value.items()) {
            flatten_into(item.value(), path.empty() ? item.key() : path + "." + item.key(), out);
        }
        return;
    case nlohmann::json::value_t::array:
        for (size_t i = 0; i < value.size(); ++i) {
            flatten_into(value[i], path + "[" + std::to_string(i) + "]", out);
        }
        return;
    case nlohmann::json::value_t::null:
        out.emplace_back(path, "nan");
        return;
    case nlohmann::json::value_t::boolean:
        out.emplace_back(path, value.get<bool>() ? "true" : "false");
        return;
    case nlohmann::json::value_t::string:
        out.emplace_back(path, value.get<std::string>());
        return;
    default:
        out.emplace_back(path, format_number(value.get<double>()));
        return;
    }
}

} // namespace

std::vector<std::pair<std::string, std::string>> flatten(const nlohmann::json& value) {
    std::vector<std::pair<std::string, std::string>> out;
    flatten_into(value, "", out);
    return out;
}

std::string resolved_config_comment(const nlohmann::json& resolved) {
    return "# resolved_config: " + resolved.dump() + "\n";
}

} // namespace magnomech::cli
