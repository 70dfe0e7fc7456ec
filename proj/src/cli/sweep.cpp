#include <charconv>
#include <string>

#include "ptosc/cli.hpp"

namespace ptosc::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

double to_double(std::string_view s) {
    s = trim(s);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError("not a number: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

std::vector<double> parse_values(std::string_view text) {
    text = trim(text);
    if (text.find(':') != std::string_view::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) throw ConfigError("range must be min:max:steps, got '" + std::string(text) + "'");
        const double lo = to_double(parts[0]);
        const double hi = to_double(parts[1]);
        const double steps_d = to_double(parts[2]);
        if (steps_d < 2 || steps_d != static_cast<double>(static_cast<long long>(steps_d))) {
            throw ConfigError("range steps must be an integer >= 2");
        }
        if (!(lo < hi)) throw ConfigError("range requires min < max");
        const auto steps = static_cast<std::size_t>(steps_d);
        std::vector<double> out(steps);
        for (std::size_t k = 0; k < steps; ++k) {
            out[k] = k + 1 == steps ? hi : lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
        }
        return out;
    }
    std::vector<double> out;
    for (auto part : split(text, ',')) out.push_back(to_double(part));
    return out;
}

std::vector<Method> parse_methods(std::string_view text) {
    std::vector<Method> out;
    for (auto part : split(text, ',')) {
        if (part == "closed_form" || part == "closed-form") {
            out.push_back(Method::closed_form);
        } else if (part == "trace") {
            out.push_back(Method::trace);
        } else if (part == "hermitian") {
            out.push_back(Method::hermitian);
        } else if (part == "naive_continuation" || part == "naive") {
            out.push_back(Method::naive_continuation);
        } else {
            throw ConfigError("unknown method '" + std::string(part) + "'");
        }
    }
    if (out.empty()) throw ConfigError("no methods given");
    return out;
}

RawParams parse_raw_params(std::string_view text) {
    const auto parts = split(trim(text), ',');
    if (parts.size() != 4) throw ConfigError("--raw-params expects m1sq,m2sq,musq,p");
    return {to_double(parts[0]), to_double(parts[1]), to_double(parts[2]), to_double(parts[3])};
}

std::map<std::string, std::string> parse_config_text(std::string_view text) {
    std::map<std::string, std::string> out;
    std::size_t line_no = 0;
    for (auto line : split(text, '\n')) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = trim(line.substr(0, hash));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
        out[std::string(key)] = std::string(value);
    }
    return out;
}

}  // namespace ptosc::cli
