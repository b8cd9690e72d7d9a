#pragma once

// Game configuration documents and strategy specifications.
//
//   {"doors": 3, "p": ["4/9", "3/9", "2/9"], "q": "fair", "labels": ["A", "B", "C"]}
//
// Anywhere a probability is expected, a JSON number or a string holding a
// decimal or an exact fraction "a/b" is accepted. "q" is either the keyword
// "fair" or an n x n matrix. "labels" is optional.

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "montyhall/core.hpp"

namespace montyhall {

struct GameConfig {
    int doors = 0;
    Prior prior;
    RevealMechanism reveal;
    std::vector<std::string> labels;  // empty when not configured

    /// "2" or "2 (B)" when labels are configured.
    [[nodiscard]] std::string door_name(Door d) const {
        if (labels.empty()) return std::to_string(d);
        return std::to_string(d) + " (" + labels.at(static_cast<std::size_t>(d - 1)) + ")";
    }
};

namespace detail {

inline std::optional<double> parse_decimal(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) return std::nullopt;
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size()) return std::nullopt;
    return value;
}

}  // namespace detail

/// "0.25", "1/4" and " 3 / 12 " all parse to 0.25.
inline std::optional<double> parse_probability(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return detail::parse_decimal(text);
    const auto num = detail::parse_decimal(text.substr(0, slash));
    const auto den = detail::parse_decimal(text.substr(slash + 1));
    if (!num || !den || *den == 0.0) return std::nullopt;
    return *num / *den;
}

namespace detail {

inline Error invalid(const std::string& path, const std::string& message) {
    return Error(ErrorCode::ValidationError, message, path);
}

inline double probability_field(const nlohmann::json& value, const std::string& path) {
    if (value.is_number()) return value.get<double>();
    if (value.is_string()) {
        if (auto v = parse_probability(value.get<std::string>())) return *v;
        throw invalid(path, "cannot read \"" + value.get<std::string>() + "\" as a number or fraction a/b");
    }
    throw invalid(path, "expected a number or a fraction string");
}

inline std::vector<double> probability_row(const nlohmann::json& value, const std::string& path) {
    if (!value.is_array()) throw invalid(path, "expected an array");
    std::vector<double> out;
    out.reserve(value.size());
    for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(probability_field(value[i], path + "[" + std::to_string(i + 1) + "]"));
    }
    return out;
}

/// Re-tags a core validation failure with the config field it came from.
template <class Fn>
auto forward_validation(Fn&& fn) {
    try {
        return fn();
    } catch (const Error& e) {
        throw Error(ErrorCode::ValidationError, e.what(), e.path());
    }
}

}  // namespace detail

inline GameConfig parse_config(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::ParseError, "config must be a JSON object");

    for (const auto& [key, _] : doc.items()) {
        if (key != "doors" && key != "p" && key != "q" && key != "labels") {
            throw detail::invalid(key, "unknown key");
        }
    }
    if (!doc.contains("doors")) throw detail::invalid("doors", "missing");
    if (!doc.contains("p")) throw detail::invalid("p", "missing");
    if (!doc.contains("q")) throw detail::invalid("q", "missing");

    const auto& doors_field = doc["doors"];
    if (!doors_field.is_number_integer()) throw detail::invalid("doors", "expected an integer");
    const int n = doors_field.get<int>();
    if (n < 3) throw detail::invalid("doors", "at least three doors are required");

    const std::vector<double> p = detail::probability_row(doc["p"], "p");
    if (p.size() != static_cast<std::size_t>(n)) {
        throw detail::invalid("p", "expected " + std::to_string(n) + " probabilities, got " + std::to_string(p.size()));
    }
    Prior prior = detail::forward_validation([&] { return make_prior(p); });

    const auto& q_field = doc["q"];
    std::optional<RevealMechanism> reveal;
    if (q_field.is_string()) {
        if (q_field.get<std::string>() != "fair") throw detail::invalid("q", "expected \"fair\" or a matrix");
        reveal = fair_reveal(n);
    } else {
        if (!q_field.is_array()) throw detail::invalid("q", "expected \"fair\" or a matrix");
        if (q_field.size() != static_cast<std::size_t>(n)) {
            throw detail::invalid("q", "expected " + std::to_string(n) + " rows, got " + std::to_string(q_field.size()));
        }
        std::vector<std::vector<double>> q;
        for (std::size_t x = 0; x < q_field.size(); ++x) {
            q.push_back(detail::probability_row(q_field[x], "q[" + std::to_string(x + 1) + "]"));
        }
        reveal = detail::forward_validation([&] { return make_reveal(q); });
    }

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        const auto& field = doc["labels"];
        if (!field.is_array() || field.size() != static_cast<std::size_t>(n)) {
            throw detail::invalid("labels", "expected an array of " + std::to_string(n) + " strings");
        }
        for (const auto& label : field) {
            if (!label.is_string()) throw detail::invalid("labels", "expected strings");
            labels.push_back(label.get<std::string>());
        }
    }
    return GameConfig{n, std::move(prior), std::move(*reveal), std::move(labels)};
}

/// Strategy specification: "x=K,switch", "x=K,match" or "x=K,a=SYMBOLS" where
/// SYMBOLS has one "sw"/"ma" per offered door in ascending order. Malformed
/// text is a ParseError; a well-formed spec that does not fit the door count
/// is a ValidationError.
inline Strategy parse_strategy_spec(std::string_view spec, DoorSet doors) {
    auto malformed = [&] {
        return Error(ErrorCode::ParseError,
                     "strategy must look like x=K,switch | x=K,match | x=K,a=swma..., got \"" + std::string(spec) +
                         "\"",
                     "strategy");
    };
    if (!spec.starts_with("x=")) throw malformed();
    const auto comma = spec.find(',');
    if (comma == std::string_view::npos) throw malformed();
    const std::string_view door_text = spec.substr(2, comma - 2);
    const std::string_view rest = spec.substr(comma + 1);

    int x = 0;
    const auto [end, ec] = std::from_chars(door_text.data(), door_text.data() + door_text.size(), x);
    if (ec != std::errc{} || end != door_text.data() + door_text.size()) throw malformed();
    if (!doors.contains(x)) {
        throw Error(ErrorCode::ValidationError, "door " + std::to_string(x) + " is not in 1.." +
                                                    std::to_string(doors.count()),
                    "strategy");
    }

    if (rest == "switch") return Strategy::always_switch(doors, x);
    if (rest == "match") return Strategy::always_match(doors, x);
    if (!rest.starts_with("a=")) throw malformed();
    const std::string_view symbols = rest.substr(2);
    if (symbols.size() % 2 != 0) throw malformed();
    std::vector<Action> actions;
    for (std::size_t i = 0; i < symbols.size(); i += 2) {
        const std::string_view sym = symbols.substr(i, 2);
        if (sym == "sw") {
            actions.push_back(Action::Switch);
        } else if (sym == "ma") {
            actions.push_back(Action::Match);
        } else {
            throw malformed();
        }
    }
    if (actions.size() != static_cast<std::size_t>(doors.count() - 1)) {
        throw Error(ErrorCode::ValidationError, "expected " + std::to_string(doors.count() - 1) +
                                                    " actions, got " + std::to_string(actions.size()),
                    "strategy");
    }
    return Strategy(DecisionFunction::from_sequence(doors, x, std::move(actions)));
}

}  // namespace montyhall
