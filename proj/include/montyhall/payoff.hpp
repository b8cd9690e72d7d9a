#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "montyhall/core.hpp"

namespace montyhall {

/// Win-or-nothing payoff: matching wins iff the first choice hides the
/// prize, switching wins iff it does not.
struct WinOrNothing {
    constexpr int operator()(Door theta, Door x, Action action) const noexcept {
        return action == Action::Match ? static_cast<int>(x == theta) : static_cast<int>(x != theta);
    }
};

/// A payoff rule is anything callable as rule(theta, x, action) -> 0/1.
template <class Rule>
concept PayoffRule = requires(const Rule& rule, Door d, Action a) {
    { rule(d, d, a) } -> std::convertible_to<int>;
};

constexpr int win_payoff(Door theta, Door x, Action action) noexcept { return WinOrNothing{}(theta, x, action); }

/// On a mismatch the offered door is the prize door; on a match it is sc.w.
template <PayoffRule Rule = WinOrNothing>
int scenario_payoff(const Strategy& s, const Scenario& sc, const Rule& rule = {}) {
    const Door offered = s.x() == sc.theta ? sc.w : sc.theta;
    return rule(sc.theta, s.x(), s.action(offered));
}

class PayoffTable {
public:
    PayoffTable(std::vector<Strategy> rows, std::vector<Scenario> cols, std::vector<std::uint8_t> cells)
        : rows_(std::move(rows)), cols_(std::move(cols)), cells_(std::move(cells)) {}

    [[nodiscard]] const std::vector<Strategy>& rows() const noexcept { return rows_; }
    [[nodiscard]] const std::vector<Scenario>& cols() const noexcept { return cols_; }

    [[nodiscard]] int at(std::size_t row, std::size_t col) const { return cells_.at(row * cols_.size() + col); }

    [[nodiscard]] std::vector<int> row_cells(std::size_t row) const {
        std::vector<int> out(cols_.size());
        for (std::size_t j = 0; j < cols_.size(); ++j) out[j] = at(row, j);
        return out;
    }

    [[nodiscard]] int row_sum(std::size_t row) const {
        int sum = 0;
        for (std::size_t j = 0; j < cols_.size(); ++j) sum += at(row, j);
        return sum;
    }

private:
    std::vector<Strategy> rows_;
    std::vector<Scenario> cols_;
    std::vector<std::uint8_t> cells_;
};

template <PayoffRule Rule = WinOrNothing>
PayoffTable payoff_table(DoorSet doors, const Rule& rule = {}) {
    auto rows = enumerate_strategies(doors);
    auto cols = enumerate_scenarios(doors);
    std::vector<std::uint8_t> cells;
    cells.reserve(rows.size() * cols.size());
    for (const auto& s : rows) {
        for (const auto& sc : cols) cells.push_back(static_cast<std::uint8_t>(scenario_payoff(s, sc, rule)));
    }
    return PayoffTable(std::move(rows), std::move(cols), std::move(cells));
}

namespace detail {

inline void check_same_size(const Prior& prior, const RevealMechanism& reveal) {
    if (prior.size() != reveal.size()) {
        throw Error(ErrorCode::DimensionMismatch, "prior has " + std::to_string(prior.size()) +
                                                      " doors, reveal mechanism has " + std::to_string(reveal.size()));
    }
}

inline void check_same_size(const Prior& prior, const RevealMechanism& reveal, const Strategy& s) {
    check_same_size(prior, reveal);
    if (s.door_count() != prior.size()) {
        throw Error(ErrorCode::DimensionMismatch, "strategy is defined on " + std::to_string(s.door_count()) +
                                                      " doors, prior on " + std::to_string(prior.size()));
    }
}

}  // namespace detail

/// Winning probability split by event: a mismatch (the offered door hides
/// the prize) wins by switching, a match wins by matching.
inline double expected_win_by_cases(const Prior& prior, const RevealMechanism& reveal, const Strategy& s) {
    detail::check_same_size(prior, reveal, s);
    const Door x = s.x();
    double mismatch = 0.0;
    double match = 0.0;
    for (Door y = 1; y <= prior.size(); ++y) {
        if (y == x) continue;
        if (s.action(y) == Action::Switch) {
            mismatch += prior.at(y);
        } else {
            match += prior.at(x) * reveal.at(x, y);
        }
    }
    return mismatch + match;
}

/// p_x plus, for every door y where the strategy switches, the marginal
/// gain p_y - p_x q(x, y) of switching over matching.
inline double expected_win_closed_form(const Prior& prior, const RevealMechanism& reveal, const Strategy& s) {
    detail::check_same_size(prior, reveal, s);
    const Door x = s.x();
    double value = prior.at(x);
    for (Door y = 1; y <= prior.size(); ++y) {
        if (y != x && s.action(y) == Action::Switch) value += prior.at(y) - prior.at(x) * reveal.at(x, y);
    }
    return value;
}

/// Expectation of the scenario payoff with P(theta, w) = p_theta q(theta, w).
/// Goes through the payoff rule rather than the closed forms, so it ties the
/// payoff table to the analytic expressions.
template <PayoffRule Rule = WinOrNothing>
double expected_win_by_scenarios(const Prior& prior, const RevealMechanism& reveal, const Strategy& s,
                                 const Rule& rule = {}) {
    detail::check_same_size(prior, reveal, s);
    double value = 0.0;
    for (const auto& sc : enumerate_scenarios(prior.doors())) {
        value += prior.at(sc.theta) * reveal.at(sc.theta, sc.w) * scenario_payoff(s, sc, rule);
    }
    return value;
}

/// Exact winning probability of `s`. Both analytic forms are evaluated and
/// must agree to kIdentityTolerance; the closed form is returned.
inline double expected_win(const Prior& prior, const RevealMechanism& reveal, const Strategy& s) {
    const double by_cases = expected_win_by_cases(prior, reveal, s);
    const double closed = expected_win_closed_form(prior, reveal, s);
    if (std::abs(by_cases - closed) > kIdentityTolerance) {
        throw std::logic_error("expected_win: formulas disagree for strategy " + s.label());
    }
    return std::clamp(closed, 0.0, 1.0);
}

enum class Verdict { Switch, Indifferent, Match };

constexpr const char* to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Switch: return "switch";
        case Verdict::Indifferent: return "indifferent";
        case Verdict::Match: return "match";
    }
    return "?";
}

/// Odds for switching : odds for matching, kept unnormalized.
struct OddsRatio {
    double for_switch = 0.0;
    double for_match = 0.0;

    /// for_switch / for_match; +inf when only matching has zero weight,
    /// empty when both are zero.
    [[nodiscard]] std::optional<double> ratio() const noexcept {
        if (for_match == 0.0) {
            if (for_switch == 0.0) return std::nullopt;
            return std::numeric_limits<double>::infinity();
        }
        return for_switch / for_match;
    }

    [[nodiscard]] Verdict verdict(double tolerance = kIdentityTolerance) const noexcept {
        const double diff = for_switch - for_match;
        if (std::abs(diff) <= tolerance) return Verdict::Indifferent;
        return diff > 0 ? Verdict::Switch : Verdict::Match;
    }

    /// Smallest integers a:b with a/b equal to the ratio within `tolerance`
    /// (relative), searching denominators up to max_denominator.
    [[nodiscard]] std::optional<std::pair<long long, long long>> reduced(long long max_denominator = 1000,
                                                                         double tolerance = 1e-12) const {
        const auto r = ratio();
        if (!r) return std::nullopt;
        if (std::isinf(*r)) return std::pair<long long, long long>{1, 0};
        // Continued-fraction convergents give the best rational approximations.
        long long h_prev = 1, h = static_cast<long long>(std::floor(*r));
        long long k_prev = 0, k = 1;
        double frac = *r - std::floor(*r);
        for (int step = 0; step < 64; ++step) {
            if (std::abs(static_cast<double>(h) / static_cast<double>(k) - *r) <= tolerance * std::max(1.0, *r)) {
                return std::pair<long long, long long>{h, k};
            }
            if (frac < 1e-15) break;
            const double inv = 1.0 / frac;
            const auto a = static_cast<long long>(std::floor(inv));
            frac = inv - static_cast<double>(a);
            const long long h_next = a * h + h_prev;
            const long long k_next = a * k + k_prev;
            if (k_next > max_denominator) break;
            h_prev = std::exchange(h, h_next);
            k_prev = std::exchange(k, k_next);
        }
        return std::nullopt;
    }
};

/// Odds of the prize being behind y versus behind x, given that the host
/// offers y after the initial choice x: p_y : p_x q(x, y).
inline OddsRatio switch_odds(const Prior& prior, const RevealMechanism& reveal, Door x, Door y) {
    detail::check_same_size(prior, reveal);
    const DoorSet doors = prior.doors();
    doors.check(x);
    doors.check(y);
    if (x == y) throw Error(ErrorCode::SameDoor, "cannot switch from a door to itself");
    return OddsRatio{prior.at(y), prior.at(x) * reveal.at(x, y)};
}

}  // namespace montyhall
