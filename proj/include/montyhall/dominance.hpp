#pragma once

// Scenario-wise weak dominance between pure strategies. A scenario fixes
// every random choice, so the comparison is prior-free: it is exactly a
// comparison of payoff table rows.

#include <optional>
#include <stdexcept>
#include <vector>

#include "montyhall/payoff.hpp"

namespace montyhall {

/// Largest door count for the exhaustive pairwise scans.
inline constexpr int kMaxExhaustiveDoors = 6;

struct ProofCell {
    Scenario scenario;
    int payoff_dominated;
    int payoff_dominator;
};

struct DominanceReport {
    Strategy dominated;
    Strategy dominator;
    Scenario witness;  // first scenario where the dominator wins and the dominated strategy loses
    std::vector<ProofCell> proof_cells;
};

namespace detail {

inline void check_exhaustive_size(DoorSet doors) {
    if (doors.count() > kMaxExhaustiveDoors) {
        throw Error(ErrorCode::SizeLimit, "exhaustive scans are limited to " + std::to_string(kMaxExhaustiveDoors) +
                                              " doors, got " + std::to_string(doors.count()));
    }
}

inline void check_strategy_size(DoorSet doors, const Strategy& s) {
    if (s.door_count() != doors.count()) {
        throw Error(ErrorCode::DimensionMismatch, "strategy " + s.label() + " is defined on " +
                                                      std::to_string(s.door_count()) + " doors, expected " +
                                                      std::to_string(doors.count()));
    }
}

}  // namespace detail

/// Exhaustive check that a winning match at theta implies that switching
/// away from any other door also wins at theta.
template <PayoffRule Rule = WinOrNothing>
bool verify_key_lemma(DoorSet doors, const Rule& rule = {}) {
    const int n = doors.count();
    for (Door theta = 1; theta <= n; ++theta) {
        for (Door x = 1; x <= n; ++x) {
            for (Door other = 1; other <= n; ++other) {
                if (other == x) continue;
                if (rule(theta, x, Action::Match) == 1 && rule(theta, other, Action::Switch) != 1) return false;
            }
        }
    }
    return true;
}

/// True iff `dominator` pays at least as much as `dominated` in every
/// scenario and strictly more in at least one.
template <PayoffRule Rule = WinOrNothing>
bool weakly_dominates(const Strategy& dominator, const Strategy& dominated, DoorSet doors, const Rule& rule = {}) {
    detail::check_strategy_size(doors, dominator);
    detail::check_strategy_size(doors, dominated);
    if (dominator == dominated) {
        throw Error(ErrorCode::Precondition, "a strategy is not compared with itself: " + dominator.label());
    }
    bool strict = false;
    for (const auto& sc : enumerate_scenarios(doors)) {
        const int lhs = scenario_payoff(dominated, sc, rule);
        const int rhs = scenario_payoff(dominator, sc, rule);
        if (lhs > rhs) return false;
        strict = strict || lhs < rhs;
    }
    return strict;
}

/// Full cell-by-cell evidence for a dominance claim, or empty when the claim
/// does not hold.
template <PayoffRule Rule = WinOrNothing>
std::optional<DominanceReport> dominance_report(const Strategy& dominator, const Strategy& dominated, DoorSet doors,
                                                const Rule& rule = {}) {
    if (!weakly_dominates(dominator, dominated, doors, rule)) return std::nullopt;
    DominanceReport report{dominated, dominator, Scenario{0, 0}, {}};
    bool have_witness = false;
    for (const auto& sc : enumerate_scenarios(doors)) {
        const ProofCell cell{sc, scenario_payoff(dominated, sc, rule), scenario_payoff(dominator, sc, rule)};
        if (!have_witness && cell.payoff_dominated == 0 && cell.payoff_dominator == 1) {
            report.witness = sc;
            have_witness = true;
        }
        report.proof_cells.push_back(cell);
    }
    return report;
}

/// For a strategy that matches at some offered door y', the always-switch
/// strategy starting at y' (smallest such y'). Empty for always-switch.
inline std::optional<Strategy> dominating_switch_strategy(const Strategy& s) {
    const DoorSet doors(s.door_count());
    for (Door y = 1; y <= doors.count(); ++y) {
        if (y != s.x() && s.action(y) == Action::Match) return Strategy::always_switch(doors, y);
    }
    return std::nullopt;
}

/// Smallest door u such that `s` loses in every scenario with the prize
/// behind u.
template <PayoffRule Rule = WinOrNothing>
Door unlucky_door(const Strategy& s, const Rule& rule = {}) {
    const DoorSet doors(s.door_count());
    for (Door u = 1; u <= doors.count(); ++u) {
        bool always_loses = true;
        for (Door w = 1; w <= doors.count() && always_loses; ++w) {
            if (w != u && scenario_payoff(s, Scenario{u, w}, rule) != 0) always_loses = false;
        }
        if (always_loses) return u;
    }
    throw std::logic_error("strategy " + s.label() + " has no unlucky door");
}

/// Strategies not weakly dominated by any other, in enumeration order.
/// Brute force over all pairs of payoff table rows.
template <PayoffRule Rule = WinOrNothing>
std::vector<Strategy> undominated_set(DoorSet doors, const Rule& rule = {}) {
    detail::check_exhaustive_size(doors);
    const PayoffTable table = payoff_table(doors, rule);
    const std::size_t rows = table.rows().size();
    const std::size_t cols = table.cols().size();

    auto dominates = [&](std::size_t a, std::size_t b) {
        bool strict = false;
        for (std::size_t j = 0; j < cols; ++j) {
            const int pa = table.at(a, j);
            const int pb = table.at(b, j);
            if (pb > pa) return false;
            strict = strict || pa > pb;
        }
        return strict;
    };

    std::vector<Strategy> out;
    for (std::size_t i = 0; i < rows; ++i) {
        bool dominated = false;
        for (std::size_t k = 0; k < rows && !dominated; ++k) {
            if (k != i && dominates(k, i)) dominated = true;
        }
        if (!dominated) out.push_back(table.rows()[i]);
    }
    return out;
}

/// Checks, for every strategy and every door y' where it matches, that the
/// always-switch strategy starting at y' weakly dominates it.
template <PayoffRule Rule = WinOrNothing>
bool verify_dominance_theorem(DoorSet doors, const Rule& rule = {}) {
    detail::check_exhaustive_size(doors);
    for (const auto& s : enumerate_strategies(doors)) {
        for (Door y = 1; y <= doors.count(); ++y) {
            if (y == s.x() || s.action(y) != Action::Match) continue;
            if (!weakly_dominates(Strategy::always_switch(doors, y), s, doors, rule)) return false;
        }
    }
    return true;
}

struct DominanceAnalysis {
    std::vector<Strategy> undominated;
    std::vector<DominanceReport> reports;  // one per dominated strategy, enumeration order
};

/// Undominated set plus a report for each dominated strategy, using the
/// dominator from dominating_switch_strategy.
inline DominanceAnalysis analyze_dominance(DoorSet doors) {
    DominanceAnalysis result{undominated_set(doors), {}};
    for (const auto& s : enumerate_strategies(doors)) {
        const auto dominator = dominating_switch_strategy(s);
        if (!dominator) continue;
        auto report = dominance_report(*dominator, s, doors);
        if (!report) throw std::logic_error("expected " + dominator->label() + " to dominate " + s.label());
        result.reports.push_back(std::move(*report));
    }
    return result;
}

}  // namespace montyhall
