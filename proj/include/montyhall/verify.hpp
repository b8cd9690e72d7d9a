#pragma once

// Self-check suite behind the `verify` command. Every check that touches
// payoffs goes through the supplied rule, so a corrupted payoff definition
// shows up as failing checks.

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include "montyhall/bayes.hpp"
#include "montyhall/dominance.hpp"
#include "montyhall/minimax.hpp"
#include "montyhall/montecarlo.hpp"
#include "montyhall/payoff.hpp"

namespace montyhall {

/// The classic three-door table, rows in enumeration order (1swsw, 1masw,
/// 1swma, 1mama, 2swsw, ...), columns (1,2) (1,3) (2,1) (2,3) (3,1) (3,2).
inline constexpr std::array<std::array<int, 6>, 12> kClassicTable{{
    {0, 0, 1, 1, 1, 1},
    {1, 0, 0, 0, 1, 1},
    {0, 1, 1, 1, 0, 0},
    {1, 1, 0, 0, 0, 0},
    {1, 1, 0, 0, 1, 1},
    {0, 0, 1, 0, 1, 1},
    {1, 1, 0, 1, 0, 0},
    {0, 0, 1, 1, 0, 0},
    {1, 1, 1, 1, 0, 0},
    {0, 0, 1, 1, 1, 0},
    {1, 1, 0, 0, 0, 1},
    {0, 0, 0, 0, 1, 1},
}};

/// Flat Dirichlet(1, ..., 1) draw.
inline Prior random_prior(int n, RandomStream& rng) {
    std::vector<double> p(static_cast<std::size_t>(n));
    double sum = 0.0;
    for (double& v : p) {
        v = -std::log1p(-rng.uniform());
        sum += v;
    }
    for (double& v : p) v /= sum;
    return make_prior(p);
}

/// Each row an independent flat Dirichlet draw over the off-diagonal doors.
inline RevealMechanism random_reveal(int n, RandomStream& rng) {
    const auto size = static_cast<std::size_t>(n);
    std::vector<std::vector<double>> q(size, std::vector<double>(size, 0.0));
    for (std::size_t x = 0; x < size; ++x) {
        double sum = 0.0;
        for (std::size_t y = 0; y < size; ++y) {
            if (y == x) continue;
            q[x][y] = -std::log1p(-rng.uniform());
            sum += q[x][y];
        }
        for (double& v : q[x]) v /= sum;
    }
    return make_reveal(q);
}

inline Strategy random_strategy(int n, RandomStream& rng) {
    const DoorSet doors(n);
    const Door x = static_cast<Door>(rng.uniform() * n) + 1;
    const auto code = static_cast<std::uint64_t>(rng.uniform() * static_cast<double>(std::uint64_t{1} << (n - 1)));
    return Strategy(DecisionFunction::from_code(doors, x, code));
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

template <class Fn>
CheckResult run_check(std::string name, Fn&& fn) {
    CheckResult result{std::move(name), false, {}};
    try {
        result.detail = fn();
        result.passed = result.detail.empty();
    } catch (const std::exception& e) {
        result.detail = e.what();
    }
    return result;
}

inline std::string tagged(const char* check, int n) { return std::string(check) + "[n=" + std::to_string(n) + "]"; }

}  // namespace detail

inline constexpr std::uint64_t kVerifySeed = 20260101;

/// Runs every check for door counts 3..doors_max (exhaustive strategy scans
/// stop at kMaxExhaustiveDoors). Each check reports an empty detail on
/// success and a short reason otherwise.
template <PayoffRule Rule = WinOrNothing>
std::vector<CheckResult> run_verification(int doors_max, const Rule& rule = {}) {
    if (doors_max < 3) throw Error(ErrorCode::TooFewDoors, "doors_max must be at least 3");
    const int exhaustive_max = std::min(doors_max, kMaxExhaustiveDoors);
    std::vector<CheckResult> results;

    for (int n = 3; n <= doors_max; ++n) {
        results.push_back(detail::run_check(detail::tagged("key_lemma", n), [&]() -> std::string {
            return verify_key_lemma(DoorSet(n), rule) ? "" : "lemma violated";
        }));
    }

    results.push_back(detail::run_check("classic_table", [&]() -> std::string {
        const PayoffTable table = payoff_table(DoorSet(3), rule);
        for (std::size_t i = 0; i < kClassicTable.size(); ++i) {
            for (std::size_t j = 0; j < kClassicTable[i].size(); ++j) {
                if (table.at(i, j) != kClassicTable[i][j]) {
                    return "cell " + table.rows()[i].label() + " / " + std::to_string(table.cols()[j].theta) + "," +
                           std::to_string(table.cols()[j].w) + " differs";
                }
            }
        }
        return "";
    }));

    for (int n = 3; n <= exhaustive_max; ++n) {
        const DoorSet doors(n);
        results.push_back(detail::run_check(detail::tagged("dominance_theorem", n), [&]() -> std::string {
            return verify_dominance_theorem(doors, rule) ? "" : "some strategy is not dominated by its switch strategy";
        }));
        results.push_back(detail::run_check(detail::tagged("undominated_set", n), [&]() -> std::string {
            const auto undominated = undominated_set(doors, rule);
            std::vector<Strategy> expected;
            for (Door x = 1; x <= n; ++x) expected.push_back(Strategy::always_switch(doors, x));
            return undominated == expected ? "" : "undominated set is not the always-switch family";
        }));
        results.push_back(detail::run_check(detail::tagged("unlucky_door", n), [&]() -> std::string {
            for (const auto& s : enumerate_strategies(doors)) {
                const Strategy switcher = Strategy::always_switch(doors, unlucky_door(s, rule));
                if (!(switcher == s) && !weakly_dominates(switcher, s, doors, rule)) {
                    return switcher.label() + " does not dominate " + s.label();
                }
            }
            return "";
        }));
    }

    for (int n = 3; n <= doors_max; ++n) {
        results.push_back(detail::run_check(detail::tagged("equalizer", n), [&]() -> std::string {
            const auto cert = uniform_equalizer(reduced_game(DoorSet(n), rule), (n - 1.0) / n);
            return cert.holds() ? "" : "uniform mixtures do not equalize at (n-1)/n";
        }));
    }

    results.push_back(detail::run_check("formula_equivalence", [&]() -> std::string {
        RandomStream rng(kVerifySeed, 1);
        const int top = std::min(doors_max, 5);
        for (int trial = 0; trial < 1000; ++trial) {
            const int n = 3 + trial % (top - 2);
            const Prior prior = random_prior(n, rng);
            const RevealMechanism reveal = random_reveal(n, rng);
            const Strategy s = random_strategy(n, rng);
            const double by_cases = expected_win_by_cases(prior, reveal, s);
            const double closed = expected_win_closed_form(prior, reveal, s);
            const double by_scenarios = expected_win_by_scenarios(prior, reveal, s, rule);
            if (std::abs(by_cases - closed) > kIdentityTolerance ||
                std::abs(by_scenarios - closed) > kIdentityTolerance) {
                return "forms disagree for " + s.label() + " at n=" + std::to_string(n);
            }
        }
        return "";
    }));

    results.push_back(detail::run_check("bayes_oracle", [&]() -> std::string {
        RandomStream rng(kVerifySeed, 2);
        const int top = std::min(doors_max, 4);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 3 + trial % (top - 2);
            const Prior prior = random_prior(n, rng);
            const RevealMechanism reveal = random_reveal(n, rng);
            double best = 0.0;
            for (const auto& s : enumerate_strategies(DoorSet(n))) {
                best = std::max(best, expected_win_by_scenarios(prior, reveal, s, rule));
            }
            const BayesSolution bayes = bayes_optimal(prior, reveal);
            if (std::abs(best - bayes.value) > kIdentityTolerance) {
                return "brute-force optimum differs from 1 - min p at n=" + std::to_string(n);
            }
        }
        return "";
    }));

    return results;
}

}  // namespace montyhall
