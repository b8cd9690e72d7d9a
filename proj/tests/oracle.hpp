#pragma once

// Test-only oracles. They work from the definition of the game (prize door,
// host behaviour, win rule) on plain vectors and never call the library's
// payoff formulas, so they can check them.

#include <cstddef>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

// decision[y] for y != x: true means switch. Doors are 0-based here.
struct PlainStrategy {
    int x;
    std::vector<bool> switch_at;
};

inline int wins(int prize, int initial, bool switched) { return switched ? (prize != initial) : (prize == initial); }

/// Sum over every (prize, offered door) outcome of the random process.
inline double process_win_probability(const std::vector<double>& p, const Matrix& q, const PlainStrategy& s) {
    const std::size_t n = p.size();
    double total = 0.0;
    for (std::size_t prize = 0; prize < n; ++prize) {
        for (std::size_t offered = 0; offered < n; ++offered) {
            if (offered == static_cast<std::size_t>(s.x)) continue;
            double prob = 0.0;
            if (prize == static_cast<std::size_t>(s.x)) {
                prob = p[prize] * q[prize][offered];
            } else if (offered == prize) {
                prob = p[prize];
            }
            total += prob * wins(static_cast<int>(prize), s.x, s.switch_at[offered]);
        }
    }
    return total;
}

/// Joint probabilities P(offered = y, prize = y) : P(offered = y, prize = x).
inline std::pair<double, double> offered_joint(const std::vector<double>& p, const Matrix& q, int x, int y) {
    return {p[static_cast<std::size_t>(y)], p[static_cast<std::size_t>(x)] * q[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]};
}

/// Every strategy at n doors as PlainStrategy, in no particular order.
inline std::vector<PlainStrategy> all_strategies(int n) {
    std::vector<PlainStrategy> out;
    for (int x = 0; x < n; ++x) {
        for (unsigned mask = 0; mask < (1U << n); ++mask) {
            if (mask & (1U << x)) continue;  // bit x unused
            PlainStrategy s{x, std::vector<bool>(static_cast<std::size_t>(n), false)};
            for (int y = 0; y < n; ++y) s.switch_at[static_cast<std::size_t>(y)] = y != x && !(mask & (1U << y));
            out.push_back(s);
        }
    }
    return out;
}

/// Payoff row over scenarios (prize, w), prize ascending then w ascending.
inline std::vector<int> scenario_row(int n, const PlainStrategy& s) {
    std::vector<int> row;
    for (int prize = 0; prize < n; ++prize) {
        for (int w = 0; w < n; ++w) {
            if (w == prize) continue;
            const int offered = prize == s.x ? w : prize;
            row.push_back(wins(prize, s.x, s.switch_at[static_cast<std::size_t>(offered)]));
        }
    }
    return row;
}

inline bool row_dominates(const std::vector<int>& a, const std::vector<int>& b) {
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return false;
        strict = strict || a[i] > b[i];
    }
    return strict;
}

}  // namespace oracle
