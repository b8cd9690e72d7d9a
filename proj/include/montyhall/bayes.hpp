#pragma once

#include <algorithm>
#include <vector>

#include "montyhall/dominance.hpp"
#include "montyhall/payoff.hpp"

namespace montyhall {

struct BayesSolution {
    Strategy strategy;  // (theta_star, always switch)
    double value;       // 1 - p[theta_star]
    Door theta_star;
};

struct DecisionValue {
    DecisionFunction decision;
    double value;
};

struct StrategyValue {
    Strategy strategy;
    double value;
};

/// Smallest door with minimal prior probability.
inline Door least_likely_door(const Prior& prior) {
    const auto p = prior.values();
    return static_cast<Door>(std::min_element(p.begin(), p.end()) - p.begin()) + 1;
}

/// Start at the least likely door and always switch. Winning probability
/// 1 - min p, whatever the reveal mechanism.
inline BayesSolution bayes_optimal(const Prior& prior, const RevealMechanism& reveal) {
    detail::check_same_size(prior, reveal);
    const Door theta_star = least_likely_door(prior);
    return BayesSolution{Strategy::always_switch(prior.doors(), theta_star), 1.0 - prior.at(theta_star), theta_star};
}

/// Best decision function for a fixed initial door. Each offered door
/// contributes independently to the closed form, so switch at y exactly
/// when p_y - p_x q(x, y) >= 0 (ties switch).
inline DecisionValue best_decision_for(const Prior& prior, const RevealMechanism& reveal, Door x) {
    detail::check_same_size(prior, reveal);
    const DoorSet doors = prior.doors();
    doors.check(x);
    std::vector<Action> actions;
    actions.reserve(static_cast<std::size_t>(doors.count() - 1));
    double value = prior.at(x);
    for (Door y = 1; y <= doors.count(); ++y) {
        if (y == x) continue;
        const double gain = prior.at(y) - prior.at(x) * reveal.at(x, y);
        if (gain >= 0.0) {
            actions.push_back(Action::Switch);
            value += gain;
        } else {
            actions.push_back(Action::Match);
        }
    }
    return DecisionValue{DecisionFunction::from_sequence(doors, x, std::move(actions)), value};
}

/// Brute-force argmax of expected_win over every strategy. Values within
/// kIdentityTolerance of the incumbent count as ties and keep the earlier
/// strategy in enumeration order.
inline StrategyValue exhaustive_best(const Prior& prior, const RevealMechanism& reveal) {
    detail::check_same_size(prior, reveal);
    detail::check_exhaustive_size(prior.doors());
    const auto strategies = enumerate_strategies(prior.doors());
    std::size_t best = 0;
    double best_value = expected_win(prior, reveal, strategies.front());
    for (std::size_t i = 1; i < strategies.size(); ++i) {
        const double v = expected_win(prior, reveal, strategies[i]);
        if (v > best_value + kIdentityTolerance) {
            best = i;
            best_value = v;
        }
    }
    return StrategyValue{strategies[best], best_value};
}

}  // namespace montyhall
