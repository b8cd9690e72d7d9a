#pragma once

// Doors, priors, reveal mechanisms, decision functions, strategies and
// scenarios of the generalized n-door game, plus their exhaustive
// enumerators. Doors are 1-based throughout the public interface.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "montyhall/error.hpp"

namespace montyhall {

using Door = int;

/// Tolerance used when validating user supplied probabilities.
inline constexpr double kInputTolerance = 1e-9;
/// Tolerance used when comparing two exact formulas for the same quantity.
inline constexpr double kIdentityTolerance = 1e-12;

class DoorSet {
public:
    explicit DoorSet(int n) : n_(n) {
        if (n < 3) {
            throw Error(ErrorCode::TooFewDoors, "at least three doors are required, got " + std::to_string(n));
        }
    }

    [[nodiscard]] int count() const noexcept { return n_; }
    [[nodiscard]] bool contains(Door d) const noexcept { return d >= 1 && d <= n_; }

    void check(Door d) const {
        if (!contains(d)) {
            throw Error(ErrorCode::DoorOutOfRange,
                        "door " + std::to_string(d) + " is not in 1.." + std::to_string(n_));
        }
    }

    friend bool operator==(const DoorSet&, const DoorSet&) = default;

private:
    int n_;
};

namespace detail {

inline void check_probability(double v, const std::string& path) {
    if (!std::isfinite(v) || v < 0.0) {
        throw Error(ErrorCode::NegativeProbability, "probability must be a finite value >= 0", path);
    }
}

inline std::string indexed(const char* field, std::size_t one_based) {
    return std::string(field) + "[" + std::to_string(one_based) + "]";
}

}  // namespace detail

/// Prize placement distribution over the doors.
class Prior {
public:
    [[nodiscard]] DoorSet doors() const { return DoorSet(static_cast<int>(p_.size())); }
    [[nodiscard]] int size() const noexcept { return static_cast<int>(p_.size()); }
    [[nodiscard]] double at(Door theta) const { return p_.at(static_cast<std::size_t>(theta - 1)); }
    [[nodiscard]] std::span<const double> values() const noexcept { return p_; }

    friend bool operator==(const Prior&, const Prior&) = default;

private:
    explicit Prior(std::vector<double> p) : p_(std::move(p)) {}
    friend Prior make_prior(std::span<const double> values);

    std::vector<double> p_;
};

inline Prior make_prior(std::span<const double> values) {
    if (values.size() < 3) {
        throw Error(ErrorCode::TooFewDoors, "a prior needs at least three doors", "p");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        detail::check_probability(values[i], detail::indexed("p", i + 1));
        sum += values[i];
    }
    if (std::abs(sum - 1.0) > kInputTolerance) {
        throw Error(ErrorCode::SumNotOne, "prior sums to " + std::to_string(sum), "p");
    }
    return Prior(std::vector<double>(values.begin(), values.end()));
}

inline Prior make_prior(std::initializer_list<double> values) {
    return make_prior(std::span<const double>(values.begin(), values.size()));
}

inline Prior uniform_prior(int n) {
    DoorSet doors(n);
    return make_prior(std::vector<double>(static_cast<std::size_t>(doors.count()), 1.0 / n));
}

/// Prior concentrated on a single door.
inline Prior degenerate_prior(int n, Door theta) {
    DoorSet doors(n);
    doors.check(theta);
    std::vector<double> p(static_cast<std::size_t>(n), 0.0);
    p[static_cast<std::size_t>(theta - 1)] = 1.0;
    return make_prior(p);
}

/// Host behaviour on a match: row x holds the probabilities q(x, y) of
/// leaving door y closed when the initial choice x hides the prize.
class RevealMechanism {
public:
    [[nodiscard]] DoorSet doors() const { return DoorSet(n_); }
    [[nodiscard]] int size() const noexcept { return n_; }

    [[nodiscard]] double at(Door x, Door y) const {
        return q_.at(static_cast<std::size_t>((x - 1) * n_ + (y - 1)));
    }

    /// Row of door x, indexed 0..n-1 (the diagonal entry included).
    [[nodiscard]] std::span<const double> row(Door x) const {
        return std::span<const double>(q_).subspan(static_cast<std::size_t>((x - 1) * n_),
                                                   static_cast<std::size_t>(n_));
    }

    friend bool operator==(const RevealMechanism&, const RevealMechanism&) = default;

private:
    RevealMechanism(int n, std::vector<double> q) : n_(n), q_(std::move(q)) {}
    friend RevealMechanism make_reveal(const std::vector<std::vector<double>>& matrix);

    int n_;
    std::vector<double> q_;
};

inline RevealMechanism make_reveal(const std::vector<std::vector<double>>& matrix) {
    const std::size_t n = matrix.size();
    if (n < 3) {
        throw Error(ErrorCode::TooFewDoors, "a reveal matrix needs at least three rows", "q");
    }
    std::vector<double> flat;
    flat.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
        const std::string row_path = detail::indexed("q", x + 1);
        if (matrix[x].size() != n) {
            throw Error(ErrorCode::NotSquare,
                        "row has " + std::to_string(matrix[x].size()) + " entries, expected " + std::to_string(n),
                        row_path);
        }
        double sum = 0.0;
        for (std::size_t y = 0; y < n; ++y) {
            detail::check_probability(matrix[x][y], row_path);
            sum += matrix[x][y];
        }
        if (std::abs(matrix[x][x]) > kInputTolerance) {
            throw Error(ErrorCode::NonzeroDiagonal, "the door chosen first is never offered", row_path);
        }
        if (std::abs(sum - 1.0) > kInputTolerance) {
            throw Error(ErrorCode::RowSumNotOne, "row sums to " + std::to_string(sum), row_path);
        }
        for (std::size_t y = 0; y < n; ++y) {
            flat.push_back(x == y ? 0.0 : matrix[x][y]);
        }
    }
    return RevealMechanism(static_cast<int>(n), std::move(flat));
}

/// The host picks the door to leave closed uniformly among the others.
inline RevealMechanism fair_reveal(int n) {
    DoorSet doors(n);
    const auto size = static_cast<std::size_t>(doors.count());
    std::vector<std::vector<double>> q(size, std::vector<double>(size, 1.0 / (n - 1)));
    for (std::size_t i = 0; i < size; ++i) q[i][i] = 0.0;
    return make_reveal(q);
}

enum class Action : std::uint8_t { Match, Switch };

constexpr const char* symbol(Action a) noexcept { return a == Action::Match ? "ma" : "sw"; }

/// a(x, .): the action taken for every door y != x that may be offered.
class DecisionFunction {
public:
    /// Builds from an explicit map; its keys must be exactly {1..n} \ {x}.
    DecisionFunction(DoorSet doors, Door x, const std::map<Door, Action>& choices) : n_(doors.count()), x_(x) {
        doors.check(x);
        if (choices.size() != static_cast<std::size_t>(n_ - 1)) {
            throw Error(ErrorCode::InvalidDecision, "a decision function needs exactly n-1 entries");
        }
        choices_.reserve(choices.size());
        for (Door y = 1; y <= n_; ++y) {
            if (y == x) {
                if (choices.contains(y)) {
                    throw Error(ErrorCode::InvalidDecision, "door " + std::to_string(y) + " is the initial choice");
                }
                continue;
            }
            auto it = choices.find(y);
            if (it == choices.end()) {
                throw Error(ErrorCode::InvalidDecision, "no action given for door " + std::to_string(y));
            }
            choices_.push_back(it->second);
        }
    }

    /// Same action for every offered door.
    static DecisionFunction constant(DoorSet doors, Door x, Action a) {
        doors.check(x);
        return DecisionFunction(doors.count(), x, std::vector<Action>(static_cast<std::size_t>(doors.count() - 1), a));
    }

    /// Actions listed for the offered doors in ascending order.
    static DecisionFunction from_sequence(DoorSet doors, Door x, std::vector<Action> actions) {
        doors.check(x);
        if (actions.size() != static_cast<std::size_t>(doors.count() - 1)) {
            throw Error(ErrorCode::InvalidDecision, "expected " + std::to_string(doors.count() - 1) + " actions, got " +
                                                        std::to_string(actions.size()));
        }
        return DecisionFunction(doors.count(), x, std::move(actions));
    }

    /// Bit i of `code` set means MATCH at the i-th smallest offered door.
    static DecisionFunction from_code(DoorSet doors, Door x, std::uint64_t code) {
        std::vector<Action> actions(static_cast<std::size_t>(doors.count() - 1));
        for (std::size_t i = 0; i < actions.size(); ++i) {
            actions[i] = ((code >> i) & 1U) != 0 ? Action::Match : Action::Switch;
        }
        return from_sequence(doors, x, std::move(actions));
    }

    [[nodiscard]] int door_count() const noexcept { return n_; }
    [[nodiscard]] Door x() const noexcept { return x_; }
    [[nodiscard]] std::span<const Action> sequence() const noexcept { return choices_; }

    [[nodiscard]] Action at(Door y) const {
        if (y == x_ || y < 1 || y > n_) {
            throw Error(ErrorCode::InvalidDecision, "door " + std::to_string(y) + " is not offered from door " +
                                                        std::to_string(x_));
        }
        return choices_[static_cast<std::size_t>(y < x_ ? y - 1 : y - 2)];
    }

    [[nodiscard]] bool always_switch() const noexcept {
        for (Action a : choices_)
            if (a != Action::Switch) return false;
        return true;
    }

    [[nodiscard]] std::uint64_t code() const noexcept {
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < choices_.size(); ++i)
            if (choices_[i] == Action::Match) c |= std::uint64_t{1} << i;
        return c;
    }

    /// "swma..." with one symbol per offered door, ascending.
    [[nodiscard]] std::string symbols() const {
        std::string s;
        for (Action a : choices_) s += symbol(a);
        return s;
    }

    friend bool operator==(const DecisionFunction&, const DecisionFunction&) = default;

private:
    DecisionFunction(int n, Door x, std::vector<Action> choices) : n_(n), x_(x), choices_(std::move(choices)) {}

    int n_;
    Door x_;
    std::vector<Action> choices_;
};

/// Initial door plus the decision function anchored at it.
class Strategy {
public:
    explicit Strategy(DecisionFunction decision) : decision_(std::move(decision)) {}

    static Strategy always_switch(DoorSet doors, Door x) {
        return Strategy(DecisionFunction::constant(doors, x, Action::Switch));
    }
    static Strategy always_match(DoorSet doors, Door x) {
        return Strategy(DecisionFunction::constant(doors, x, Action::Match));
    }

    [[nodiscard]] Door x() const noexcept { return decision_.x(); }
    [[nodiscard]] int door_count() const noexcept { return decision_.door_count(); }
    [[nodiscard]] const DecisionFunction& decision() const noexcept { return decision_; }
    [[nodiscard]] Action action(Door y) const { return decision_.at(y); }
    [[nodiscard]] bool always_switch() const noexcept { return decision_.always_switch(); }

    /// Row label of the payoff table, e.g. "2masw".
    [[nodiscard]] std::string label() const { return std::to_string(x()) + decision_.symbols(); }

    friend bool operator==(const Strategy&, const Strategy&) = default;
    friend bool operator<(const Strategy& a, const Strategy& b) {
        if (a.x() != b.x()) return a.x() < b.x();
        return a.decision_.code() < b.decision_.code();
    }

private:
    DecisionFunction decision_;
};

/// A fully determined world: prize door theta, and the door w the host
/// leaves closed should the initial choice be theta.
struct Scenario {
    Door theta;
    Door w;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

inline Scenario make_scenario(DoorSet doors, Door theta, Door w) {
    doors.check(theta);
    doors.check(w);
    if (theta == w) throw Error(ErrorCode::SameDoor, "w must differ from theta");
    return Scenario{theta, w};
}

/// All n * 2^(n-1) strategies: x ascending; for each x the decision codes
/// ascend, so always-switch comes first and always-match last.
inline std::vector<Strategy> enumerate_strategies(DoorSet doors) {
    const int n = doors.count();
    if (n - 1 >= 63) throw Error(ErrorCode::SizeLimit, "too many doors to enumerate strategies");
    const std::uint64_t per_door = std::uint64_t{1} << (n - 1);
    std::vector<Strategy> out;
    out.reserve(static_cast<std::size_t>(n) * per_door);
    for (Door x = 1; x <= n; ++x) {
        for (std::uint64_t code = 0; code < per_door; ++code) {
            out.emplace_back(DecisionFunction::from_code(doors, x, code));
        }
    }
    return out;
}

/// All decision functions available at door x, in enumeration order.
inline std::vector<DecisionFunction> enumerate_decisions(DoorSet doors, Door x) {
    doors.check(x);
    const std::uint64_t per_door = std::uint64_t{1} << (doors.count() - 1);
    std::vector<DecisionFunction> out;
    out.reserve(per_door);
    for (std::uint64_t code = 0; code < per_door; ++code) out.push_back(DecisionFunction::from_code(doors, x, code));
    return out;
}

/// All n(n-1) scenarios, theta ascending then w ascending.
inline std::vector<Scenario> enumerate_scenarios(DoorSet doors) {
    std::vector<Scenario> out;
    out.reserve(static_cast<std::size_t>(doors.count() * (doors.count() - 1)));
    for (Door theta = 1; theta <= doors.count(); ++theta) {
        for (Door w = 1; w <= doors.count(); ++w) {
            if (w != theta) out.push_back(Scenario{theta, w});
        }
    }
    return out;
}

}  // namespace montyhall
