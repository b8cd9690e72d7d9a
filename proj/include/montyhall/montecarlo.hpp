#pragma once

// Seeded simulation of the full random process: the prize door is drawn
// from the prior, and on a match the offered door is drawn from the reveal
// row of the initial choice.
//
// Generator: std::mt19937_64. Worker i of a run with master seed S draws
// from its own substream seeded with splitmix64(S ^ (0x9E3779B97F4A7C15 *
// (i + 1))). Uniform doubles take the top 53 bits of one engine output, so
// results do not depend on the standard library's distribution classes.
// A report is a function of (seed, trials, workers) only.

#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <thread>
#include <vector>

#include "montyhall/payoff.hpp"

namespace montyhall {

inline constexpr const char* kGeneratorName = "mt19937_64/splitmix64-substreams";

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t substream_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
    return splitmix64(master_seed ^ (0x9E3779B97F4A7C15ULL * (index + 1)));
}

class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint64_t index) : engine_(substream_seed(master_seed, index)) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Inverse-CDF draw over `weights` in stored order; returns a 0-based
    /// index. Entries with zero weight are never returned.
    std::size_t sample(std::span<const double> weights) {
        const double u = uniform();
        double cumulative = 0.0;
        std::size_t last_positive = 0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (weights[i] <= 0.0) continue;
            last_positive = i;
            cumulative += weights[i];
            if (u < cumulative) return i;
        }
        // u landed past the rounded total.
        return last_positive;
    }

private:
    std::mt19937_64 engine_;
};

struct RoundTrace {
    Door theta;
    Door offered;
    Action action;
    bool win;
};

inline RoundTrace simulate_round(const Prior& prior, const RevealMechanism& reveal, const Strategy& s,
                                 RandomStream& rng) {
    const Door theta = static_cast<Door>(rng.sample(prior.values())) + 1;
    const Door offered = theta != s.x() ? theta : static_cast<Door>(rng.sample(reveal.row(s.x()))) + 1;
    const Action action = s.action(offered);
    return RoundTrace{theta, offered, action, win_payoff(theta, s.x(), action) == 1};
}

struct SimulationReport {
    long long trials = 0;
    long long wins = 0;
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
    int workers = 1;
    const char* generator = kGeneratorName;
};

/// Trials handed to worker i: an even split with the remainder going to the
/// lowest indices.
constexpr long long worker_share(long long trials, int workers, int i) noexcept {
    return trials / workers + (i < trials % workers ? 1 : 0);
}

inline SimulationReport estimate_win(const Prior& prior, const RevealMechanism& reveal, const Strategy& s,
                                     long long trials, std::uint64_t seed, int workers = 1) {
    detail::check_same_size(prior, reveal, s);
    if (trials < 1) throw Error(ErrorCode::Precondition, "trials must be at least 1");
    if (workers < 1) throw Error(ErrorCode::Precondition, "workers must be at least 1");

    std::vector<long long> wins(static_cast<std::size_t>(workers), 0);
    auto run = [&](int worker) {
        RandomStream rng(seed, static_cast<std::uint64_t>(worker));
        long long local = 0;
        for (long long t = worker_share(trials, workers, worker); t > 0; --t) {
            local += simulate_round(prior, reveal, s, rng).win ? 1 : 0;
        }
        wins[static_cast<std::size_t>(worker)] = local;
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    }

    SimulationReport report;
    report.trials = trials;
    for (long long w : wins) report.wins += w;
    report.estimate = static_cast<double>(report.wins) / static_cast<double>(trials);
    report.std_error = std::sqrt(report.estimate * (1.0 - report.estimate) / static_cast<double>(trials));
    report.seed = seed;
    report.workers = workers;
    return report;
}

struct OddsEstimate {
    OddsRatio odds;  // joint frequencies of {offered y, prize at y} : {offered y, prize at x}
    long long prize_at_y = 0;
    long long prize_at_x = 0;
    long long trials = 0;

    [[nodiscard]] long long conditioning_rounds() const noexcept { return prize_at_y + prize_at_x; }
};

/// Plays `trials` rounds from door x and keeps those where y is offered.
/// Within them the prize is behind y (a mismatch) or behind x (a match).
inline OddsEstimate estimate_conditional_odds(const Prior& prior, const RevealMechanism& reveal, Door x, Door y,
                                              long long trials, std::uint64_t seed) {
    detail::check_same_size(prior, reveal);
    const DoorSet doors = prior.doors();
    doors.check(x);
    doors.check(y);
    if (x == y) throw Error(ErrorCode::SameDoor, "cannot switch from a door to itself");
    if (trials < 1) throw Error(ErrorCode::Precondition, "trials must be at least 1");

    const Strategy probe = Strategy::always_switch(doors, x);
    RandomStream rng(seed, 0);
    OddsEstimate est;
    est.trials = trials;
    for (long long t = 0; t < trials; ++t) {
        const RoundTrace round = simulate_round(prior, reveal, probe, rng);
        if (round.offered != y) continue;
        if (round.theta == y) {
            ++est.prize_at_y;
        } else {
            ++est.prize_at_x;
        }
    }
    if (est.conditioning_rounds() == 0) {
        throw Error(ErrorCode::NoSamples, "door " + std::to_string(y) + " was never offered from door " +
                                              std::to_string(x));
    }
    const auto n = static_cast<double>(trials);
    est.odds = OddsRatio{static_cast<double>(est.prize_at_y) / n, static_cast<double>(est.prize_at_x) / n};
    return est;
}

}  // namespace montyhall
