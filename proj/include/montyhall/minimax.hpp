#pragma once

// The guesser-vs-hider game. After discarding dominated strategies the
// guesser picks an initial door x and always switches; the hider picks the
// prize door theta. Payoff 1(x != theta), independent of the host.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "montyhall/payoff.hpp"

namespace montyhall {

/// Zero-sum game in normal form; the row player maximizes.
class MatrixGame {
public:
    explicit MatrixGame(std::vector<std::vector<double>> payoff) : payoff_(std::move(payoff)) {
        if (payoff_.empty() || payoff_.front().empty()) {
            throw Error(ErrorCode::Precondition, "a matrix game needs at least one row and one column");
        }
        for (const auto& row : payoff_) {
            if (row.size() != payoff_.front().size()) {
                throw Error(ErrorCode::DimensionMismatch, "payoff rows have different lengths");
            }
            for (double v : row) {
                if (!std::isfinite(v)) throw Error(ErrorCode::Precondition, "payoffs must be finite");
            }
        }
    }

    [[nodiscard]] std::size_t rows() const noexcept { return payoff_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return payoff_.front().size(); }
    [[nodiscard]] double at(std::size_t i, std::size_t j) const { return payoff_.at(i).at(j); }
    [[nodiscard]] const std::vector<std::vector<double>>& payoff() const noexcept { return payoff_; }

private:
    std::vector<std::vector<double>> payoff_;
};

struct MinimaxSolution {
    double value = 0.0;
    std::vector<double> row_mix;
    std::vector<double> col_mix;
    double gap = 0.0;  // best row reply to col_mix minus best column reply to row_mix
    long long rounds = 0;
};

inline constexpr double kDefaultSolverTolerance = 1e-3;
inline constexpr long long kDefaultSolverRounds = 200000;

/// Rows: initial door x of an always-switch strategy. Columns: prize door.
template <PayoffRule Rule = WinOrNothing>
MatrixGame reduced_game(DoorSet doors, const Rule& rule = {}) {
    const auto n = static_cast<std::size_t>(doors.count());
    std::vector<std::vector<double>> payoff(n, std::vector<double>(n));
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t theta = 0; theta < n; ++theta) {
            payoff[x][theta] = rule(static_cast<Door>(theta + 1), static_cast<Door>(x + 1), Action::Switch);
        }
    }
    return MatrixGame(std::move(payoff));
}

/// Alternating fictitious play: each round the row player best-responds to
/// the column player's empirical mixture, then the column player responds to
/// the updated row mixture. Among tied best responses the action played
/// least often so far wins, then the smallest index.
///
/// Every empirical row mixture guarantees a lower bound on the value and
/// every empirical column mixture an upper bound. The solver keeps the best
/// of each seen so far, together with the mixtures that achieved them, and
/// stops once the two bounds are within `tolerance`. The reported value is
/// their midpoint, so it lies within tolerance/2 of the game value.
inline MinimaxSolution solve_matrix_game(const MatrixGame& game, double tolerance = kDefaultSolverTolerance,
                                         long long max_rounds = kDefaultSolverRounds) {
    if (!(tolerance > 0.0)) throw Error(ErrorCode::Precondition, "tolerance must be positive");
    if (max_rounds < 1) throw Error(ErrorCode::Precondition, "max_rounds must be at least 1");

    const std::size_t m = game.rows();
    const std::size_t k = game.cols();
    std::vector<long long> row_counts(m, 0);
    std::vector<long long> col_counts(k, 0);
    // row_totals[i] = payoff of row i summed over the column moves so far;
    // col_totals[j] likewise over the row moves.
    std::vector<double> row_totals(m, 0.0);
    std::vector<double> col_totals(k, 0.0);

    // Totals are exact sums of the payoff entries, so ties are exact.
    auto best_reply = [](const std::vector<double>& totals, const std::vector<long long>& counts, bool maximize) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < totals.size(); ++i) {
            const bool better = maximize ? totals[i] > totals[best] : totals[i] < totals[best];
            if (better || (totals[i] == totals[best] && counts[i] < counts[best])) best = i;
        }
        return best;
    };
    auto mixture = [](const std::vector<long long>& counts, long long total) {
        std::vector<double> mix(counts.size());
        for (std::size_t i = 0; i < counts.size(); ++i) mix[i] = static_cast<double>(counts[i]) / total;
        return mix;
    };

    MinimaxSolution solution;
    double best_upper = std::numeric_limits<double>::infinity();
    double best_lower = -std::numeric_limits<double>::infinity();
    long long round = 0;
    while (round < max_rounds) {
        ++round;
        const std::size_t r = best_reply(row_totals, row_counts, true);
        ++row_counts[r];
        for (std::size_t j = 0; j < k; ++j) col_totals[j] += game.at(r, j);

        const std::size_t c = best_reply(col_totals, col_counts, false);
        ++col_counts[c];
        for (std::size_t i = 0; i < m; ++i) row_totals[i] += game.at(i, c);

        const auto t = static_cast<double>(round);
        const double upper = *std::max_element(row_totals.begin(), row_totals.end()) / t;
        const double lower = *std::min_element(col_totals.begin(), col_totals.end()) / t;
        if (lower > best_lower) {
            best_lower = lower;
            solution.row_mix = mixture(row_counts, round);
        }
        if (upper < best_upper) {
            best_upper = upper;
            solution.col_mix = mixture(col_counts, round);
        }
        if (best_upper - best_lower <= tolerance) break;
    }

    solution.rounds = round;
    solution.gap = best_upper - best_lower;
    solution.value = 0.5 * (best_upper + best_lower);
    if (solution.gap > tolerance) {
        std::ostringstream msg;
        msg << "fictitious play stopped after " << round << " rounds with gap " << solution.gap << " > "
            << tolerance;
        throw Error(ErrorCode::NoConvergence, msg.str());
    }
    return solution;
}

/// Uniform mixtures on both sides, together with how far each pure reply
/// strays from the claimed value.
struct EqualizerCertificate {
    double value = 0.0;
    std::vector<double> row_mix;
    std::vector<double> col_mix;
    double column_deviation = 0.0;  // max_j |sum_i row_mix[i] A[i][j] - value|
    double row_deviation = 0.0;     // max_i |sum_j A[i][j] col_mix[j] - value|
    double gap = 0.0;               // best row reply to col_mix minus best column reply to row_mix

    [[nodiscard]] bool holds(double tolerance = kIdentityTolerance) const noexcept {
        return column_deviation <= tolerance && row_deviation <= tolerance;
    }
};

inline EqualizerCertificate uniform_equalizer(const MatrixGame& game, double value) {
    const std::size_t m = game.rows();
    const std::size_t k = game.cols();
    EqualizerCertificate cert;
    cert.value = value;
    cert.row_mix.assign(m, 1.0 / static_cast<double>(m));
    cert.col_mix.assign(k, 1.0 / static_cast<double>(k));
    double best_column_reply = std::numeric_limits<double>::infinity();
    double best_row_reply = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < k; ++j) {
        double v = 0.0;
        for (std::size_t i = 0; i < m; ++i) v += cert.row_mix[i] * game.at(i, j);
        cert.column_deviation = std::max(cert.column_deviation, std::abs(v - value));
        best_column_reply = std::min(best_column_reply, v);
    }
    for (std::size_t i = 0; i < m; ++i) {
        double v = 0.0;
        for (std::size_t j = 0; j < k; ++j) v += game.at(i, j) * cert.col_mix[j];
        cert.row_deviation = std::max(cert.row_deviation, std::abs(v - value));
        best_row_reply = std::max(best_row_reply, v);
    }
    cert.gap = best_row_reply - best_column_reply;
    return cert;
}

/// (n-1)/n, pinned by the uniform equalizer on the reduced game: the uniform
/// guesser earns exactly the value against every prize door, and the uniform
/// hider holds every guess to exactly the value.
inline EqualizerCertificate minimax_value(DoorSet doors) {
    const double n = doors.count();
    auto cert = uniform_equalizer(reduced_game(doors), (n - 1.0) / n);
    if (!cert.holds()) throw std::logic_error("uniform equalizer certificate failed");
    return cert;
}

}  // namespace montyhall
