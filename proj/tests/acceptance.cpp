// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Reference values come from tests/oracle.hpp or are
// transcribed constants, never from the code under test.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "montyhall/cli.hpp"
#include "montyhall/montyhall.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace montyhall;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok || !passed) {
            passed = passed && ok;
            return;
        }
        passed = false;
        detail = what;
    }
};

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string cli_output(const std::vector<std::string>& args, int* code = nullptr) {
    std::istringstream in;
    std::ostringstream out;
    std::ostringstream err;
    const int rc = cli::run_cli(args, in, out, err);
    if (code) *code = rc;
    return out.str();
}

// Transcribed 3-door table, rows 1swsw..3mama, columns (1,2) (1,3) (2,1) (2,3) (3,1) (3,2).
const int kGoldenTable[12][6] = {
    {0, 0, 1, 1, 1, 1}, {1, 0, 0, 0, 1, 1}, {0, 1, 1, 1, 0, 0}, {1, 1, 0, 0, 0, 0},
    {1, 1, 0, 0, 1, 1}, {0, 0, 1, 0, 1, 1}, {1, 1, 0, 1, 0, 0}, {0, 0, 1, 1, 0, 0},
    {1, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 0}, {1, 1, 0, 0, 0, 1}, {0, 0, 0, 0, 1, 1},
};
const char* const kGoldenLabels[12] = {"1swsw", "1masw", "1swma", "1mama", "2swsw", "2masw",
                                       "2swma", "2mama", "3swsw", "3masw", "3swma", "3mama"};

Outcome golden_table() {
    Outcome o;
    int code = 0;
    const std::string text = cli_output({"table", "--doors", "3"}, &code);
    o.require(code == 0, "table exited with " + std::to_string(code));
    std::istringstream lines(text);
    std::string header;
    std::getline(lines, header);
    o.require(header.rfind("θ,w", 0) == 0 && header.find("1,2 1,3 2,1 2,3 3,1 3,2") != std::string::npos,
              "header row: " + header);
    int row = 0;
    std::string line;
    while (std::getline(lines, line) && row < 12) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string label;
        fields >> label;
        o.require(label == kGoldenLabels[row], "row " + std::to_string(row + 1) + " label " + label);
        for (int j = 0; j < 6; ++j) {
            int cell = -1;
            fields >> cell;
            o.require(cell == kGoldenTable[row][j], label + " column " + std::to_string(j + 1));
        }
        ++row;
    }
    o.require(row == 12, "expected 12 rows, read " + std::to_string(row));
    o.require(text.find("\"2,2\" is theta=2, w=3") != std::string::npos, "missing column normalization note");
    return o;
}

Outcome classic_value() {
    Outcome o;
    const Strategy s = Strategy::always_switch(DoorSet(3), 1);
    const double exact = expected_win(uniform_prior(3), fair_reveal(3), s);
    o.require(std::abs(exact - 2.0 / 3) <= 1e-12, "exact value " + cli::format_number(exact));
    const SimulationReport mc = estimate_win(uniform_prior(3), fair_reveal(3), s, 1000000, 20260101);
    o.require(std::abs(mc.estimate - 2.0 / 3) <= 4 * mc.std_error,
              "estimate " + cli::format_number(mc.estimate) + " std_error " + cli::format_number(mc.std_error));
    return o;
}

Outcome conditional_odds() {
    Outcome o;
    const OddsRatio exact = switch_odds(uniform_prior(3), fair_reveal(3), 1, 2);
    const auto reduced = exact.reduced();
    o.require(reduced && reduced->first == 2 && reduced->second == 1, "odds do not reduce to 2:1");
    const OddsEstimate est = estimate_conditional_odds(uniform_prior(3), fair_reveal(3), 1, 2, 1000000, 20260102);
    const auto ratio = est.odds.ratio();
    o.require(ratio.has_value(), "empirical odds undefined");
    if (ratio) {
        o.require(std::abs(*ratio / 2.0 - 1.0) <= 0.05, "empirical odds " + cli::format_number(*ratio));
    }
    return o;
}

Outcome threshold() {
    Outcome o;
    const Prior p = test_support::skewed_prior();
    const std::vector<std::pair<double, Verdict>> fixed{
        {0.5, Verdict::Switch}, {0.75, Verdict::Indifferent}, {0.9, Verdict::Match}};
    for (const auto& [q, expected] : fixed) {
        const OddsRatio r = switch_odds(p, test_support::three_door_reveal_with_row1(q), 1, 2);
        o.require(r.verdict() == expected, "q=" + cli::format_number(q) + " verdict " + to_string(r.verdict()));
    }
    for (int k = 0; k <= 20; ++k) {
        const double q = k / 20.0;
        const RevealMechanism reveal = test_support::three_door_reveal_with_row1(q);
        const bool favored = switch_odds(p, reveal, 1, 2).verdict() == Verdict::Switch;
        // Same question through the oracle: does switching at 2 beat matching there?
        const auto [prize_at_y, prize_at_x] =
            oracle::offered_joint(test_support::to_vector(p), test_support::to_matrix(reveal), 0, 1);
        const bool oracle_favored = prize_at_y - prize_at_x > 1e-12;
        o.require(favored == (k < 15), "sign at q=" + cli::format_number(q));
        o.require(oracle_favored == (k < 15), "oracle sign at q=" + cli::format_number(q));
    }
    return o;
}

Outcome bayes_theorem() {
    Outcome o;
    test_support::RandomInputs gen(20260105);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 2;
        const Prior p = gen.prior(n);
        const RevealMechanism q = gen.reveal(n);
        const auto pv = test_support::to_vector(p);
        const auto qm = test_support::to_matrix(q);
        double oracle_best = 0.0;
        for (const auto& s : oracle::all_strategies(n)) {
            oracle_best = std::max(oracle_best, oracle::process_win_probability(pv, qm, s));
        }
        const double target = 1.0 - *std::min_element(pv.begin(), pv.end());
        const StrategyValue brute = exhaustive_best(p, q);
        const BayesSolution bayes = bayes_optimal(p, q);
        const double attained = oracle::process_win_probability(pv, qm, test_support::to_plain(bayes.strategy));
        const std::string tag = "pair " + std::to_string(trial);
        o.require(std::abs(brute.value - target) <= 1e-12, tag + ": exhaustive value");
        o.require(std::abs(oracle_best - target) <= 1e-12, tag + ": oracle value");
        o.require(std::abs(attained - target) <= 1e-12, tag + ": (theta*, a*) value");
        o.require(bayes.strategy.always_switch() && pv[static_cast<std::size_t>(bayes.theta_star - 1)] ==
                                                        *std::min_element(pv.begin(), pv.end()),
                  tag + ": not (theta*, a*)");
    }
    return o;
}

Outcome dominance_theorem() {
    Outcome o;
    for (int n = 3; n <= 5; ++n) {
        const DoorSet doors(n);
        o.require(verify_dominance_theorem(doors), "theorem fails at n=" + std::to_string(n));
        std::vector<Strategy> expected;
        for (Door x = 1; x <= n; ++x) expected.push_back(Strategy::always_switch(doors, x));
        o.require(undominated_set(doors) == expected, "undominated set at n=" + std::to_string(n));

        // Independent pairwise scan over oracle rows.
        const auto all = oracle::all_strategies(n);
        std::vector<std::vector<int>> rows;
        for (const auto& s : all) rows.push_back(oracle::scenario_row(n, s));
        int undominated = 0;
        for (std::size_t a = 0; a < all.size(); ++a) {
            bool dominated = false;
            for (std::size_t b = 0; b < all.size() && !dominated; ++b) dominated = oracle::row_dominates(rows[b], rows[a]);
            if (dominated) continue;
            ++undominated;
            bool switches = true;
            for (int y = 0; y < n; ++y) switches = switches && (y == all[a].x || all[a].switch_at[static_cast<std::size_t>(y)]);
            o.require(switches, "oracle finds an undominated non-switch strategy at n=" + std::to_string(n));
        }
        o.require(undominated == n, "oracle undominated count at n=" + std::to_string(n));
    }
    return o;
}

Outcome key_lemma() {
    Outcome o;
    for (int n = 3; n <= 6; ++n) o.require(verify_key_lemma(DoorSet(n)), "fails at n=" + std::to_string(n));
    return o;
}

Outcome unlucky() {
    Outcome o;
    for (int n = 3; n <= 5; ++n) {
        const DoorSet doors(n);
        for (const auto& s : enumerate_strategies(doors)) {
            const Door u = unlucky_door(s);
            const auto row = oracle::scenario_row(n, test_support::to_plain(s));
            // Oracle row order: prize ascending, then offered door ascending, skipping the prize.
            for (int k = 0; k < n - 1; ++k) {
                o.require(row[static_cast<std::size_t>((u - 1) * (n - 1) + k)] == 0, s.label() + ": wins with prize at u");
            }
            const Strategy switcher = Strategy::always_switch(doors, u);
            o.require(switcher == s || weakly_dominates(switcher, s, doors), s.label() + ": not dominated from u");
        }
    }
    return o;
}

Outcome minimax() {
    Outcome o;
    for (int n = 3; n <= 10; ++n) {
        const EqualizerCertificate cert = minimax_value(DoorSet(n));
        o.require(cert.holds() && std::abs(cert.value - (n - 1.0) / n) <= 1e-12, "certificate at n=" + std::to_string(n));
    }
    for (int n = 3; n <= 8; ++n) {
        const MinimaxSolution sol = solve_matrix_game(reduced_game(DoorSet(n)), 1e-3);
        o.require(std::abs(sol.value - (n - 1.0) / n) <= 1e-3, "fictitious play at n=" + std::to_string(n));
    }
    return o;
}

Outcome formula_equivalence() {
    Outcome o;
    test_support::RandomInputs gen(20260110);
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 3 + trial % 3;
        const Prior p = gen.prior(n);
        const RevealMechanism q = gen.reveal(n);
        const Strategy s = gen.strategy(n);
        const double by_cases = expected_win_by_cases(p, q, s);
        const double closed = expected_win_closed_form(p, q, s);
        const double process =
            oracle::process_win_probability(test_support::to_vector(p), test_support::to_matrix(q), test_support::to_plain(s));
        worst = std::max({worst, std::abs(by_cases - closed), std::abs(by_cases - process)});
    }
    o.require(worst <= 1e-12, "largest disagreement " + cli::format_number(worst));
    return o;
}

Outcome determinism() {
    Outcome o;
    const std::string path = (std::filesystem::temp_directory_path() / "montyhall_acceptance.json").string();
    std::ofstream(path) << R"({"doors":3,"p":["4/9","3/9","2/9"],"q":"fair"})";
    for (const std::string workers : {"1", "4"}) {
        for (const bool json : {false, true}) {
            std::vector<std::string> args{"simulate", "--config", path,    "--strategy", "x=3,switch", "--trials",
                                          "300000",   "--seed",   "12345", "--workers",  workers};
            if (json) args.emplace_back("--json");
            int code_a = 0;
            int code_b = 0;
            const std::string a = cli_output(args, &code_a);
            const std::string b = cli_output(args, &code_b);
            o.require(code_a == 0 && code_b == 0, "simulate failed");
            o.require(!a.empty() && a == b, "outputs differ with workers=" + workers);
        }
    }
    std::filesystem::remove(path);
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_ms;  // 0 when the criterion sets no time limit
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "golden 3-door payoff table", 1.0, golden_table},
        {2, "classic value 2/3 and Monte Carlo agreement", 1000.0, classic_value},
        {3, "conditional odds 2:1 and empirical odds", 0.0, conditional_odds},
        {4, "threshold at q = 3/4 for p = (4/9, 3/9, 2/9)", 0.0, threshold},
        {5, "Bayes optimum equals 1 - min p on 200 random pairs", 10000.0, bayes_theorem},
        {6, "dominance theorem and undominated set, n = 3..5", 5000.0, dominance_theorem},
        {7, "key lemma, n = 3..6", 1.0, key_lemma},
        {8, "unlucky door, n = 3..5", 0.0, unlucky},
        {9, "minimax value (n-1)/n", 30000.0, minimax},
        {10, "expected-win forms agree on 1000 random triples", 0.0, formula_equivalence},
        {11, "simulate is byte-identical across runs", 0.0, determinism},
    };

    // Warm up code paths once so the millisecond budgets measure steady-state work.
    (void)cli_output({"table", "--doors", "3"});
    (void)verify_key_lemma(DoorSet(3));

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.passed = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double ms = elapsed_ms(start);
        if (outcome.passed && c.limit_ms > 0 && ms >= c.limit_ms) {
            outcome.passed = false;
            outcome.detail = "took " + cli::format_number(ms) + " ms, limit " + cli::format_number(c.limit_ms) + " ms";
        }
        failures += outcome.passed ? 0 : 1;
        std::printf("%s  %2d  %-52s %10.3f ms%s%s\n", outcome.passed ? "PASS" : "FAIL", c.id, c.name, ms,
                    outcome.passed ? "" : "  ", outcome.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
    return failures == 0 ? 0 : 1;
}
