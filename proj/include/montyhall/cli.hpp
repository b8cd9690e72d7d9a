#pragma once

// Command-line front end. run_cli() takes the arguments after the program
// name plus the three streams, so the whole tool can be driven in-process.
//
// Exit codes: 0 success, 1 domain or verification failure, 2 usage error.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "montyhall/bayes.hpp"
#include "montyhall/config.hpp"
#include "montyhall/dominance.hpp"
#include "montyhall/minimax.hpp"
#include "montyhall/montecarlo.hpp"
#include "montyhall/payoff.hpp"
#include "montyhall/verify.hpp"

namespace montyhall::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Largest door count accepted by `table` (n * 2^(n-1) rows).
inline constexpr int kMaxTableDoors = 12;

/// Shortest decimal that reads back to the same double.
inline std::string format_number(double v) {
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, end) : std::string("nan");
}

inline std::string scenario_label(const Scenario& sc) {
    return std::to_string(sc.theta) + "," + std::to_string(sc.w);
}

inline std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

inline GameConfig load_config(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open config file " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_config(buffer.str());
}

// ---------------------------------------------------------------- table

inline std::string table_note(int n) {
    std::string note =
        "note: w is the door left closed when the first choice hides the prize, so w never equals theta";
    if (n == 3) note += "; the column sometimes labelled \"2,2\" is theta=2, w=3";
    return note;
}

inline std::string render_table_text(const PayoffTable& table, int n) {
    std::size_t label_width = std::string("θ,w").size() - 1;  // θ is two bytes, one column
    for (const auto& s : table.rows()) label_width = std::max(label_width, s.label().size());

    std::ostringstream out;
    out << "θ,w" << std::string(label_width - 3 + 2, ' ');
    for (const auto& sc : table.cols()) out << ' ' << std::setw(static_cast<int>(scenario_label(sc).size())) << scenario_label(sc);
    out << '\n';
    Door previous_x = table.rows().front().x();
    for (std::size_t i = 0; i < table.rows().size(); ++i) {
        const Strategy& s = table.rows()[i];
        if (s.x() != previous_x) {
            out << '\n';
            previous_x = s.x();
        }
        out << std::left << std::setw(static_cast<int>(label_width) + 2) << s.label() << std::right;
        for (std::size_t j = 0; j < table.cols().size(); ++j) {
            out << ' ' << std::setw(static_cast<int>(scenario_label(table.cols()[j]).size())) << table.at(i, j);
        }
        out << '\n';
    }
    out << '\n' << table_note(n) << '\n';
    return out.str();
}

inline Json table_json(const PayoffTable& table, int n) {
    Json cols = Json::array();
    for (const auto& sc : table.cols()) cols.push_back(Json{{"theta", sc.theta}, {"w", sc.w}});
    Json rows = Json::array();
    for (std::size_t i = 0; i < table.rows().size(); ++i) {
        const Strategy& s = table.rows()[i];
        rows.push_back(Json{{"label", s.label()}, {"x", s.x()}, {"cells", table.row_cells(i)}});
    }
    return Json{{"doors", n}, {"columns", cols}, {"rows", rows}, {"note", table_note(n)}};
}

// ---------------------------------------------------------------- dominance

inline Json report_json(const DominanceReport& r) {
    Json cells = Json::array();
    for (const auto& c : r.proof_cells) {
        cells.push_back(Json{{"theta", c.scenario.theta},
                             {"w", c.scenario.w},
                             {"dominated", c.payoff_dominated},
                             {"dominator", c.payoff_dominator}});
    }
    return Json{{"dominated", r.dominated.label()},
                {"dominator", r.dominator.label()},
                {"witness", Json{{"theta", r.witness.theta}, {"w", r.witness.w}}},
                {"proof_cells", cells}};
}

// ---------------------------------------------------------------- simulate

inline Json simulation_json(const SimulationReport& r, const Strategy& s, double exact) {
    return Json{{"strategy", s.label()},   {"trials", r.trials},       {"wins", r.wins},
                {"estimate", r.estimate},  {"std_error", r.std_error}, {"exact", exact},
                {"seed", r.seed},          {"workers", r.workers},     {"generator", r.generator}};
}

// ---------------------------------------------------------------- play

/// Line-oriented game against the host. Reads the player's moves from `in`
/// until EOF or "q".
inline void play_session(const GameConfig& config, std::uint64_t seed, std::istream& in, std::ostream& out) {
    const BayesSolution best = bayes_optimal(config.prior, config.reveal);
    const DoorSet doors(config.doors);
    RandomStream rng(seed, 0);
    long long rounds = 0;
    long long wins = 0;

    auto read_token = [&](const std::string& prompt) -> std::optional<std::string> {
        out << prompt << std::flush;
        std::string line;
        if (!std::getline(in, line)) return std::nullopt;
        line.erase(0, line.find_first_not_of(" \t\r"));
        line.erase(line.find_last_not_of(" \t\r") + 1);
        return line;
    };

    out << "seed " << seed << ", " << config.doors << " doors. Enter q to stop.\n";
    while (true) {
        const Door theta = static_cast<Door>(rng.sample(config.prior.values())) + 1;
        out << "\nround " << rounds + 1 << '\n';

        Door x = 0;
        while (x == 0) {
            const auto token = read_token("pick a door (1-" + std::to_string(config.doors) + "): ");
            if (!token || *token == "q") {
                out << "\nfinal score " << wins << "/" << rounds << '\n';
                return;
            }
            int pick = 0;
            const auto [end, ec] = std::from_chars(token->data(), token->data() + token->size(), pick);
            if (ec == std::errc{} && end == token->data() + token->size() && doors.contains(pick)) {
                x = pick;
            } else {
                out << "not a door: " << *token << '\n';
            }
        }

        const Door offered = theta != x ? theta : static_cast<Door>(rng.sample(config.reveal.row(x))) + 1;
        std::vector<std::string> opened;
        for (Door d = 1; d <= config.doors; ++d) {
            if (d != x && d != offered) opened.push_back(config.door_name(d));
        }
        out << "the host opens door" << (opened.size() > 1 ? "s " : " ");
        for (std::size_t i = 0; i < opened.size(); ++i) out << (i ? ", " : "") << opened[i];
        out << ": empty. Door " << config.door_name(x) << " and door " << config.door_name(offered)
            << " remain closed.\n";

        std::optional<Action> action;
        while (!action) {
            const auto token = read_token("match (keep " + std::to_string(x) + ") or switch (to " +
                                          std::to_string(offered) + ")? [m/s]: ");
            if (!token || *token == "q") {
                out << "\nfinal score " << wins << "/" << rounds << '\n';
                return;
            }
            if (*token == "m" || *token == "match") action = Action::Match;
            if (*token == "s" || *token == "switch") action = Action::Switch;
        }

        const bool won = win_payoff(theta, x, *action) == 1;
        ++rounds;
        wins += won ? 1 : 0;
        out << "the prize is behind door " << config.door_name(theta) << ". " << (won ? "You win." : "You lose.")
            << '\n';
        out << "score " << wins << "/" << rounds << " = "
            << format_number(static_cast<double>(wins) / static_cast<double>(rounds)) << "; best possible "
            << format_number(best.value) << " (start at door " << best.theta_star << ", always switch)\n";
    }
}

// ---------------------------------------------------------------- dispatch

inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of the n-door Monty Hall game", "montyhall"};
    app.require_subcommand(1);

    int table_doors = 3;
    bool table_as_json = false;
    auto* table = app.add_subcommand("table", "0/1 payoff table of every strategy against every scenario");
    table->add_option("--doors", table_doors, "number of doors")->check(CLI::Range(3, kMaxTableDoors));
    table->add_flag("--json", table_as_json, "JSON output");

    std::string config_path;
    bool bayes_as_json = false;
    auto* bayes = app.add_subcommand("bayes", "Bayes-optimal strategy for a configured prior and host");
    bayes->add_option("--config", config_path, "game config (JSON)")->required();
    bayes->add_flag("--json", bayes_as_json, "JSON output");

    int odds_from = 0;
    int odds_to = 0;
    bool odds_as_json = false;
    auto* odds = app.add_subcommand("odds", "odds of switching from one door to an offered door");
    odds->add_option("--config", config_path, "game config (JSON)")->required();
    odds->add_option("--from", odds_from, "initial door")->required();
    odds->add_option("--to", odds_to, "offered door")->required();
    odds->add_flag("--json", odds_as_json, "JSON output");

    int dominance_doors = 3;
    bool dominance_as_json = false;
    auto* dominance = app.add_subcommand("dominance", "undominated strategies and dominance evidence");
    dominance->add_option("--doors", dominance_doors, "number of doors")->check(CLI::Range(3, 1000));
    dominance->add_flag("--json", dominance_as_json, "JSON output");

    int minimax_doors = 3;
    std::string solver = "certificate";
    double tolerance = kDefaultSolverTolerance;
    long long max_rounds = kDefaultSolverRounds;
    bool minimax_as_json = false;
    auto* minimax = app.add_subcommand("minimax", "value of the game against an adversarial prize placement");
    minimax->add_option("--doors", minimax_doors, "number of doors")->required()->check(CLI::Range(3, 1000));
    minimax->add_option("--solver", solver, "certificate (exact) or fictitious (iterative)")
        ->check(CLI::IsMember({"certificate", "fictitious"}));
    minimax->add_option("--tolerance", tolerance, "duality gap target for fictitious play")
        ->check(CLI::PositiveNumber);
    minimax->add_option("--max-rounds", max_rounds, "round limit for fictitious play")->check(CLI::PositiveNumber);
    minimax->add_flag("--json", minimax_as_json, "JSON output");

    std::string strategy_spec;
    long long trials = 0;
    std::uint64_t sim_seed = 0;
    int workers = 1;
    bool simulate_as_json = false;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of a strategy's winning probability");
    simulate->add_option("--config", config_path, "game config (JSON)")->required();
    simulate->add_option("--strategy", strategy_spec, "x=K,switch | x=K,match | x=K,a=swma...")->required();
    simulate->add_option("--trials", trials, "number of rounds")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim_seed, "64-bit seed")->required();
    simulate->add_option("--workers", workers, "parallel substreams")->check(CLI::Range(1, 1024));
    simulate->add_flag("--json", simulate_as_json, "JSON output");

    int doors_max = 6;
    auto* verify = app.add_subcommand("verify", "run the self-check suite");
    verify->add_option("--doors-max", doors_max, "largest door count to check")->check(CLI::Range(3, 64));

    std::optional<std::uint64_t> play_seed;
    auto* play = app.add_subcommand("play", "play rounds against the host in the terminal");
    play->add_option("--config", config_path, "game config (JSON)")->required();
    play->add_option("--seed", play_seed, "64-bit seed (random when omitted)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (table->parsed()) {
            const PayoffTable t = payoff_table(DoorSet(table_doors));
            out << (table_as_json ? dump(table_json(t, table_doors)) : render_table_text(t, table_doors));
        } else if (bayes->parsed()) {
            const GameConfig config = load_config(config_path);
            const BayesSolution sol = bayes_optimal(config.prior, config.reveal);
            if (bayes_as_json) {
                out << dump(Json{{"door", sol.theta_star}, {"value", sol.value}, {"strategy", sol.strategy.label()}});
            } else {
                out << "optimal strategy: " << sol.strategy.label() << " (start at door "
                    << config.door_name(sol.theta_star) << ", always switch)\n"
                    << "least likely door: " << config.door_name(sol.theta_star)
                    << " with p = " << format_number(config.prior.at(sol.theta_star)) << '\n'
                    << "winning probability: " << format_number(sol.value) << '\n';
            }
        } else if (odds->parsed()) {
            const GameConfig config = load_config(config_path);
            const OddsRatio r = switch_odds(config.prior, config.reveal, odds_from, odds_to);
            const auto reduced = r.reduced();
            const std::string reduced_text =
                reduced ? std::to_string(reduced->first) + ":" + std::to_string(reduced->second) : "";
            if (odds_as_json) {
                out << dump(Json{{"from", odds_from},
                                 {"to", odds_to},
                                 {"for_switch", r.for_switch},
                                 {"for_match", r.for_match},
                                 {"ratio", reduced ? Json(reduced_text) : Json(nullptr)},
                                 {"verdict", to_string(r.verdict())}});
            } else {
                out << "odds switch:match from door " << config.door_name(odds_from) << " to door "
                    << config.door_name(odds_to) << " = " << format_number(r.for_switch) << " : "
                    << format_number(r.for_match);
                if (reduced) out << " (" << reduced_text << ")";
                out << '\n' << to_string(r.verdict()) << '\n';
            }
        } else if (dominance->parsed()) {
            const DominanceAnalysis analysis = analyze_dominance(DoorSet(dominance_doors));
            if (dominance_as_json) {
                Json undominated = Json::array();
                for (const auto& s : analysis.undominated) undominated.push_back(s.label());
                Json reports = Json::array();
                for (const auto& r : analysis.reports) reports.push_back(report_json(r));
                out << dump(Json{{"doors", dominance_doors}, {"undominated", undominated}, {"reports", reports}});
            } else {
                out << "undominated:";
                for (const auto& s : analysis.undominated) out << ' ' << s.label();
                out << "\ndominated (" << analysis.reports.size() << "):\n";
                for (const auto& r : analysis.reports) {
                    out << "  " << r.dominated.label() << " is weakly dominated by " << r.dominator.label()
                        << " (strictly at " << scenario_label(r.witness) << ")\n";
                }
            }
        } else if (minimax->parsed()) {
            const DoorSet doors(minimax_doors);
            Json doc{{"doors", minimax_doors}, {"solver", solver}};
            if (solver == "certificate") {
                const EqualizerCertificate cert = minimax_value(doors);
                doc["value"] = cert.value;
                doc["row_mix"] = cert.row_mix;
                doc["col_mix"] = cert.col_mix;
                doc["gap"] = cert.gap;
            } else {
                const MinimaxSolution sol = solve_matrix_game(reduced_game(doors), tolerance, max_rounds);
                doc["value"] = sol.value;
                doc["row_mix"] = sol.row_mix;
                doc["col_mix"] = sol.col_mix;
                doc["gap"] = sol.gap;
                doc["rounds"] = sol.rounds;
            }
            if (minimax_as_json) {
                out << dump(doc);
            } else {
                out << "minimax winning probability: " << format_number(doc["value"].get<double>()) << " ("
                    << solver << ", gap " << format_number(doc["gap"].get<double>()) << ")\n";
                out << "guesser: start at each door with equal weight and always switch; "
                       "hider: place the prize uniformly\n";
            }
        } else if (simulate->parsed()) {
            const GameConfig config = load_config(config_path);
            const Strategy s = parse_strategy_spec(strategy_spec, DoorSet(config.doors));
            const SimulationReport r = estimate_win(config.prior, config.reveal, s, trials, sim_seed, workers);
            const double exact = expected_win(config.prior, config.reveal, s);
            if (simulate_as_json) {
                out << dump(simulation_json(r, s, exact));
            } else {
                out << "strategy " << s.label() << ": " << r.wins << " wins in " << r.trials << " rounds\n"
                    << "estimate " << format_number(r.estimate) << " +/- " << format_number(r.std_error)
                    << " (exact " << format_number(exact) << ")\n"
                    << "seed " << r.seed << ", workers " << r.workers << ", generator " << r.generator << '\n';
            }
        } else if (verify->parsed()) {
            const auto results = run_verification(doors_max);
            int failures = 0;
            for (const auto& r : results) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name;
                if (!r.passed) {
                    out << ": " << r.detail;
                    err << "verification failed: " << r.name << '\n';
                    ++failures;
                }
                out << '\n';
            }
            out << (results.size() - static_cast<std::size_t>(failures)) << "/" << results.size()
                << " checks passed\n";
            return failures == 0 ? kExitOk : kExitFailure;
        } else if (play->parsed()) {
            const GameConfig config = load_config(config_path);
            const std::uint64_t seed = play_seed ? *play_seed : (std::uint64_t{std::random_device{}()} << 32) ^
                                                                    std::random_device{}();
            play_session(config, seed, in, out);
        }
    } catch (const Error& e) {
        err << "error";
        if (!e.path().empty()) err << " at " << e.path();
        err << ": " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace montyhall::cli
