#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dnb/board.h"
#include "dnb/evolution.h"
#include "dnb/genome.h"
#include "dnb/harness.h"
#include "dnb/network.h"
#include "dnb/players.h"
#include "dnb/rng.h"
#include "dnb/supervised.h"
#include "dnb/util.h"

namespace {

struct CommonArgs {
    std::uint64_t seed = 1;
    std::string out;
    std::string config;
    int threads = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--seed", args.seed, "Master random seed");
    cmd->add_option("--out", args.out, "Output file (stdout when omitted)");
    cmd->add_option("--config", args.config, "key=value config file");
    cmd->add_option("--threads", args.threads, "Worker threads")->check(CLI::PositiveNumber);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        dnb::write_file(out_path, text);
    }
}

int run_simulate(const CommonArgs& args, int games) {
    auto level0 = dnb::make_heuristic_player(0);
    auto level1 = dnb::make_heuristic_player(1);
    auto level2 = dnb::make_heuristic_player(2);
    const dnb::Player* pairs[][2] = {
        {level1.get(), level0.get()},
        {level2.get(), level0.get()},
        {level2.get(), level1.get()},
    };

    dnb::RngStream master(args.seed);
    std::vector<dnb::EvalRecord> records;
    for (std::size_t i = 0; i < 3; ++i) {
        dnb::RngStream stream = master.derive(i);
        records.push_back(
            dnb::evaluate_winrate(*pairs[i][0], *pairs[i][1], games, stream, args.threads));
        std::cerr << records.back().subject << " vs " << records.back().opponent << ": "
                  << records.back().win_rate << " over " << games << " games\n";
    }
    emit(dnb::csv_from_records(records), args.out);
    return 0;
}

int run_evolve(const CommonArgs& args, bool seed_given) {
    if (args.config.empty()) throw dnb::ConfigError("evolve requires --config");
    dnb::EvolutionConfig cfg = dnb::load_config(args.config).evolution;
    if (seed_given) cfg.master_seed = args.seed;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw dnb::ConfigError(e.what());
    }

    std::vector<dnb::Snapshot> snaps = dnb::run_evolution(cfg, args.threads);
    for (const dnb::Snapshot& s : snaps) {
        double best = 0.0;
        for (double f : s.raw_fitness) best = std::max(best, f);
        std::cerr << "gen " << s.generation << ": " << s.cumulative_games
                  << " games, best raw fitness " << best << "\n";
    }
    dnb::save_snapshots(snaps, args.out.empty() ? "snapshots.txt" : args.out);
    return 0;
}

int run_train(const CommonArgs& args, bool seed_given, int games, const std::string& data_path,
              const std::string& save_data_path) {
    dnb::TrainerConfig cfg;
    if (!args.config.empty()) cfg = dnb::load_config(args.config).trainer;
    if (seed_given) cfg.seed = args.seed;
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw dnb::ConfigError(e.what());
    }

    dnb::RngStream master(cfg.seed);
    std::vector<dnb::TrainingExample> data;
    if (!data_path.empty()) {
        data = dnb::load_training_set(data_path);
    } else {
        dnb::RngStream gen_rng = master.derive(1);
        data = dnb::generate_training_set(games, gen_rng, args.threads);
    }
    std::cerr << "training on " << data.size() << " examples\n";
    if (!save_data_path.empty()) dnb::save_training_set(data, save_data_path);

    dnb::RngStream init_rng = master.derive(2);
    dnb::Network net = dnb::random_network(init_rng);
    dnb::RngStream train_rng = master.derive(3);
    net = dnb::train_backprop(net, data, cfg, train_rng);
    dnb::save_network(net, args.out.empty() ? "network.txt" : args.out);
    return 0;
}

int run_evaluate(const CommonArgs& args, const std::string& snapshots_path, int opponent_level,
                 int games_per_member) {
    std::vector<dnb::Snapshot> snaps = dnb::load_snapshots(snapshots_path);
    dnb::RngStream master(args.seed);
    auto curve =
        dnb::evaluate_snapshots(snaps, opponent_level, games_per_member, master, args.threads);
    emit(dnb::csv_from_curve(curve), args.out);
    return 0;
}

int run_oracle(const CommonArgs& args, int rows, int cols, const std::string& moves, int bound) {
    dnb::BoardState state(rows, cols);
    if (!moves.empty()) {
        std::size_t start = 0;
        while (start <= moves.size()) {
            std::size_t comma = moves.find(',', start);
            std::string token = moves.substr(
                start, comma == std::string::npos ? std::string::npos : comma - start);
            if (!token.empty()) state.play(std::stoi(token));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    int value = dnb::minimax_oracle(state, bound);
    std::string text = dnb::render(state) + "\nvalue for side to move: " + std::to_string(value) +
                       "\n";
    emit(text, args.out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dots-and-Boxes neuroevolution laboratory"};
    app.require_subcommand(1);

    CommonArgs sim_args;
    int sim_games = 20000;
    CLI::App* simulate = app.add_subcommand("simulate", "Heuristic benchmark tournaments");
    add_common(simulate, sim_args);
    simulate->add_option("--games", sim_games, "Games per pairing")->check(CLI::PositiveNumber);

    CommonArgs evolve_args;
    CLI::App* evolve = app.add_subcommand("evolve", "Run a GA variant from a config file");
    add_common(evolve, evolve_args);

    CommonArgs train_args;
    int train_games = 800;
    std::string train_data, train_save_data;
    CLI::App* train = app.add_subcommand("train", "Back-propagation baseline");
    add_common(train, train_args);
    train->add_option("--games", train_games, "Games to generate examples from")
        ->check(CLI::PositiveNumber);
    train->add_option("--data", train_data, "Load a training set instead of generating");
    train->add_option("--save-data", train_save_data, "Also write the training set here");

    CommonArgs eval_args;
    std::string eval_snapshots;
    int eval_opponent = 0;
    int eval_games = 300;
    CLI::App* evaluate = app.add_subcommand("evaluate", "Benchmark snapshot populations");
    add_common(evaluate, eval_args);
    evaluate->add_option("--snapshots", eval_snapshots, "Snapshot file from evolve")->required();
    evaluate->add_option("--opponent-level", eval_opponent, "Heuristic opponent (0 or 1)");
    evaluate->add_option("--games-per-member", eval_games, "Evaluation games per member");

    CommonArgs oracle_args;
    int oracle_rows = 1, oracle_cols = 1, oracle_bound = 12;
    std::string oracle_moves;
    CLI::App* oracle = app.add_subcommand("oracle", "Exact value of a small position");
    add_common(oracle, oracle_args);
    oracle->add_option("--rows", oracle_rows, "Board rows")->check(CLI::PositiveNumber);
    oracle->add_option("--cols", oracle_cols, "Board columns")->check(CLI::PositiveNumber);
    oracle->add_option("--moves", oracle_moves, "Comma-separated edges already played");
    oracle->add_option("--bound", oracle_bound, "Maximum open edges to search");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (simulate->parsed()) return run_simulate(sim_args, sim_games);
        if (evolve->parsed()) return run_evolve(evolve_args, evolve->count("--seed") > 0);
        if (train->parsed()) {
            return run_train(train_args, train->count("--seed") > 0, train_games, train_data,
                             train_save_data);
        }
        if (evaluate->parsed()) {
            return run_evaluate(eval_args, eval_snapshots, eval_opponent, eval_games);
        }
        if (oracle->parsed()) {
            return run_oracle(oracle_args, oracle_rows, oracle_cols, oracle_moves, oracle_bound);
        }
    } catch (const dnb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid request: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
