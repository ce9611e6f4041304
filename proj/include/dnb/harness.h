#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "dnb/board.h"
#include "dnb/evolution.h"
#include "dnb/players.h"
#include "dnb/rng.h"
#include "dnb/supervised.h"

namespace dnb {

struct EvalRecord {
    std::string subject;
    std::string opponent;
    int games = 0;
    int wins = 0;
    double win_rate = 0.0;
    double ci95 = 0.0;  // normal-approximation 95% halfwidth
    // Wins broken down by which role the subject played (games alternate).
    int wins_as_first = 0;
    int wins_as_second = 0;
};

struct CurvePoint {
    std::string variant;
    long long cumulative_games = 0;
    double best_win_rate = 0.0;
};

// n_games fresh 3x3 games with the first move alternating between the two
// players; n_games must be even so the roles balance.
EvalRecord evaluate_winrate(const Player& a, const Player& b, int n_games, RngStream& rng,
                            int threads = 1);

// Benchmarks every member of every snapshot against a heuristic opponent and
// keeps the best member's win rate per snapshot.
std::vector<CurvePoint> evaluate_snapshots(const std::vector<Snapshot>& snapshots,
                                           int opponent_level, int games_per_member,
                                           RngStream& rng, int threads = 1);

// Exact score differential for the player to move, both sides optimal. The
// search explores every legal move, including declining available boxes, so
// positions must have at most max_remaining unoccupied edges.
int minimax_oracle(const BoardState& state, int max_remaining = 12);

std::string csv_from_records(const std::vector<EvalRecord>& records);
std::string csv_from_curve(const std::vector<CurvePoint>& curve);
std::vector<EvalRecord> parse_records_csv(const std::string& text);
std::vector<CurvePoint> parse_curve_csv(const std::string& text);

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// key=value lines covering both config structs; '#' starts a comment and
// blank lines are skipped. Unknown keys are errors.
struct FileConfig {
    EvolutionConfig evolution;
    TrainerConfig trainer;
};

FileConfig parse_config(const std::string& text);
FileConfig load_config(const std::string& path);

}  // namespace dnb
