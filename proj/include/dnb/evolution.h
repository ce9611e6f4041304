#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dnb/genome.h"
#include "dnb/players.h"
#include "dnb/rng.h"

namespace dnb {

// Two games on fresh 3x3 boards, each side moving first once. A game win is
// worth half a point, so match points per side are 0, 0.5 or 1.
struct MatchResult {
    double points[2] = {0.0, 0.0};
    int games_won[2] = {0, 0};
};

MatchResult play_match(const Player& a, const Player& b, RngStream& rng);

enum class VariantKind { Direct, RoundRobin, ImplicitFitnessSharing };

struct EvolutionConfig {
    int population_size = 100;
    double crossover_prob = 0.6;
    double mutation_prob = 0.005;
    VariantKind variant = VariantKind::Direct;
    int direct_opponent_level = 0;
    int direct_matches_per_individual = 10;
    double ifs_antigen_fraction = 0.25;
    double ifs_antibody_fraction = 0.33;
    double ifs_pool_points = 33.0;
    int ifs_shares_win_win = 4;
    int ifs_shares_win_loss = 1;
    double fitness_floor = 1e-6;
    double scaling_best_share = 0.10;
    int generations = 150;
    int snapshot_interval = 10;
    std::uint64_t master_seed = 1;

    void validate() const;  // throws std::invalid_argument
};

// "direct:<level>", "roundrobin" or "ifs"; used in config files, snapshot
// headers and CSV output.
std::string variant_name(const EvolutionConfig& cfg);
void parse_variant(const std::string& text, EvolutionConfig& cfg);

struct FitnessVector {
    std::vector<double> raw;
    std::vector<double> scaled;
    long long games_consumed = 0;
};

// Ten two-game matches per individual against the fixed heuristic opponent;
// raw fitness is match points plus a small floor so nobody is unselectable.
// scaled holds the linearly scaled values used for selection.
FitnessVector fitness_direct(const std::vector<const Player*>& pop, int opponent_level,
                             const EvolutionConfig& cfg, RngStream& rng, int threads = 1);

// Every pair plays one match; a match win is one point, a split half. No
// floor and no scaling (scaled mirrors raw).
FitnessVector fitness_roundrobin(const std::vector<const Player*>& pop, RngStream& rng,
                                 int threads = 1);

// Sampled antigens defend against sampled antibodies; each antigen's point
// pool is split among its antibodies proportional to shares earned (2-0 wins
// a full share block, a split a single share). No scaling.
FitnessVector fitness_ifs(const std::vector<const Player*>& pop, const EvolutionConfig& cfg,
                          RngStream& rng, int threads = 1);

// Goldberg's linear scaling: mean preserved, max mapped to c * mean; falls
// back to pinning the minimum at zero when that map would go negative, and
// to the identity when all values are equal.
std::vector<double> linear_scale(const std::vector<double>& raw, double c);

// pool * share / total for each entry; all zeros when no shares were earned.
std::vector<double> ifs_award_points(double pool, const std::vector<double>& shares);

// Elitism (one verbatim copy of the best), roulette selection, single-point
// crossover on consecutive pairs, then bitwise mutation of the non-elite.
// Selection uses scaled fitness for Direct and raw otherwise.
std::vector<Genome> next_generation(const std::vector<Genome>& pop, const FitnessVector& fitness,
                                    const EvolutionConfig& cfg, RngStream& rng);

struct Snapshot {
    int generation = 0;
    long long cumulative_games = 0;
    std::string variant;
    std::uint64_t seed = 0;
    std::vector<Genome> genomes;
    std::vector<double> raw_fitness;
};

// Evaluate -> record -> breed, snapshotting every snapshot_interval
// generations and at the end. Snapshots hold the population as evaluated,
// before turnover.
std::vector<Snapshot> run_evolution(const EvolutionConfig& cfg, int threads = 1);

long long games_per_generation(const EvolutionConfig& cfg);

// Text record: "gen=<g> games=<n> variant=<name> seed=<s>" then one
// "<hex genome> <raw fitness>" line per member. Files may concatenate
// several records.
std::string format_snapshot(const Snapshot& snap);
std::vector<Snapshot> parse_snapshots(const std::string& text);
void save_snapshots(const std::vector<Snapshot>& snaps, const std::string& path);
std::vector<Snapshot> load_snapshots(const std::string& path);

}  // namespace dnb
