#include "dnb/harness.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "dnb/genome.h"
#include "dnb/network.h"
#include "dnb/util.h"

namespace dnb {

EvalRecord evaluate_winrate(const Player& a, const Player& b, int n_games, RngStream& rng,
                            int threads) {
    if (n_games < 2 || n_games % 2 != 0) {
        throw std::invalid_argument("n_games must be even and at least 2");
    }
    std::vector<std::uint8_t> a_won(n_games, 0);
    parallel_for(static_cast<std::size_t>(n_games), threads, [&](std::size_t i) {
        RngStream stream = rng.derive(i);
        bool a_first = i % 2 == 0;
        GameScore score = a_first ? play_game(a, b, 3, 3, stream) : play_game(b, a, 3, 3, stream);
        int a_boxes = a_first ? score.first : score.second;
        int b_boxes = a_first ? score.second : score.first;
        a_won[i] = a_boxes > b_boxes ? 1 : 0;
    });

    EvalRecord rec;
    rec.subject = a.name();
    rec.opponent = b.name();
    rec.games = n_games;
    for (int i = 0; i < n_games; ++i) {
        if (!a_won[i]) continue;
        ++rec.wins;
        if (i % 2 == 0) {
            ++rec.wins_as_first;
        } else {
            ++rec.wins_as_second;
        }
    }
    double p = static_cast<double>(rec.wins) / n_games;
    rec.win_rate = p;
    rec.ci95 = 1.96 * std::sqrt(p * (1.0 - p) / n_games);
    return rec;
}

std::vector<CurvePoint> evaluate_snapshots(const std::vector<Snapshot>& snapshots,
                                           int opponent_level, int games_per_member,
                                           RngStream& rng, int threads) {
    if (opponent_level != 0 && opponent_level != 1) {
        throw std::invalid_argument("snapshot evaluation opponent must be level 0 or 1");
    }
    auto opponent = make_heuristic_player(opponent_level);

    std::vector<CurvePoint> curve;
    curve.reserve(snapshots.size());
    for (std::size_t si = 0; si < snapshots.size(); ++si) {
        const Snapshot& snap = snapshots[si];
        std::vector<double> rates(snap.genomes.size(), 0.0);
        parallel_for(snap.genomes.size(), threads, [&](std::size_t mi) {
            NetworkPlayer member(decode(snap.genomes[mi]));
            RngStream stream = rng.derive(si, mi);
            rates[mi] = evaluate_winrate(member, *opponent, games_per_member, stream).win_rate;
        });
        double best = rates.empty() ? 0.0 : *std::max_element(rates.begin(), rates.end());
        curve.push_back(CurvePoint{snap.variant, snap.cumulative_games, best});
    }
    return curve;
}

namespace {

std::string occupancy_key(const BoardState& state) {
    const int n = state.geometry().edge_count();
    std::string key((n + 7) / 8, '\0');
    for (EdgeIndex e = 0; e < n; ++e) {
        if (state.edge_occupied(e)) key[e >> 3] |= static_cast<char>(1 << (e & 7));
    }
    return key;
}

// The value of a position is the same whichever seat is to move, so the memo
// can key on occupancy alone.
int oracle_search(const BoardState& state, std::unordered_map<std::string, int>& memo) {
    if (state.is_terminal()) return 0;
    std::string key = occupancy_key(state);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int best = std::numeric_limits<int>::min();
    const int n = state.geometry().edge_count();
    for (EdgeIndex e = 0; e < n; ++e) {
        if (state.edge_occupied(e)) continue;
        BoardState child = state;
        int gained = child.play(e);
        int value;
        if (child.to_move() == state.to_move()) {
            value = gained + oracle_search(child, memo);
        } else {
            value = gained - oracle_search(child, memo);
        }
        best = std::max(best, value);
    }
    memo.emplace(std::move(key), best);
    return best;
}

}  // namespace

int minimax_oracle(const BoardState& state, int max_remaining) {
    int remaining = state.geometry().edge_count() - state.moves_played();
    if (remaining > max_remaining) {
        throw std::invalid_argument("position has " + std::to_string(remaining) +
                                    " open edges, above the search bound of " +
                                    std::to_string(max_remaining));
    }
    std::unordered_map<std::string, int> memo;
    return oracle_search(state, memo);
}

std::string csv_from_records(const std::vector<EvalRecord>& records) {
    std::ostringstream out;
    out << "subject,opponent,games,wins,win_rate,ci95\n";
    for (const EvalRecord& r : records) {
        out << r.subject << ',' << r.opponent << ',' << r.games << ',' << r.wins << ','
            << fmt_double(r.win_rate) << ',' << fmt_double(r.ci95) << '\n';
    }
    return out.str();
}

std::string csv_from_curve(const std::vector<CurvePoint>& curve) {
    std::ostringstream out;
    out << "variant,cumulative_games,best_win_rate\n";
    for (const CurvePoint& p : curve) {
        out << p.variant << ',' << p.cumulative_games << ',' << fmt_double(p.best_win_rate)
            << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string> split_csv_row(const std::string& line, std::size_t expected) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (fields.size() != expected) {
        throw std::runtime_error("expected " + std::to_string(expected) + " csv fields, found " +
                                 std::to_string(fields.size()) + " in: " + line);
    }
    return fields;
}

}  // namespace

std::vector<EvalRecord> parse_records_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "subject,opponent,games,wins,win_rate,ci95") {
        throw std::runtime_error("missing eval record csv header");
    }
    std::vector<EvalRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv_row(line, 6);
        EvalRecord r;
        r.subject = f[0];
        r.opponent = f[1];
        r.games = std::stoi(f[2]);
        r.wins = std::stoi(f[3]);
        r.win_rate = parse_double(f[4]);
        r.ci95 = parse_double(f[5]);
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<CurvePoint> parse_curve_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "variant,cumulative_games,best_win_rate") {
        throw std::runtime_error("missing curve csv header");
    }
    std::vector<CurvePoint> curve;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto f = split_csv_row(line, 3);
        curve.push_back(CurvePoint{f[0], std::stoll(f[1]), parse_double(f[2])});
    }
    return curve;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

long long config_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' needs an integer, got '" + value + "'");
    }
}

std::uint64_t config_u64(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        std::uint64_t v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' needs an unsigned integer, got '" + value +
                          "'");
    }
}

double config_double(const std::string& key, const std::string& value) {
    try {
        return parse_double(value);
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' needs a number, got '" + value + "'");
    }
}

}  // namespace

FileConfig parse_config(const std::string& text) {
    FileConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key=value, got '" +
                              line + "'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));

        EvolutionConfig& evo = cfg.evolution;
        TrainerConfig& trainer = cfg.trainer;
        if (key == "population_size") {
            evo.population_size = static_cast<int>(config_int(key, value));
        } else if (key == "crossover_prob") {
            evo.crossover_prob = config_double(key, value);
        } else if (key == "mutation_prob") {
            evo.mutation_prob = config_double(key, value);
        } else if (key == "variant") {
            try {
                parse_variant(value, evo);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(e.what());
            }
        } else if (key == "direct_matches_per_individual") {
            evo.direct_matches_per_individual = static_cast<int>(config_int(key, value));
        } else if (key == "ifs_antigen_fraction") {
            evo.ifs_antigen_fraction = config_double(key, value);
        } else if (key == "ifs_antibody_fraction") {
            evo.ifs_antibody_fraction = config_double(key, value);
        } else if (key == "ifs_pool_points") {
            evo.ifs_pool_points = config_double(key, value);
        } else if (key == "ifs_shares_win_win") {
            evo.ifs_shares_win_win = static_cast<int>(config_int(key, value));
        } else if (key == "ifs_shares_win_loss") {
            evo.ifs_shares_win_loss = static_cast<int>(config_int(key, value));
        } else if (key == "fitness_floor") {
            evo.fitness_floor = config_double(key, value);
        } else if (key == "scaling_best_share") {
            evo.scaling_best_share = config_double(key, value);
        } else if (key == "generations") {
            evo.generations = static_cast<int>(config_int(key, value));
        } else if (key == "snapshot_interval") {
            evo.snapshot_interval = static_cast<int>(config_int(key, value));
        } else if (key == "master_seed") {
            evo.master_seed = config_u64(key, value);
        } else if (key == "learning_rate") {
            trainer.learning_rate = config_double(key, value);
        } else if (key == "epochs") {
            trainer.epochs = static_cast<int>(config_int(key, value));
        } else if (key == "seed") {
            trainer.seed = config_u64(key, value);
        } else if (key == "target_scale") {
            trainer.target_scale = config_double(key, value);
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

FileConfig load_config(const std::string& path) {
    try {
        return parse_config(read_file(path));
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError(e.what());
    }
}

}  // namespace dnb
