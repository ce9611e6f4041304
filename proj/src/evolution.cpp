#include "dnb/evolution.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dnb/network.h"
#include "dnb/util.h"

namespace dnb {

namespace {

constexpr std::uint64_t kInitTag = 1;
constexpr std::uint64_t kFitnessTag = 2;
constexpr std::uint64_t kBreedTag = 3;

constexpr int kMatchRows = 3;
constexpr int kMatchCols = 3;

}  // namespace

MatchResult play_match(const Player& a, const Player& b, RngStream& rng) {
    MatchResult result;
    for (int game = 0; game < 2; ++game) {
        const Player& first = game == 0 ? a : b;
        const Player& second = game == 0 ? b : a;
        GameScore score = play_game(first, second, kMatchRows, kMatchCols, rng);
        int a_boxes = game == 0 ? score.first : score.second;
        int b_boxes = game == 0 ? score.second : score.first;
        if (a_boxes > b_boxes) {
            result.points[0] += 0.5;
            result.games_won[0] += 1;
        } else if (b_boxes > a_boxes) {
            result.points[1] += 0.5;
            result.games_won[1] += 1;
        } else {
            result.points[0] += 0.25;  // unreachable on an odd box count
            result.points[1] += 0.25;
        }
    }
    return result;
}

void EvolutionConfig::validate() const {
    if (population_size < 2) throw std::invalid_argument("population_size must be at least 2");
    if (crossover_prob < 0.0 || crossover_prob > 1.0) {
        throw std::invalid_argument("crossover_prob must lie in [0,1]");
    }
    if (mutation_prob < 0.0 || mutation_prob > 1.0) {
        throw std::invalid_argument("mutation_prob must lie in [0,1]");
    }
    if (fitness_floor < 0.0) throw std::invalid_argument("fitness_floor must be non-negative");
    if (generations < 1) throw std::invalid_argument("generations must be positive");
    if (snapshot_interval < 1) throw std::invalid_argument("snapshot_interval must be positive");
    switch (variant) {
        case VariantKind::Direct:
            if (direct_opponent_level < 0 || direct_opponent_level > 2) {
                throw std::invalid_argument("direct opponent level must be 0, 1 or 2");
            }
            if (direct_matches_per_individual < 1) {
                throw std::invalid_argument("direct_matches_per_individual must be positive");
            }
            if (scaling_best_share * population_size <= 1.0) {
                throw std::invalid_argument(
                    "scaling_best_share * population_size must exceed 1 for linear scaling");
            }
            break;
        case VariantKind::RoundRobin:
            break;
        case VariantKind::ImplicitFitnessSharing: {
            if (ifs_antigen_fraction <= 0.0 || ifs_antigen_fraction > 1.0 ||
                ifs_antibody_fraction <= 0.0 || ifs_antibody_fraction > 1.0) {
                throw std::invalid_argument("ifs fractions must lie in (0,1]");
            }
            int antigens = static_cast<int>(std::floor(ifs_antigen_fraction * population_size));
            int antibodies = static_cast<int>(std::floor(ifs_antibody_fraction * population_size));
            if (antigens < 1 || antibodies < 1 || antibodies > population_size - 1) {
                throw std::invalid_argument("population too small for the ifs fractions");
            }
            if (ifs_pool_points <= 0.0) throw std::invalid_argument("ifs_pool_points must be positive");
            if (ifs_shares_win_win < ifs_shares_win_loss || ifs_shares_win_loss < 0) {
                throw std::invalid_argument("ifs shares must be non-negative and ordered");
            }
            break;
        }
    }
}

std::string variant_name(const EvolutionConfig& cfg) {
    switch (cfg.variant) {
        case VariantKind::Direct:
            return "direct:" + std::to_string(cfg.direct_opponent_level);
        case VariantKind::RoundRobin:
            return "roundrobin";
        case VariantKind::ImplicitFitnessSharing:
            return "ifs";
    }
    throw std::logic_error("unreachable");
}

void parse_variant(const std::string& text, EvolutionConfig& cfg) {
    if (text == "roundrobin") {
        cfg.variant = VariantKind::RoundRobin;
        return;
    }
    if (text == "ifs") {
        cfg.variant = VariantKind::ImplicitFitnessSharing;
        return;
    }
    if (text.rfind("direct:", 0) == 0 && text.size() == 8 && text[7] >= '0' && text[7] <= '2') {
        cfg.variant = VariantKind::Direct;
        cfg.direct_opponent_level = text[7] - '0';
        return;
    }
    throw std::invalid_argument("unknown variant '" + text +
                                "' (expected direct:0|1|2, roundrobin or ifs)");
}

std::vector<double> linear_scale(const std::vector<double>& raw, double c) {
    if (raw.empty()) throw std::invalid_argument("empty fitness vector");
    if (c <= 1.0) throw std::invalid_argument("scaling multiple must exceed 1");
    double sum = 0.0, fmax = raw[0], fmin = raw[0];
    for (double f : raw) {
        if (f < 0.0) throw std::invalid_argument("fitness values must be non-negative");
        sum += f;
        fmax = std::max(fmax, f);
        fmin = std::min(fmin, f);
    }
    if (sum == 0.0) throw std::invalid_argument("all-zero fitness cannot be scaled");
    double mean = sum / static_cast<double>(raw.size());
    if (fmax <= mean) return raw;  // all values equal

    double a, b;
    if (fmin * (c - 1.0) >= c * mean - fmax) {
        // Map the mean to itself and the max to c * mean.
        a = (c - 1.0) * mean / (fmax - mean);
        b = mean * (fmax - c * mean) / (fmax - mean);
    } else {
        // That map would push the minimum negative; pin min at 0 instead.
        a = mean / (mean - fmin);
        b = -fmin * mean / (mean - fmin);
    }
    std::vector<double> scaled(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        scaled[i] = std::max(0.0, a * raw[i] + b);
    }
    return scaled;
}

std::vector<double> ifs_award_points(double pool, const std::vector<double>& shares) {
    double total = 0.0;
    for (double s : shares) total += s;
    std::vector<double> awards(shares.size(), 0.0);
    if (total <= 0.0) return awards;
    for (std::size_t i = 0; i < shares.size(); ++i) {
        awards[i] = (pool * shares[i]) / total;
    }
    return awards;
}

FitnessVector fitness_direct(const std::vector<const Player*>& pop, int opponent_level,
                             const EvolutionConfig& cfg, RngStream& rng, int threads) {
    const int n = static_cast<int>(pop.size());
    const int matches = cfg.direct_matches_per_individual;
    auto opponent = make_heuristic_player(opponent_level);

    FitnessVector fv;
    fv.raw.assign(n, 0.0);
    parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
        double points = 0.0;
        for (int m = 0; m < matches; ++m) {
            RngStream stream = rng.derive(static_cast<std::uint64_t>(i) * matches + m);
            points += play_match(*pop[i], *opponent, stream).points[0];
        }
        fv.raw[i] = points + cfg.fitness_floor;
    });
    fv.games_consumed = static_cast<long long>(n) * matches * 2;
    fv.scaled = linear_scale(fv.raw, cfg.scaling_best_share * cfg.population_size);
    return fv;
}

FitnessVector fitness_roundrobin(const std::vector<const Player*>& pop, RngStream& rng,
                                 int threads) {
    const int n = static_cast<int>(pop.size());
    if (n < 2) throw std::invalid_argument("round robin needs at least two players");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }

    std::vector<MatchResult> results(pairs.size());
    parallel_for(pairs.size(), threads, [&](std::size_t p) {
        RngStream stream = rng.derive(p);
        results[p] = play_match(*pop[pairs[p].first], *pop[pairs[p].second], stream);
    });

    FitnessVector fv;
    fv.raw.assign(n, 0.0);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        fv.raw[pairs[p].first] += results[p].points[0];
        fv.raw[pairs[p].second] += results[p].points[1];
    }
    fv.games_consumed = static_cast<long long>(pairs.size()) * 2;
    fv.scaled = fv.raw;  // scaling deliberately not applied
    return fv;
}

namespace {

// k distinct indices from [0, n) excluding `exclude`, via partial
// Fisher-Yates on the remaining pool.
std::vector<int> sample_without_replacement(int n, int k, int exclude, RngStream& rng) {
    std::vector<int> pool;
    pool.reserve(n);
    for (int i = 0; i < n; ++i) {
        if (i != exclude) pool.push_back(i);
    }
    if (k > static_cast<int>(pool.size())) throw std::invalid_argument("sample larger than pool");
    for (int i = 0; i < k; ++i) {
        std::size_t j = i + rng.uniform_index(pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    return pool;
}

}  // namespace

FitnessVector fitness_ifs(const std::vector<const Player*>& pop, const EvolutionConfig& cfg,
                          RngStream& rng, int threads) {
    const int n = static_cast<int>(pop.size());
    const int n_antigens = static_cast<int>(std::floor(cfg.ifs_antigen_fraction * n));
    const int n_antibodies = static_cast<int>(std::floor(cfg.ifs_antibody_fraction * n));
    if (n_antigens < 1 || n_antibodies < 1 || n_antibodies > n - 1) {
        throw std::invalid_argument("population too small for the ifs fractions");
    }

    std::vector<int> antigens = sample_without_replacement(n, n_antigens, -1, rng);
    std::vector<std::vector<int>> antibodies(antigens.size());
    for (std::size_t a = 0; a < antigens.size(); ++a) {
        antibodies[a] = sample_without_replacement(n, n_antibodies, antigens[a], rng);
    }

    // Match ordinal = antigen slot * antibodies-per-antigen + antibody slot.
    std::vector<int> antibody_wins(antigens.size() * antibodies[0].size());
    parallel_for(antibody_wins.size(), threads, [&](std::size_t o) {
        std::size_t a = o / n_antibodies;
        std::size_t k = o % n_antibodies;
        RngStream stream = rng.derive(o);
        MatchResult m = play_match(*pop[antibodies[a][k]], *pop[antigens[a]], stream);
        antibody_wins[o] = m.games_won[0];
    });

    FitnessVector fv;
    fv.raw.assign(n, 0.0);
    std::vector<double> shares(n_antibodies);
    for (std::size_t a = 0; a < antigens.size(); ++a) {
        for (int k = 0; k < n_antibodies; ++k) {
            int wins = antibody_wins[a * n_antibodies + k];
            shares[k] = wins == 2   ? cfg.ifs_shares_win_win
                        : wins == 1 ? cfg.ifs_shares_win_loss
                                    : 0.0;
        }
        std::vector<double> awards = ifs_award_points(cfg.ifs_pool_points, shares);
        for (int k = 0; k < n_antibodies; ++k) {
            fv.raw[antibodies[a][k]] += awards[k];
        }
    }
    for (double& f : fv.raw) f += cfg.fitness_floor;
    fv.games_consumed = static_cast<long long>(antigens.size()) * n_antibodies * 2;
    fv.scaled = fv.raw;  // scaling deliberately not applied
    return fv;
}

std::vector<Genome> next_generation(const std::vector<Genome>& pop, const FitnessVector& fitness,
                                    const EvolutionConfig& cfg, RngStream& rng) {
    const std::size_t n = pop.size();
    const std::vector<double>& sel =
        cfg.variant == VariantKind::Direct ? fitness.scaled : fitness.raw;
    if (sel.size() != n) throw std::invalid_argument("fitness size does not match population");

    double total = 0.0;
    std::size_t elite = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (sel[i] < 0.0) throw std::invalid_argument("fitness values must be non-negative");
        total += sel[i];
        if (sel[i] > sel[elite]) elite = i;
    }
    if (total <= 0.0) throw std::invalid_argument("all-zero fitness cannot drive selection");

    auto spin = [&]() -> std::size_t {
        double r = rng.uniform_real() * total;
        double acc = 0.0;
        std::size_t last_positive = elite;
        for (std::size_t i = 0; i < n; ++i) {
            if (sel[i] <= 0.0) continue;
            acc += sel[i];
            last_positive = i;
            if (r < acc) return i;
        }
        return last_positive;  // guards accumulated rounding at the wheel's end
    };

    std::vector<std::size_t> parents(n - 1);
    for (auto& p : parents) p = spin();

    std::vector<Genome> children;
    children.reserve(n - 1);
    for (std::size_t t = 0; t + 1 < parents.size(); t += 2) {
        const Genome& p1 = pop[parents[t]];
        const Genome& p2 = pop[parents[t + 1]];
        if (rng.bernoulli(cfg.crossover_prob)) {
            auto [c1, c2] = crossover(p1, p2, rng);
            children.push_back(c1);
            children.push_back(c2);
        } else {
            children.push_back(p1);
            children.push_back(p2);
        }
    }
    if (parents.size() % 2 == 1) children.push_back(pop[parents.back()]);

    for (Genome& child : children) mutate(child, cfg.mutation_prob, rng);

    std::vector<Genome> next;
    next.reserve(n);
    next.push_back(pop[elite]);
    next.insert(next.end(), children.begin(), children.end());
    return next;
}

long long games_per_generation(const EvolutionConfig& cfg) {
    const long long n = cfg.population_size;
    switch (cfg.variant) {
        case VariantKind::Direct:
            return n * cfg.direct_matches_per_individual * 2;
        case VariantKind::RoundRobin:
            return n * (n - 1);
        case VariantKind::ImplicitFitnessSharing: {
            long long antigens = static_cast<long long>(std::floor(cfg.ifs_antigen_fraction * n));
            long long antibodies =
                static_cast<long long>(std::floor(cfg.ifs_antibody_fraction * n));
            return antigens * antibodies * 2;
        }
    }
    throw std::logic_error("unreachable");
}

std::vector<Snapshot> run_evolution(const EvolutionConfig& cfg, int threads) {
    cfg.validate();
    RngStream master(cfg.master_seed);

    RngStream init_rng = master.derive(kInitTag);
    std::vector<Genome> pop;
    pop.reserve(cfg.population_size);
    for (int i = 0; i < cfg.population_size; ++i) pop.push_back(random_genome(init_rng));

    std::vector<Snapshot> snapshots;
    long long cumulative = 0;
    const std::string name = variant_name(cfg);

    for (int g = 0; g < cfg.generations; ++g) {
        std::vector<NetworkPlayer> phenotypes;
        phenotypes.reserve(pop.size());
        for (const Genome& genome : pop) phenotypes.emplace_back(decode(genome));
        std::vector<const Player*> players;
        players.reserve(pop.size());
        for (const NetworkPlayer& p : phenotypes) players.push_back(&p);

        RngStream fit_rng = master.derive(kFitnessTag, static_cast<std::uint64_t>(g));
        FitnessVector fv;
        switch (cfg.variant) {
            case VariantKind::Direct:
                fv = fitness_direct(players, cfg.direct_opponent_level, cfg, fit_rng, threads);
                break;
            case VariantKind::RoundRobin:
                fv = fitness_roundrobin(players, fit_rng, threads);
                break;
            case VariantKind::ImplicitFitnessSharing:
                fv = fitness_ifs(players, cfg, fit_rng, threads);
                break;
        }
        cumulative += fv.games_consumed;

        if (g % cfg.snapshot_interval == 0 || g == cfg.generations - 1) {
            snapshots.push_back(Snapshot{g, cumulative, name, cfg.master_seed, pop, fv.raw});
        }

        if (g + 1 < cfg.generations) {
            RngStream breed_rng = master.derive(kBreedTag, static_cast<std::uint64_t>(g));
            pop = next_generation(pop, fv, cfg, breed_rng);
        }
    }
    return snapshots;
}

std::string format_snapshot(const Snapshot& snap) {
    std::ostringstream out;
    out << "gen=" << snap.generation << " games=" << snap.cumulative_games
        << " variant=" << snap.variant << " seed=" << snap.seed << '\n';
    for (std::size_t i = 0; i < snap.genomes.size(); ++i) {
        out << to_hex(snap.genomes[i]) << ' ' << fmt_double(snap.raw_fitness[i]) << '\n';
    }
    return out.str();
}

std::vector<Snapshot> parse_snapshots(const std::string& text) {
    std::vector<Snapshot> snaps;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line.rfind("gen=", 0) == 0) {
            Snapshot snap;
            std::istringstream header(line);
            std::string token;
            while (header >> token) {
                auto eq = token.find('=');
                if (eq == std::string::npos) {
                    throw std::runtime_error("malformed snapshot header at line " +
                                             std::to_string(lineno));
                }
                std::string key = token.substr(0, eq);
                std::string value = token.substr(eq + 1);
                if (key == "gen") {
                    snap.generation = std::stoi(value);
                } else if (key == "games") {
                    snap.cumulative_games = std::stoll(value);
                } else if (key == "variant") {
                    snap.variant = value;
                } else if (key == "seed") {
                    snap.seed = std::stoull(value);
                } else {
                    throw std::runtime_error("unknown snapshot header field '" + key + "'");
                }
            }
            snaps.push_back(std::move(snap));
        } else {
            if (snaps.empty()) {
                throw std::runtime_error("snapshot member line before any header");
            }
            auto space = line.find(' ');
            if (space == std::string::npos) {
                throw std::runtime_error("malformed snapshot member at line " +
                                         std::to_string(lineno));
            }
            snaps.back().genomes.push_back(from_hex(line.substr(0, space)));
            snaps.back().raw_fitness.push_back(parse_double(line.substr(space + 1)));
        }
    }
    return snaps;
}

void save_snapshots(const std::vector<Snapshot>& snaps, const std::string& path) {
    std::string out;
    for (const Snapshot& s : snaps) out += format_snapshot(s);
    write_file(path, out);
}

std::vector<Snapshot> load_snapshots(const std::string& path) {
    return parse_snapshots(read_file(path));
}

}  // namespace dnb
