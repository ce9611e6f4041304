#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dnb/network.h"
#include "dnb/rng.h"

namespace dnb {

// A recorded decision point: the board as the mover saw it, and for every
// edge either "illegal" (already drawn) or the number of boxes the move
// would have completed.
inline constexpr int kIllegalTarget = -1;

struct TrainingExample {
    std::array<double, Network::kInputCount> board{};
    std::array<int, Network::kOutputCount> targets{};
};

struct TrainerConfig {
    double learning_rate = 0.1;
    int epochs = 30;
    std::uint64_t seed = 1;
    double target_scale = 0.5;  // maps box counts {0,1,2} onto {0, 0.5, 1}

    void validate() const;  // throws std::invalid_argument
};

// Plays level-1 vs level-0 games (alternating who moves first) and records
// every level-1 decision. Examples where no legal move completes a box are
// dropped.
std::vector<TrainingExample> generate_training_set(int n_games, RngStream& rng, int threads = 1);

// Per-edge error: output minus scaled target on legal edges, zero on illegal
// ones. Loss is half the squared error sum.
std::array<double, Network::kOutputCount> masked_error(
    const std::array<double, Network::kOutputCount>& outputs, const TrainingExample& example,
    double target_scale);
double masked_loss(const std::array<double, Network::kOutputCount>& outputs,
                   const TrainingExample& example, double target_scale);

// Gradient of the masked loss with respect to every parameter, in the same
// order as flatten().
std::vector<double> loss_gradient(const Network& net, const TrainingExample& example,
                                  double target_scale);

// Online gradient descent, example order reshuffled each epoch.
Network train_backprop(Network net, const std::vector<TrainingExample>& data,
                       const TrainerConfig& cfg, RngStream& rng);

// One example per line: 24 board characters, a space, 24 comma-separated
// target tokens from {x, 0, 1, 2}.
std::string format_training_set(const std::vector<TrainingExample>& data);
std::vector<TrainingExample> parse_training_set(const std::string& text);
void save_training_set(const std::vector<TrainingExample>& data, const std::string& path);
std::vector<TrainingExample> load_training_set(const std::string& path);

}  // namespace dnb
