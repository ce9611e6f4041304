#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "dnb/board.h"
#include "dnb/players.h"
#include "dnb/rng.h"

namespace dnb {

// Fixed-topology feed-forward net for the 3x3 board: one input and one
// output per edge, one hidden unit per box. Units compute
// sigmoid(sum(w*x) - threshold).
struct Network {
    static constexpr int kInputCount = 24;
    static constexpr int kHiddenCount = 9;
    static constexpr int kOutputCount = 24;
    // Per hidden unit: kInputCount weights + threshold; per output unit:
    // kHiddenCount weights + threshold.
    static constexpr int kParameterCount =
        kHiddenCount * (kInputCount + 1) + kOutputCount * (kHiddenCount + 1);

    std::array<std::array<double, kInputCount>, kHiddenCount> hidden_weights{};
    std::array<double, kHiddenCount> hidden_thresholds{};
    std::array<std::array<double, kHiddenCount>, kOutputCount> output_weights{};
    std::array<double, kOutputCount> output_thresholds{};
};

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Edge occupancy as 0/1 inputs, indexed like the board's edges.
void encode_board(const BoardState& state, std::array<double, Network::kInputCount>& out);

struct Activations {
    std::array<double, Network::kHiddenCount> hidden{};
    std::array<double, Network::kOutputCount> output{};
};

void forward(const Network& net, const std::array<double, Network::kInputCount>& input,
             Activations& act);

// Highest-activation legal edge; exact ties broken uniformly.
EdgeIndex choose_move(const Network& net, const BoardState& state, RngStream& rng);

// Hand-built weights implementing the box-completion policy: a hidden unit
// fires only when its box has three sides, and each output sums the units of
// its adjacent boxes.
Network build_level1_network();

Network random_network(RngStream& rng, double range = 0.5);

// Parameter vector in storage order: hidden units first (weights then
// threshold, unit by unit), then output units likewise.
std::vector<double> flatten(const Network& net);
Network unflatten(const std::vector<double>& params);

void save_network(const Network& net, const std::string& path);
Network load_network(const std::string& path);

class NetworkPlayer final : public Player {
public:
    explicit NetworkPlayer(Network net, std::string name = "network")
        : net_(std::move(net)), name_(std::move(name)) {}

    EdgeIndex choose(const BoardState& state, RngStream& rng) const override {
        return choose_move(net_, state, rng);
    }
    std::string name() const override { return name_; }
    const Network& network() const { return net_; }

private:
    Network net_;
    std::string name_;
};

}  // namespace dnb
