#include "dnb/supervised.h"

#include <sstream>
#include <stdexcept>

#include "dnb/board.h"
#include "dnb/players.h"
#include "dnb/util.h"

namespace dnb {

void TrainerConfig::validate() const {
    if (learning_rate <= 0.0) throw std::invalid_argument("learning_rate must be positive");
    if (epochs < 1) throw std::invalid_argument("epochs must be positive");
    if (target_scale <= 0.0) throw std::invalid_argument("target_scale must be positive");
}

namespace {

void record_game(int game_index, RngStream& rng, std::vector<TrainingExample>& out) {
    BoxCompletionPlayer teacher;
    RandomPlayer filler;
    Seat teacher_seat = game_index % 2 == 0 ? Seat::P1 : Seat::P2;

    BoardState state(3, 3);
    while (!state.is_terminal()) {
        bool teacher_turn = state.to_move() == teacher_seat;
        if (teacher_turn) {
            TrainingExample ex;
            encode_board(state, ex.board);
            bool any_completion = false;
            for (EdgeIndex e = 0; e < Network::kOutputCount; ++e) {
                if (state.edge_occupied(e)) {
                    ex.targets[e] = kIllegalTarget;
                } else {
                    ex.targets[e] = state.boxes_completed_by(e);
                    if (ex.targets[e] > 0) any_completion = true;
                }
            }
            if (any_completion) out.push_back(ex);
        }
        const Player& mover = teacher_turn ? static_cast<const Player&>(teacher)
                                           : static_cast<const Player&>(filler);
        state.play(mover.choose(state, rng));
    }
}

}  // namespace

std::vector<TrainingExample> generate_training_set(int n_games, RngStream& rng, int threads) {
    if (n_games < 1) throw std::invalid_argument("n_games must be positive");
    std::vector<std::vector<TrainingExample>> per_game(n_games);
    parallel_for(static_cast<std::size_t>(n_games), threads, [&](std::size_t g) {
        RngStream stream = rng.derive(g);
        record_game(static_cast<int>(g), stream, per_game[g]);
    });
    std::vector<TrainingExample> out;
    for (auto& game : per_game) {
        out.insert(out.end(), game.begin(), game.end());
    }
    return out;
}

std::array<double, Network::kOutputCount> masked_error(
    const std::array<double, Network::kOutputCount>& outputs, const TrainingExample& example,
    double target_scale) {
    std::array<double, Network::kOutputCount> err{};
    for (int e = 0; e < Network::kOutputCount; ++e) {
        if (example.targets[e] == kIllegalTarget) continue;
        err[e] = outputs[e] - target_scale * example.targets[e];
    }
    return err;
}

double masked_loss(const std::array<double, Network::kOutputCount>& outputs,
                   const TrainingExample& example, double target_scale) {
    auto err = masked_error(outputs, example, target_scale);
    double sum = 0.0;
    for (double e : err) sum += e * e;
    return 0.5 * sum;
}

namespace {

// Both the trainer and the gradient check go through here so they cannot
// drift apart. grad is laid out exactly like flatten().
void accumulate_gradient(const Network& net, const TrainingExample& example, double target_scale,
                         std::vector<double>& grad) {
    Activations act;
    forward(net, example.board, act);
    auto err = masked_error(act.output, example, target_scale);

    std::array<double, Network::kOutputCount> delta_out;
    for (int k = 0; k < Network::kOutputCount; ++k) {
        delta_out[k] = err[k] * act.output[k] * (1.0 - act.output[k]);
    }
    std::array<double, Network::kHiddenCount> delta_hidden;
    for (int j = 0; j < Network::kHiddenCount; ++j) {
        double back = 0.0;
        for (int k = 0; k < Network::kOutputCount; ++k) {
            back += delta_out[k] * net.output_weights[k][j];
        }
        delta_hidden[j] = back * act.hidden[j] * (1.0 - act.hidden[j]);
    }

    grad.assign(Network::kParameterCount, 0.0);
    std::size_t i = 0;
    for (int j = 0; j < Network::kHiddenCount; ++j) {
        for (int e = 0; e < Network::kInputCount; ++e) {
            grad[i++] = delta_hidden[j] * example.board[e];
        }
        grad[i++] = -delta_hidden[j];  // thresholds enter the sum negated
    }
    for (int k = 0; k < Network::kOutputCount; ++k) {
        for (int j = 0; j < Network::kHiddenCount; ++j) {
            grad[i++] = delta_out[k] * act.hidden[j];
        }
        grad[i++] = -delta_out[k];
    }
}

void apply_step(Network& net, const std::vector<double>& grad, double step) {
    std::size_t i = 0;
    for (int j = 0; j < Network::kHiddenCount; ++j) {
        for (int e = 0; e < Network::kInputCount; ++e) {
            net.hidden_weights[j][e] += step * grad[i++];
        }
        net.hidden_thresholds[j] += step * grad[i++];
    }
    for (int k = 0; k < Network::kOutputCount; ++k) {
        for (int j = 0; j < Network::kHiddenCount; ++j) {
            net.output_weights[k][j] += step * grad[i++];
        }
        net.output_thresholds[k] += step * grad[i++];
    }
}

}  // namespace

std::vector<double> loss_gradient(const Network& net, const TrainingExample& example,
                                  double target_scale) {
    std::vector<double> grad;
    accumulate_gradient(net, example, target_scale, grad);
    return grad;
}

Network train_backprop(Network net, const std::vector<TrainingExample>& data,
                       const TrainerConfig& cfg, RngStream& rng) {
    cfg.validate();
    if (data.empty()) throw std::invalid_argument("training data must be non-empty");

    std::vector<std::size_t> order(data.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    std::vector<double> grad;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        for (std::size_t i = order.size(); i > 1; --i) {
            std::swap(order[i - 1], order[rng.uniform_index(i)]);
        }
        for (std::size_t idx : order) {
            accumulate_gradient(net, data[idx], cfg.target_scale, grad);
            apply_step(net, grad, -cfg.learning_rate);
        }
    }
    return net;
}

std::string format_training_set(const std::vector<TrainingExample>& data) {
    std::ostringstream out;
    for (const TrainingExample& ex : data) {
        for (double b : ex.board) out << (b != 0.0 ? '1' : '0');
        out << ' ';
        for (int e = 0; e < Network::kOutputCount; ++e) {
            if (e > 0) out << ',';
            if (ex.targets[e] == kIllegalTarget) {
                out << 'x';
            } else {
                out << ex.targets[e];
            }
        }
        out << '\n';
    }
    return out.str();
}

std::vector<TrainingExample> parse_training_set(const std::string& text) {
    std::vector<TrainingExample> data;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto fail = [&](const std::string& what) {
            throw std::runtime_error("training set line " + std::to_string(lineno) + ": " + what);
        };
        if (line.size() < static_cast<std::size_t>(Network::kInputCount) + 2 ||
            line[Network::kInputCount] != ' ') {
            fail("expected 24 board characters then a space");
        }
        TrainingExample ex;
        for (int e = 0; e < Network::kInputCount; ++e) {
            char c = line[e];
            if (c != '0' && c != '1') fail("board characters must be 0 or 1");
            ex.board[e] = c == '1' ? 1.0 : 0.0;
        }
        std::istringstream rest(line.substr(Network::kInputCount + 1));
        std::string token;
        int e = 0;
        while (std::getline(rest, token, ',')) {
            if (e >= Network::kOutputCount) fail("too many target tokens");
            if (token == "x") {
                ex.targets[e] = kIllegalTarget;
            } else if (token == "0" || token == "1" || token == "2") {
                ex.targets[e] = token[0] - '0';
            } else {
                fail("target token must be x, 0, 1 or 2");
            }
            bool occupied = ex.board[e] != 0.0;
            if (occupied != (ex.targets[e] == kIllegalTarget)) {
                fail("illegal markers must match occupied edges");
            }
            ++e;
        }
        if (e != Network::kOutputCount) fail("expected 24 target tokens");
        data.push_back(ex);
    }
    return data;
}

void save_training_set(const std::vector<TrainingExample>& data, const std::string& path) {
    write_file(path, format_training_set(data));
}

std::vector<TrainingExample> load_training_set(const std::string& path) {
    return parse_training_set(read_file(path));
}

}  // namespace dnb
