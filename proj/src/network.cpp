#include "dnb/network.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dnb/util.h"

namespace dnb {

void encode_board(const BoardState& state, std::array<double, Network::kInputCount>& out) {
    if (state.geometry().edge_count() != Network::kInputCount) {
        throw std::invalid_argument("board does not match the network's input size");
    }
    for (EdgeIndex e = 0; e < Network::kInputCount; ++e) {
        out[e] = state.edge_occupied(e) ? 1.0 : 0.0;
    }
}

void forward(const Network& net, const std::array<double, Network::kInputCount>& input,
             Activations& act) {
    for (int j = 0; j < Network::kHiddenCount; ++j) {
        double sum = -net.hidden_thresholds[j];
        const auto& w = net.hidden_weights[j];
        for (int e = 0; e < Network::kInputCount; ++e) sum += w[e] * input[e];
        act.hidden[j] = sigmoid(sum);
    }
    for (int k = 0; k < Network::kOutputCount; ++k) {
        double sum = -net.output_thresholds[k];
        const auto& w = net.output_weights[k];
        for (int j = 0; j < Network::kHiddenCount; ++j) sum += w[j] * act.hidden[j];
        act.output[k] = sigmoid(sum);
    }
}

EdgeIndex choose_move(const Network& net, const BoardState& state, RngStream& rng) {
    std::array<double, Network::kInputCount> input;
    encode_board(state, input);
    Activations act;
    forward(net, input, act);

    EdgeIndex best[Network::kOutputCount];
    int n_best = 0;
    double best_value = 0.0;
    for (EdgeIndex e = 0; e < Network::kOutputCount; ++e) {
        if (state.edge_occupied(e)) continue;
        double v = act.output[e];
        if (n_best == 0 || v > best_value) {
            best_value = v;
            n_best = 0;
        }
        if (v == best_value) best[n_best++] = e;
    }
    if (n_best == 0) throw std::logic_error("no legal moves");
    return best[rng.uniform_index(static_cast<std::size_t>(n_best))];
}

Network build_level1_network() {
    BoardGeometry geom{3, 3};
    Network net;
    // A box's unit sees +8 from each of its four edges against a threshold of
    // 20: three occupied sides put it at +4 (fires), two leave it at -4.
    for (int b = 0; b < geom.box_count(); ++b) {
        for (EdgeIndex e : geom.box_edges(b / geom.cols, b % geom.cols)) {
            net.hidden_weights[b][e] = 8.0;
        }
        net.hidden_thresholds[b] = 20.0;
    }
    // Each edge output collects +10 from every adjacent box's unit, so any
    // fired unit dominates the threshold of 2.
    for (EdgeIndex e = 0; e < geom.edge_count(); ++e) {
        std::array<int, 2> boxes;
        int n = geom.adjacent_boxes(e, boxes);
        for (int i = 0; i < n; ++i) net.output_weights[e][boxes[i]] = 10.0;
        net.output_thresholds[e] = 2.0;
    }
    return net;
}

Network random_network(RngStream& rng, double range) {
    auto draw = [&] { return (rng.uniform_real() * 2.0 - 1.0) * range; };
    Network net;
    for (int j = 0; j < Network::kHiddenCount; ++j) {
        for (auto& w : net.hidden_weights[j]) w = draw();
        net.hidden_thresholds[j] = draw();
    }
    for (int k = 0; k < Network::kOutputCount; ++k) {
        for (auto& w : net.output_weights[k]) w = draw();
        net.output_thresholds[k] = draw();
    }
    return net;
}

std::vector<double> flatten(const Network& net) {
    std::vector<double> params;
    params.reserve(Network::kParameterCount);
    for (int j = 0; j < Network::kHiddenCount; ++j) {
        for (double w : net.hidden_weights[j]) params.push_back(w);
        params.push_back(net.hidden_thresholds[j]);
    }
    for (int k = 0; k < Network::kOutputCount; ++k) {
        for (double w : net.output_weights[k]) params.push_back(w);
        params.push_back(net.output_thresholds[k]);
    }
    return params;
}

Network unflatten(const std::vector<double>& params) {
    if (params.size() != static_cast<std::size_t>(Network::kParameterCount)) {
        throw std::invalid_argument("expected exactly " +
                                    std::to_string(Network::kParameterCount) + " parameters");
    }
    Network net;
    std::size_t i = 0;
    for (int j = 0; j < Network::kHiddenCount; ++j) {
        for (auto& w : net.hidden_weights[j]) w = params[i++];
        net.hidden_thresholds[j] = params[i++];
    }
    for (int k = 0; k < Network::kOutputCount; ++k) {
        for (auto& w : net.output_weights[k]) w = params[i++];
        net.output_thresholds[k] = params[i++];
    }
    return net;
}

void save_network(const Network& net, const std::string& path) {
    std::ostringstream out;
    out << Network::kInputCount << ' ' << Network::kHiddenCount << ' ' << Network::kOutputCount
        << '\n';
    for (double p : flatten(net)) out << fmt_double(p) << '\n';
    write_file(path, out.str());
}

Network load_network(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error(path + ": empty network file");
    {
        std::istringstream hs(header);
        int ni = 0, nh = 0, no = 0;
        if (!(hs >> ni >> nh >> no) || ni != Network::kInputCount ||
            nh != Network::kHiddenCount || no != Network::kOutputCount) {
            throw std::runtime_error(path + ": unsupported network header '" + header + "'");
        }
    }
    std::vector<double> params;
    params.reserve(Network::kParameterCount);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        params.push_back(parse_double(line));
    }
    if (params.size() != static_cast<std::size_t>(Network::kParameterCount)) {
        throw std::runtime_error(path + ": expected " + std::to_string(Network::kParameterCount) +
                                 " parameters, found " + std::to_string(params.size()));
    }
    return unflatten(params);
}

}  // namespace dnb
