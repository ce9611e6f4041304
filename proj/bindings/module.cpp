#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dnb/board.h"
#include "dnb/evolution.h"
#include "dnb/genome.h"
#include "dnb/harness.h"
#include "dnb/network.h"
#include "dnb/players.h"
#include "dnb/rng.h"
#include "dnb/supervised.h"

namespace py = pybind11;

namespace {

dnb::EvalRecord heuristic_winrate(int subject_level, int opponent_level, int games,
                                  std::uint64_t seed, int threads) {
    auto a = dnb::make_heuristic_player(subject_level);
    auto b = dnb::make_heuristic_player(opponent_level);
    dnb::RngStream rng(seed);
    return dnb::evaluate_winrate(*a, *b, games, rng, threads);
}

dnb::EvalRecord network_winrate(const dnb::Network& net, int opponent_level, int games,
                                std::uint64_t seed, int threads) {
    dnb::NetworkPlayer subject(net);
    auto opponent = dnb::make_heuristic_player(opponent_level);
    dnb::RngStream rng(seed);
    return dnb::evaluate_winrate(subject, *opponent, games, rng, threads);
}

std::string evolve_text(const std::string& config_text, int threads) {
    dnb::EvolutionConfig cfg = dnb::parse_config(config_text).evolution;
    cfg.validate();
    std::string out;
    for (const dnb::Snapshot& s : dnb::run_evolution(cfg, threads)) {
        out += dnb::format_snapshot(s);
    }
    return out;
}

std::string evaluate_snapshots_text(const std::string& snapshot_text, int opponent_level,
                                    int games_per_member, std::uint64_t seed, int threads) {
    auto snaps = dnb::parse_snapshots(snapshot_text);
    dnb::RngStream rng(seed);
    return dnb::csv_from_curve(
        dnb::evaluate_snapshots(snaps, opponent_level, games_per_member, rng, threads));
}

dnb::Network train_network(int games, int epochs, double learning_rate, std::uint64_t seed) {
    dnb::TrainerConfig cfg;
    cfg.epochs = epochs;
    cfg.learning_rate = learning_rate;
    cfg.seed = seed;
    cfg.validate();
    dnb::RngStream master(seed);
    dnb::RngStream gen_rng = master.derive(1);
    auto data = dnb::generate_training_set(games, gen_rng);
    dnb::RngStream init_rng = master.derive(2);
    dnb::Network net = dnb::random_network(init_rng);
    dnb::RngStream train_rng = master.derive(3);
    return dnb::train_backprop(net, data, cfg, train_rng);
}

}  // namespace

PYBIND11_MODULE(dnbpy, m) {
    m.doc() = "Dots-and-Boxes engine, heuristic players and neuroevolution tools";

    py::class_<dnb::BoardState>(m, "Board")
        .def(py::init<int, int>(), py::arg("rows") = 3, py::arg("cols") = 3)
        .def_property_readonly("rows", [](const dnb::BoardState& b) { return b.geometry().rows; })
        .def_property_readonly("cols", [](const dnb::BoardState& b) { return b.geometry().cols; })
        .def_property_readonly("edge_count",
                               [](const dnb::BoardState& b) { return b.geometry().edge_count(); })
        .def_property_readonly("to_move",
                               [](const dnb::BoardState& b) {
                                   return b.to_move() == dnb::Seat::P1 ? 1 : 2;
                               })
        .def("legal_moves", &dnb::BoardState::legal_moves)
        .def("edge_occupied", &dnb::BoardState::edge_occupied, py::arg("edge"))
        .def("boxes_completed_by", &dnb::BoardState::boxes_completed_by, py::arg("edge"))
        .def("play", &dnb::BoardState::play, py::arg("edge"),
             "Draw an edge; returns the number of boxes completed")
        .def("is_terminal", &dnb::BoardState::is_terminal)
        .def("scores",
             [](const dnb::BoardState& b) {
                 return py::make_tuple(b.score(dnb::Seat::P1), b.score(dnb::Seat::P2));
             })
        .def("render", [](const dnb::BoardState& b) { return dnb::render(b); });

    py::class_<dnb::Network>(m, "Network")
        .def("choose",
             [](const dnb::Network& net, const dnb::BoardState& board, std::uint64_t seed) {
                 dnb::RngStream rng(seed);
                 return dnb::choose_move(net, board, rng);
             },
             py::arg("board"), py::arg("seed") = 1)
        .def("save", [](const dnb::Network& net, const std::string& path) {
            dnb::save_network(net, path);
        });

    py::class_<dnb::EvalRecord>(m, "EvalRecord")
        .def_readonly("subject", &dnb::EvalRecord::subject)
        .def_readonly("opponent", &dnb::EvalRecord::opponent)
        .def_readonly("games", &dnb::EvalRecord::games)
        .def_readonly("wins", &dnb::EvalRecord::wins)
        .def_readonly("win_rate", &dnb::EvalRecord::win_rate)
        .def_readonly("ci95", &dnb::EvalRecord::ci95)
        .def("__repr__", [](const dnb::EvalRecord& r) {
            return "<EvalRecord " + r.subject + " vs " + r.opponent + " win_rate=" +
                   std::to_string(r.win_rate) + ">";
        });

    m.def("build_level1_network", &dnb::build_level1_network,
          "Hand-built net that plays the box-completion strategy");
    m.def("random_network",
          [](std::uint64_t seed, double range) {
              dnb::RngStream rng(seed);
              return dnb::random_network(rng, range);
          },
          py::arg("seed") = 1, py::arg("range") = 0.5);
    m.def("load_network", &dnb::load_network, py::arg("path"));
    m.def("encode_hex", [](const dnb::Network& net) { return dnb::to_hex(dnb::encode(net)); },
          "Quantize a network into its 1164-character genome hex string");
    m.def("decode_hex", [](const std::string& hex) { return dnb::decode(dnb::from_hex(hex)); });

    m.def("heuristic_winrate", &heuristic_winrate, py::arg("subject_level"),
          py::arg("opponent_level"), py::arg("games"), py::arg("seed") = 1,
          py::arg("threads") = 1);
    m.def("network_winrate", &network_winrate, py::arg("net"), py::arg("opponent_level"),
          py::arg("games"), py::arg("seed") = 1, py::arg("threads") = 1);

    m.def("minimax_oracle",
          [](const dnb::BoardState& board, int bound) { return dnb::minimax_oracle(board, bound); },
          py::arg("board"), py::arg("bound") = 12,
          "Exact score differential for the side to move");

    m.def("evolve", &evolve_text, py::arg("config_text"), py::arg("threads") = 1,
          "Run a GA variant; returns the snapshot file contents");
    m.def("evaluate_snapshots", &evaluate_snapshots_text, py::arg("snapshot_text"),
          py::arg("opponent_level"), py::arg("games_per_member"), py::arg("seed") = 1,
          py::arg("threads") = 1, "Returns the benchmark curve as CSV text");
    m.def("train_network", &train_network, py::arg("games") = 800, py::arg("epochs") = 30,
          py::arg("learning_rate") = 0.1, py::arg("seed") = 1,
          "Generate level-1 examples and train a fresh network on them");
}
