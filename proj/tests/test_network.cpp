#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <cstdio>

#include "dnb/board.h"
#include "dnb/network.h"
#include "dnb/players.h"
#include "dnb/rng.h"

using namespace dnb;

TEST_SUITE("network") {

TEST_CASE("parameter count covers both layers plus thresholds") {
    CHECK(Network::kParameterCount == 465);
    CHECK(flatten(Network{}).size() == 465);
}

TEST_CASE("forward pass matches a hand-computed single path") {
    // Only hidden 0 looks at edge 0, only output 0 looks at hidden 0 -- but
    // every other unit still sits at sigmoid(0) = 0.5.
    Network net;
    net.hidden_weights[0][0] = 1.0;
    net.output_weights[0][0] = 1.0;

    BoardState state(3, 3);
    state.play(0);
    std::array<double, 24> input;
    encode_board(state, input);
    CHECK(input[0] == 1.0);
    CHECK(input[1] == 0.0);

    Activations act;
    forward(net, input, act);
    CHECK(act.hidden[0] == doctest::Approx(0.7310585786).epsilon(1e-9));
    CHECK(act.hidden[1] == 0.5);
    CHECK(act.output[0] == doctest::Approx(0.6750375273).epsilon(1e-8));
    CHECK(act.output[5] == 0.5);
}

TEST_CASE("choose_move only returns legal edges") {
    RngStream rng(11);
    Network net = random_network(rng);
    BoardState state(3, 3);
    RngStream game(12);
    while (!state.is_terminal()) {
        EdgeIndex e = choose_move(net, state, game);
        CHECK_FALSE(state.edge_occupied(e));
        state.play(e);
    }
}

TEST_CASE("exact ties are broken uniformly") {
    Network net;  // all parameters zero: every output is 0.5
    BoardState state(3, 3);
    RngStream rng(13);
    std::array<int, 24> counts{};
    for (int i = 0; i < 2400; ++i) ++counts[choose_move(net, state, rng)];
    CHECK(*std::min_element(counts.begin(), counts.end()) > 50);
}

TEST_CASE("board encoding rejects other sizes") {
    BoardState small(2, 2);
    std::array<double, 24> input;
    CHECK_THROWS_AS(encode_board(small, input), std::invalid_argument);
}

TEST_CASE("the built network takes a box exactly when it can") {
    Network net = build_level1_network();

    // All parameters fit the genome's value range.
    for (double p : flatten(net)) CHECK(std::abs(p) <= 64.0);

    RngStream rng(14);
    RandomPlayer filler;
    for (int game = 0; game < 200; ++game) {
        BoardState state(3, 3);
        while (!state.is_terminal()) {
            EdgeIndex choice = choose_move(net, state, rng);
            auto completing = completing_moves(state);
            if (completing.empty()) {
                CHECK(state.boxes_completed_by(choice) == 0);
            } else {
                CHECK(state.boxes_completed_by(choice) > 0);
            }
            // Advance with a random move so the net sees varied positions.
            state.play(filler.choose(state, rng));
        }
    }
}

TEST_CASE("flatten orders hidden units before output units") {
    Network net = build_level1_network();
    auto params = flatten(net);
    CHECK(params[24] == 20.0);           // hidden unit 0: 24 weights then threshold
    CHECK(params[9 * 25 + 9] == 2.0);    // output unit 0: 9 weights then threshold
    Network back = unflatten(params);
    CHECK(flatten(back) == params);
    CHECK_THROWS_AS(unflatten(std::vector<double>(464)), std::invalid_argument);
}

TEST_CASE("network files round-trip exactly") {
    RngStream rng(15);
    Network net = random_network(rng);
    std::string path = "netfile_test.txt";
    save_network(net, path);
    Network loaded = load_network(path);
    CHECK(flatten(loaded) == flatten(net));
    std::remove(path.c_str());
}

TEST_CASE("network files with a foreign header are rejected") {
    std::string path = "netfile_bad.txt";
    {
        FILE* f = fopen(path.c_str(), "w");
        fputs("23 9 24\n", f);
        fclose(f);
    }
    CHECK_THROWS_AS(load_network(path), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("random networks stay inside the requested range") {
    RngStream rng(16);
    Network net = random_network(rng, 0.5);
    double lo = 0.0, hi = 0.0;
    for (double p : flatten(net)) {
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    CHECK(lo >= -0.5);
    CHECK(hi <= 0.5);
    CHECK(lo < -0.1);  // actually spread out
    CHECK(hi > 0.1);
}

}  // TEST_SUITE
