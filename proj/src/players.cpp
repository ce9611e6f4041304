#include "dnb/players.h"

#include <stdexcept>

namespace dnb {

bool gives_third_side(const BoardState& state, EdgeIndex e) {
    std::array<int, 2> boxes;
    int n = state.geometry().adjacent_boxes(e, boxes);
    for (int i = 0; i < n; ++i) {
        if (state.occupied_sides(boxes[i]) == 2) return true;
    }
    return false;
}

std::vector<EdgeIndex> completing_moves(const BoardState& state) {
    std::vector<EdgeIndex> best;
    int best_gain = 0;
    const int n = state.geometry().edge_count();
    for (EdgeIndex e = 0; e < n; ++e) {
        if (state.edge_occupied(e)) continue;
        int gain = state.boxes_completed_by(e);
        if (gain > best_gain) {
            best_gain = gain;
            best.clear();
        }
        if (gain == best_gain && gain > 0) best.push_back(e);
    }
    return best;
}

std::vector<EdgeIndex> safe_moves(const BoardState& state) {
    std::vector<EdgeIndex> out;
    const int n = state.geometry().edge_count();
    for (EdgeIndex e = 0; e < n; ++e) {
        if (state.edge_occupied(e)) continue;
        if (state.boxes_completed_by(e) > 0) continue;
        if (gives_third_side(state, e)) continue;
        out.push_back(e);
    }
    return out;
}

namespace {

EdgeIndex pick(const std::vector<EdgeIndex>& moves, RngStream& rng) {
    return moves[rng.uniform_index(moves.size())];
}

}  // namespace

EdgeIndex RandomPlayer::choose(const BoardState& state, RngStream& rng) const {
    auto legal = state.legal_moves();
    if (legal.empty()) throw std::logic_error("no legal moves");
    return pick(legal, rng);
}

EdgeIndex BoxCompletionPlayer::choose(const BoardState& state, RngStream& rng) const {
    auto completing = completing_moves(state);
    if (!completing.empty()) return pick(completing, rng);
    auto legal = state.legal_moves();
    if (legal.empty()) throw std::logic_error("no legal moves");
    return pick(legal, rng);
}

EdgeIndex ThirdSideAvoidancePlayer::choose(const BoardState& state, RngStream& rng) const {
    auto completing = completing_moves(state);
    if (!completing.empty()) return pick(completing, rng);
    auto safe = safe_moves(state);
    if (!safe.empty()) return pick(safe, rng);
    auto legal = state.legal_moves();
    if (legal.empty()) throw std::logic_error("no legal moves");
    return pick(legal, rng);
}

std::unique_ptr<Player> make_heuristic_player(int level) {
    switch (level) {
        case 0: return std::make_unique<RandomPlayer>();
        case 1: return std::make_unique<BoxCompletionPlayer>();
        case 2: return std::make_unique<ThirdSideAvoidancePlayer>();
        default: throw std::invalid_argument("heuristic level must be 0, 1 or 2");
    }
}

GameScore play_game(const Player& first, const Player& second, int rows, int cols, RngStream& rng) {
    BoardState state(rows, cols);
    while (!state.is_terminal()) {
        const Player& mover = state.to_move() == Seat::P1 ? first : second;
        state.play(mover.choose(state, rng));
    }
    return GameScore{state.score(Seat::P1), state.score(Seat::P2)};
}

}  // namespace dnb
