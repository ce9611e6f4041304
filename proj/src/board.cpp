#include "dnb/board.h"

#include <stdexcept>

namespace dnb {

int BoardGeometry::adjacent_boxes(EdgeIndex e, std::array<int, 2>& out) const {
    int n = 0;
    int h_total = cols * (rows + 1);
    if (e < h_total) {
        int r = e / cols;
        int c = e % cols;
        if (r >= 1) out[n++] = (r - 1) * cols + c;
        if (r < rows) out[n++] = r * cols + c;
    } else {
        int v = e - h_total;
        int r = v / (cols + 1);
        int c = v % (cols + 1);
        if (c >= 1) out[n++] = r * cols + (c - 1);
        if (c < cols) out[n++] = r * cols + c;
    }
    return n;
}

BoardState::BoardState(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("board dimensions must be at least 1x1");
    geom_ = BoardGeometry{rows, cols};
    edges_.assign(static_cast<std::size_t>(geom_.edge_count()), 0);
}

std::vector<EdgeIndex> BoardState::legal_moves() const {
    std::vector<EdgeIndex> out;
    out.reserve(edges_.size() - static_cast<std::size_t>(moves_played_));
    for (EdgeIndex e = 0; e < geom_.edge_count(); ++e)
        if (!edges_[static_cast<std::size_t>(e)]) out.push_back(e);
    return out;
}

int BoardState::occupied_sides(int box) const {
    int r = box / geom_.cols;
    int c = box % geom_.cols;
    int n = 0;
    for (EdgeIndex e : geom_.box_edges(r, c))
        if (edges_[static_cast<std::size_t>(e)]) ++n;
    return n;
}

void BoardState::check_edge(EdgeIndex e) const {
    if (e < 0 || e >= geom_.edge_count())
        throw std::invalid_argument("edge index out of range: " + std::to_string(e));
    if (edges_[static_cast<std::size_t>(e)])
        throw std::invalid_argument("edge already occupied: " + std::to_string(e));
}

int BoardState::boxes_completed_by(EdgeIndex e) const {
    check_edge(e);
    std::array<int, 2> boxes;
    int n = geom_.adjacent_boxes(e, boxes);
    int completed = 0;
    for (int i = 0; i < n; ++i)
        if (occupied_sides(boxes[i]) == 3) ++completed;
    return completed;
}

int BoardState::play(EdgeIndex e) {
    int gained = boxes_completed_by(e);  // validates e
    edges_[static_cast<std::size_t>(e)] = 1;
    ++moves_played_;
    score_[static_cast<int>(to_move_)] += gained;
    if (gained == 0 || is_terminal()) to_move_ = other(to_move_);
    return gained;
}

GameStatus BoardState::result() const {
    if (!is_terminal()) return GameStatus::Ongoing;
    if (score_[0] > score_[1]) return GameStatus::WinP1;
    if (score_[1] > score_[0]) return GameStatus::WinP2;
    return GameStatus::Tie;
}

BoardState new_board(int rows, int cols) { return BoardState(rows, cols); }

std::pair<BoardState, int> apply_move(const BoardState& state, EdgeIndex e) {
    BoardState next = state;
    int gained = next.play(e);
    return {std::move(next), gained};
}

std::string render(const BoardState& state) {
    const BoardGeometry& g = state.geometry();
    std::string out;
    for (int r = 0; r <= g.rows; ++r) {
        if (r > 0) out += '\n';
        for (int c = 0; c <= g.cols; ++c) {
            bool from_above = r > 0 && state.edge_occupied(g.v_edge(r - 1, c));
            out += from_above ? '!' : '.';
            if (c < g.cols) out += state.edge_occupied(g.h_edge(r, c)) ? '_' : ' ';
        }
    }
    return out;
}

}  // namespace dnb
