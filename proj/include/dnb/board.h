#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dnb {

using EdgeIndex = int;

enum class Seat : int { P1 = 0, P2 = 1 };

inline Seat other(Seat s) { return s == Seat::P1 ? Seat::P2 : Seat::P1; }

enum class GameStatus { Ongoing, WinP1, WinP2, Tie };

// Edge layout on an R x C box grid: horizontal edges first, row-major
// (h(r,c) = r*cols + c, r in [0,rows], c in [0,cols)), then vertical edges
// row-major (v(r,c) = cols*(rows+1) + r*(cols+1) + c, r in [0,rows),
// c in [0,cols]). Box (r,c) is bounded by h(r,c), h(r+1,c), v(r,c), v(r,c+1).
struct BoardGeometry {
    int rows = 0;
    int cols = 0;

    int edge_count() const { return cols * (rows + 1) + rows * (cols + 1); }
    int box_count() const { return rows * cols; }

    EdgeIndex h_edge(int r, int c) const { return r * cols + c; }
    EdgeIndex v_edge(int r, int c) const { return cols * (rows + 1) + r * (cols + 1) + c; }

    std::array<EdgeIndex, 4> box_edges(int r, int c) const {
        return {h_edge(r, c), h_edge(r + 1, c), v_edge(r, c), v_edge(r, c + 1)};
    }

    // Boxes touching edge e (1 for border edges, 2 for interior). Writes
    // box ids (r*cols + c) into out and returns the count.
    int adjacent_boxes(EdgeIndex e, std::array<int, 2>& out) const;

    bool operator==(const BoardGeometry&) const = default;
};

// Full record of one game: edge occupancy, per-player box scores, and whose
// turn it is. Value type; copies are cheap and independent.
class BoardState {
public:
    BoardState() = default;
    BoardState(int rows, int cols);

    const BoardGeometry& geometry() const { return geom_; }
    bool edge_occupied(EdgeIndex e) const { return edges_[static_cast<std::size_t>(e)] != 0; }
    int score(Seat s) const { return score_[static_cast<int>(s)]; }
    Seat to_move() const { return to_move_; }
    int moves_played() const { return moves_played_; }
    bool is_terminal() const { return moves_played_ == geom_.edge_count(); }

    std::vector<EdgeIndex> legal_moves() const;

    // Occupied edges of box (row-major id). Box completeness and the level 2
    // "third side" test both reduce to this count.
    int occupied_sides(int box) const;

    // Number of adjacent boxes this move would complete. e must be a legal
    // (unoccupied, in-range) edge.
    int boxes_completed_by(EdgeIndex e) const;

    // Plays edge e, scoring any completed boxes for the mover. The mover
    // keeps the turn after completing a box on a non-terminal board (and the
    // rule chains on the bonus move). Throws without touching the state if e
    // is occupied or out of range.
    int play(EdgeIndex e);

    GameStatus result() const;

private:
    void check_edge(EdgeIndex e) const;

    BoardGeometry geom_{};
    std::vector<std::uint8_t> edges_;
    std::array<int, 2> score_{0, 0};
    Seat to_move_ = Seat::P1;
    int moves_played_ = 0;
};

BoardState new_board(int rows, int cols);

std::pair<BoardState, int> apply_move(const BoardState& state, EdgeIndex e);

inline std::vector<EdgeIndex> legal_moves(const BoardState& s) { return s.legal_moves(); }
inline GameStatus game_result(const BoardState& s) { return s.result(); }

// ASCII diagram, one text line per dot row: dots '.', horizontal edges '_'
// between dots, vertical edge v(r,c) drawn as '!' in the dot cell below it.
std::string render(const BoardState& state);

}  // namespace dnb
