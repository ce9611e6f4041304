#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dnb/board.h"
#include "dnb/rng.h"

namespace dnb {

// Common interface between the game runner and every player type. choose()
// must return a legal move; players are stateless apart from the caller's
// RngStream, so one stream per concurrent game is enough.
class Player {
public:
    virtual ~Player() = default;
    virtual EdgeIndex choose(const BoardState& state, RngStream& rng) const = 0;
    virtual std::string name() const = 0;
};

// Would playing e hand an adjacent box its third side?
bool gives_third_side(const BoardState& state, EdgeIndex e);

// Legal moves completing a box, restricted to those maximizing the number of
// boxes completed. Empty when no completing move exists.
std::vector<EdgeIndex> completing_moves(const BoardState& state);

// Legal moves that complete nothing and give no box a third side.
std::vector<EdgeIndex> safe_moves(const BoardState& state);

// Level 0: uniform over legal moves.
class RandomPlayer final : public Player {
public:
    EdgeIndex choose(const BoardState& state, RngStream& rng) const override;
    std::string name() const override { return "level0"; }
};

// Level 1: complete a box when possible (preferring double completions),
// otherwise move at random.
class BoxCompletionPlayer final : public Player {
public:
    EdgeIndex choose(const BoardState& state, RngStream& rng) const override;
    std::string name() const override { return "level1"; }
};

// Level 2: as level 1, but when nothing completes, avoid moves that would
// let the opponent complete a box next turn.
class ThirdSideAvoidancePlayer final : public Player {
public:
    EdgeIndex choose(const BoardState& state, RngStream& rng) const override;
    std::string name() const override { return "level2"; }
};

std::unique_ptr<Player> make_heuristic_player(int level);

struct GameScore {
    int first = 0;   // boxes taken by the player who moved first
    int second = 0;
};

GameScore play_game(const Player& first, const Player& second, int rows, int cols, RngStream& rng);

}  // namespace dnb
