#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "dnb/board.h"
#include "dnb/players.h"
#include "dnb/rng.h"

using namespace dnb;

namespace {

BoardState board_with(int rows, int cols, std::initializer_list<EdgeIndex> edges) {
    BoardState state(rows, cols);
    for (EdgeIndex e : edges) state.play(e);
    return state;
}

}  // namespace

TEST_SUITE("players") {

TEST_CASE("gives_third_side looks at both touching boxes") {
    // 1x2 board, left box edges {0,2,4,5}, right box {1,3,5,6}.
    BoardState state = board_with(1, 2, {0, 2});
    CHECK(gives_third_side(state, 4));
    CHECK(gives_third_side(state, 5));
    CHECK_FALSE(gives_third_side(state, 1));
    CHECK_FALSE(gives_third_side(state, 3));
    CHECK_FALSE(gives_third_side(state, 6));
}

TEST_CASE("completing_moves keeps only the biggest completions") {
    // 2x2 board with three 3-sided boxes: edge 7 finishes two at once,
    // edge 11 only one.
    BoardState both = board_with(2, 2, {0, 1, 2, 3, 5, 6, 8, 10});
    CHECK(both.boxes_completed_by(7) == 2);
    CHECK(both.boxes_completed_by(11) == 1);
    CHECK(completing_moves(both) == std::vector<EdgeIndex>{7});

    // Without edge 6 the double completion is gone and both count equally.
    BoardState single = board_with(2, 2, {0, 1, 2, 3, 5, 8, 10});
    CHECK(completing_moves(single) == std::vector<EdgeIndex>{7, 11});

    BoardState empty(2, 2);
    CHECK(completing_moves(empty).empty());
}

TEST_CASE("safe_moves excludes completions and giveaways") {
    BoardState state = board_with(1, 2, {0, 2});
    CHECK(safe_moves(state) == std::vector<EdgeIndex>{1, 3, 6});
}

TEST_CASE("level 1 always takes an available box, preferring doubles") {
    BoardState state = board_with(2, 2, {0, 1, 2, 3, 5, 6, 8, 10});
    BoxCompletionPlayer level1;
    RngStream rng(5);
    for (int i = 0; i < 50; ++i) CHECK(level1.choose(state, rng) == 7);
}

TEST_CASE("level 2 prefers safe moves and keeps legal when cornered") {
    ThirdSideAvoidancePlayer level2;
    RngStream rng(6);

    BoardState safe_exists = board_with(1, 2, {0, 2});
    std::set<EdgeIndex> safe{1, 3, 6};
    for (int i = 0; i < 100; ++i) CHECK(safe.count(level2.choose(safe_exists, rng)) == 1);

    // Only giveaway moves remain: both edges hand over a third side.
    BoardState cornered = board_with(1, 1, {0, 1});
    std::set<EdgeIndex> legal{2, 3};
    for (int i = 0; i < 20; ++i) CHECK(legal.count(level2.choose(cornered, rng)) == 1);
}

TEST_CASE("level 0 spreads over all legal moves") {
    RandomPlayer level0;
    RngStream rng(7);
    BoardState state(3, 3);
    std::array<int, 24> counts{};
    for (int i = 0; i < 2400; ++i) ++counts[level0.choose(state, rng)];
    CHECK(*std::min_element(counts.begin(), counts.end()) > 50);  // expect 100 each
}

TEST_CASE("heuristic factory names the ladder") {
    CHECK(make_heuristic_player(0)->name() == "level0");
    CHECK(make_heuristic_player(1)->name() == "level1");
    CHECK(make_heuristic_player(2)->name() == "level2");
    CHECK_THROWS_AS(make_heuristic_player(3), std::invalid_argument);
}

TEST_CASE("play_game finishes and accounts for all boxes") {
    RandomPlayer p;
    RngStream rng(8);
    for (int i = 0; i < 50; ++i) {
        GameScore score = play_game(p, p, 3, 3, rng);
        CHECK(score.first + score.second == 9);
    }
}

TEST_CASE("play_game is reproducible from the seed") {
    BoxCompletionPlayer a;
    RandomPlayer b;
    RngStream r1(123), r2(123);
    for (int i = 0; i < 10; ++i) {
        GameScore s1 = play_game(a, b, 3, 3, r1);
        GameScore s2 = play_game(a, b, 3, 3, r2);
        CHECK(s1.first == s2.first);
        CHECK(s1.second == s2.second);
    }
}

TEST_CASE("the ladder orders as expected on a small sample") {
    RandomPlayer level0;
    BoxCompletionPlayer level1;
    RngStream rng(9);
    int level1_wins = 0;
    for (int i = 0; i < 200; ++i) {
        bool level1_first = i % 2 == 0;
        GameScore s = level1_first ? play_game(level1, level0, 3, 3, rng)
                                   : play_game(level0, level1, 3, 3, rng);
        int mine = level1_first ? s.first : s.second;
        int theirs = level1_first ? s.second : s.first;
        if (mine > theirs) ++level1_wins;
    }
    CHECK(level1_wins >= 180);  // the true rate is ~99.6%
}

}  // TEST_SUITE
