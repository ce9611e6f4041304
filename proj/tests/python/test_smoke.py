"""Smoke tests for the dnbpy extension module."""

import pytest

import dnbpy


def test_board_basics():
    board = dnbpy.Board()
    assert board.rows == 3 and board.cols == 3
    assert board.edge_count == 24
    assert len(board.legal_moves()) == 24
    assert board.to_move == 1

    assert board.play(0) == 0
    assert board.edge_occupied(0)
    assert board.to_move == 2
    with pytest.raises(Exception):
        board.play(0)


def test_completing_a_box_keeps_the_turn():
    board = dnbpy.Board(1, 1)
    for edge in (0, 1, 2):
        board.play(edge)
    mover = board.to_move
    assert board.boxes_completed_by(3) == 1
    assert board.play(3) == 1
    assert board.is_terminal()
    scores = board.scores()
    assert scores[0] + scores[1] == 1
    assert scores[mover - 1] == 1


def test_render_shape():
    text = dnbpy.Board(2, 3).render()
    lines = text.splitlines()
    assert len(lines) == 3
    assert lines[0] == ". . . ."


def test_heuristic_ladder_direction():
    record = dnbpy.heuristic_winrate(1, 0, 200, seed=11)
    assert record.games == 200
    assert record.win_rate > 0.9


def test_built_network_beats_random():
    net = dnbpy.build_level1_network()
    record = dnbpy.network_winrate(net, 0, 200, seed=12)
    assert record.win_rate >= 0.9

    board = dnbpy.Board()
    move = net.choose(board)
    assert move in board.legal_moves()


def test_genome_hex_round_trip():
    net = dnbpy.random_network(seed=13)
    hex_text = dnbpy.encode_hex(net)
    assert len(hex_text) == 1164
    again = dnbpy.encode_hex(dnbpy.decode_hex(hex_text))
    assert again == hex_text


def test_oracle_small_values():
    assert dnbpy.minimax_oracle(dnbpy.Board(1, 1)) == -1
    with pytest.raises(Exception):
        dnbpy.minimax_oracle(dnbpy.Board(3, 3))


def test_evolve_and_evaluate_round_trip():
    config = "\n".join(
        [
            "population_size = 8",
            "variant = roundrobin",
            "generations = 2",
            "snapshot_interval = 1",
            "master_seed = 14",
        ]
    )
    snapshots = dnbpy.evolve(config)
    assert snapshots.count("gen=") == 2
    assert dnbpy.evolve(config) == snapshots

    curve = dnbpy.evaluate_snapshots(snapshots, 0, 10, seed=15)
    lines = curve.strip().splitlines()
    assert lines[0] == "variant,cumulative_games,best_win_rate"
    assert len(lines) == 3


def test_train_network_runs():
    net = dnbpy.train_network(games=20, epochs=2, seed=16)
    record = dnbpy.network_winrate(net, 0, 50, seed=17)
    assert 0.0 <= record.win_rate <= 1.0
