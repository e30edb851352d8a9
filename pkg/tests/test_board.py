"""Board rules: capture, suicide, ko, legality, hashing."""

import random

import pytest

from goassess.goban import (
    PASS,
    BoardState,
    Color,
    Coord,
    IllegalMoveError,
    Move,
    apply_move,
    legal_moves,
    stone_count,
)


def play(state, color, vertex_col, vertex_row, number):
    return apply_move(state, Move(color, Coord(vertex_col, vertex_row), number))


def play_sequence(pairs):
    """pairs: [(color, (col,row) or None)], numbering automatic."""
    state = BoardState.empty()
    for i, (color, point) in enumerate(pairs, start=1):
        coord = PASS if point is None else Coord(*point)
        state = apply_move(state, Move(color, coord, i))
    return state


B, W = Color.BLACK, Color.WHITE


class TestCapture:
    def test_single_stone_capture(self):
        # White stone at (0,0) with one liberty at (1,0); Black fills it.
        state = play_sequence([
            (B, (0, 1)),  # above the corner
            (W, (0, 0)),  # corner stone, liberties: (1,0)
            (B, (1, 0)),  # captures
        ])
        assert state.stone_at(Coord(0, 0)) == 0
        assert state.captures_black == 1
        assert state.captures_white == 0

    def test_group_capture_counts_size(self):
        # Two-stone White group in the corner, surrounded by Black.
        state = play_sequence([
            (B, (0, 2)),
            (W, (0, 0)),
            (B, (1, 1)),
            (W, (0, 1)),
            (B, (1, 0)),  # removes both white stones
        ])
        assert state.captures_black == 2
        assert state.stone_at(Coord(0, 0)) == 0
        assert state.stone_at(Coord(0, 1)) == 0

    def test_stone_conservation(self):
        state = play_sequence([
            (B, (0, 1)),
            (W, (0, 0)),
        ])
        before = stone_count(state)
        after = apply_move(state, Move(B, Coord(1, 0), 3))
        assert stone_count(after) == before + 1 - 1  # one placed, one captured

    def test_stone_conservation_over_random_games(self):
        rng = random.Random(321)
        for trial in range(10):
            state = BoardState.empty()
            for number in range(1, 150):
                placed = None
                for _ in range(30):
                    candidate = Coord(rng.randrange(19), rng.randrange(19))
                    try:
                        after = apply_move(state, Move(state.to_move, candidate, number))
                    except IllegalMoveError:
                        continue
                    placed = after
                    break
                if placed is None:
                    break
                captured = (
                    placed.captures_black + placed.captures_white
                    - state.captures_black - state.captures_white
                )
                assert stone_count(placed) == stone_count(state) + 1 - captured
                state = placed


class TestIllegal:
    def test_occupied(self):
        state = play_sequence([(B, (3, 3))])
        with pytest.raises(IllegalMoveError) as err:
            play(state, W, 3, 3, 2)
        assert err.value.reason == "occupied"

    def test_wrong_color(self):
        state = BoardState.empty()
        with pytest.raises(IllegalMoveError) as err:
            play(state, W, 3, 3, 1)
        assert err.value.reason == "wrong_color"

    def test_suicide(self):
        # Black fills the last liberty of the single point (0,0) surrounded
        # by White stones: placed stone would have no liberties and no capture.
        state = play_sequence([
            (B, (5, 5)),
            (W, (0, 1)),
            (B, (5, 6)),
            (W, (1, 0)),
        ])
        with pytest.raises(IllegalMoveError) as err:
            play(state, B, 0, 0, 5)
        assert err.value.reason == "suicide"

    def test_capture_on_last_liberty_is_not_suicide(self):
        # Same shape, but the White stones are themselves in atari.
        state = play_sequence([
            (B, (0, 2)),
            (W, (0, 1)),
            (B, (1, 1)),
            (W, (1, 0)),
            (B, (2, 0)),
            (W, (18, 18)),
        ])
        after = play(state, B, 0, 0, 7)  # captures (0,1) and (1,0)
        assert after.captures_black == 2


class TestKo:
    def ko_position(self):
        # Classic ko: Black b2,c1,d2? Build a ko at (2,1)/(1,1).
        #   . B W .
        #   B . . W      row 1: (0,1)=B, (3,1)=W ... simpler explicit shape:
        # Black: (1,0),(0,1),(1,2); White: (2,0),(3,1),(2,2); B plays (2,1), W recaptures (1,1) is ko
        return play_sequence([
            (B, (1, 0)),
            (W, (2, 0)),
            (B, (0, 1)),
            (W, (3, 1)),
            (B, (1, 2)),
            (W, (2, 2)),
            (B, (2, 1)),   # black stone with liberties (1,1) only after white plays
        ])

    def test_ko_point_recorded_and_blocked(self):
        state = self.ko_position()
        state = play(state, W, 1, 1, 8)  # captures the black stone at (2,1)
        assert state.captures_white == 1
        assert state.ko_point == Coord(2, 1)
        with pytest.raises(IllegalMoveError) as err:
            play(state, B, 2, 1, 9)  # immediate recapture forbidden
        assert err.value.reason == "ko"

    def test_ko_clears_after_other_move(self):
        state = self.ko_position()
        state = play(state, W, 1, 1, 8)
        state = play(state, B, 17, 17, 9)
        state = play(state, W, 17, 15, 10)
        after = play(state, B, 2, 1, 11)  # recapture legal now
        assert after.captures_black == 1

    def test_pass_clears_ko(self):
        state = self.ko_position()
        state = play(state, W, 1, 1, 8)
        state = apply_move(state, Move(B, PASS, 9))
        assert state.ko_point is None


class TestLegalMoves:
    def test_empty_board(self):
        moves = legal_moves(BoardState.empty(), B)
        assert len(moves) == 361 + 1
        assert PASS in moves

    def test_ko_point_excluded(self):
        state = play_sequence([
            (B, (1, 0)), (W, (2, 0)), (B, (0, 1)), (W, (3, 1)),
            (B, (1, 2)), (W, (2, 2)), (B, (2, 1)),
        ])
        state = play(state, W, 1, 1, 8)
        moves = legal_moves(state, B)
        assert Coord(2, 1) not in moves

    def test_matches_apply_move_filter(self):
        rng = random.Random(7)
        for trial in range(50):
            state = BoardState.empty()
            for number in range(1, rng.randrange(10, 60)):
                pool = sorted(c for c in legal_moves(state, state.to_move) if not c.is_pass)
                if not pool:
                    break
                state = apply_move(state, Move(state.to_move, rng.choice(pool), number))
            fast = legal_moves(state, state.to_move)
            slow = {PASS}
            for col in range(19):
                for row in range(19):
                    move = Move(state.to_move, Coord(col, row), 99)
                    try:
                        apply_move(state, move)
                    except IllegalMoveError:
                        continue
                    slow.add(Coord(col, row))
            assert fast == slow

    def test_no_zero_liberty_groups_after_random_play(self):
        from goassess.goban.board import _group_and_liberties

        rng = random.Random(11)
        state = BoardState.empty()
        for number in range(1, 120):
            pool = sorted(c for c in legal_moves(state, state.to_move) if not c.is_pass)
            if not pool:
                break
            state = apply_move(state, Move(state.to_move, rng.choice(pool), number))
            for idx, cell in enumerate(state.grid):
                if cell:
                    _, libs = _group_and_liberties(state.grid, idx)
                    assert libs, f"zero-liberty group at index {idx} after move {number}"


class TestHash:
    def test_same_position_same_hash(self):
        a = play_sequence([(B, (3, 3)), (W, (15, 15)), (B, (16, 3))])
        b = play_sequence([(B, (16, 3)), (W, (15, 15)), (B, (3, 3))])
        assert a.position_hash == b.position_hash

    def test_to_move_changes_hash(self):
        a = play_sequence([(B, (3, 3))])
        b = play_sequence([(B, (3, 3)), (W, None)])  # white passes
        assert a.grid == b.grid
        assert a.position_hash != b.position_hash

    def test_pass_changes_only_turn(self):
        state = play_sequence([(B, (3, 3))])
        after = apply_move(state, Move(W, PASS, 2))
        assert after.grid == state.grid
        assert after.to_move is B
        assert after.captures_black == state.captures_black
