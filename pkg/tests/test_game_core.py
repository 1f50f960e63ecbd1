import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import game_tables
from opencomp import (
    MAX_STRATEGIES, GameTable, InvariantError, Outcome, ParseError, Side,
    dice, enumerate_game_count, is_symmetric, outcome, parse_game, pennies,
    role_swapped, rps, serialize_game,
)


class TestGameTable:
    def test_basic_properties(self):
        game = rps()
        assert game.rows == 3 and game.cols == 3
        assert game.symmetric_flag
        assert game.row_name(1) == "R"
        assert game.col_name(3) == "S"
        assert game.side_count(Side.ROW) == 3

    def test_unlabeled_names_fall_back_to_indices(self):
        game = dice()
        assert game.row_name(6) == "6"
        assert game.col_name(1) == "1"

    def test_entries_are_read_only(self):
        game = rps()
        with pytest.raises(ValueError):
            game.entries[0, 0] = 1

    def test_rejects_out_of_range_entries(self):
        with pytest.raises(InvariantError):
            GameTable(name="bad", entries=np.array([[2]]))

    def test_rejects_non_2d(self):
        with pytest.raises(InvariantError):
            GameTable(name="bad", entries=np.array([0, 1]))

    def test_rejects_oversized_side(self):
        entries = np.zeros((MAX_STRATEGIES + 1, 1), dtype=np.int8)
        with pytest.raises(InvariantError):
            GameTable(name="big", entries=entries)

    def test_symmetric_flag_requires_antisymmetry(self):
        entries = np.array([[0, 1], [1, 0]], dtype=np.int8)
        with pytest.raises(InvariantError):
            GameTable(name="bad", entries=entries, symmetric_flag=True)

    def test_symmetric_flag_requires_square(self):
        entries = np.zeros((2, 3), dtype=np.int8)
        with pytest.raises(InvariantError):
            GameTable(name="bad", entries=entries, symmetric_flag=True)

    def test_label_length_checked(self):
        with pytest.raises(InvariantError):
            GameTable(
                name="bad", entries=np.zeros((2, 2), dtype=np.int8),
                labels_rows=("a",),
            )

    def test_equality(self):
        assert rps() == rps()
        assert rps() != dice()
        relabeled = GameTable(
            name="rps", entries=rps().entries, symmetric_flag=True,
            labels_rows=("x", "y", "z"), labels_cols=("x", "y", "z"),
        )
        assert relabeled != rps()

    def test_opposite_side(self):
        assert Side.ROW.opposite is Side.COL
        assert Side.COL.opposite is Side.ROW


class TestOutcome:
    def test_values(self):
        game = rps()
        assert outcome(game, 1, 1) is Outcome.DRAW
        assert outcome(game, 2, 1) is Outcome.WIN
        assert outcome(game, 1, 2) is Outcome.LOSS

    def test_out_of_range(self):
        game = rps()
        with pytest.raises(IndexError):
            outcome(game, 0, 1)
        with pytest.raises(IndexError):
            outcome(game, 1, 4)

    def test_pennies_is_seat_sensitive(self):
        game = pennies()
        assert outcome(game, 1, 1) is Outcome.WIN
        assert outcome(game, 1, 2) is Outcome.LOSS


class TestSymmetry:
    def test_is_symmetric_checks_entries_not_flag(self):
        assert is_symmetric(rps())
        assert not is_symmetric(pennies())
        unflagged = GameTable(name="u", entries=rps().entries)
        assert is_symmetric(unflagged)

    def test_role_swapped_negates(self):
        game = rps()
        swapped = role_swapped(game)
        assert np.array_equal(swapped.entries, -game.entries)
        assert swapped.name == "rps-swapped"
        assert swapped.symmetric_flag
        back = role_swapped(swapped)
        assert np.array_equal(back.entries, game.entries)


class TestParseSerialize:
    def test_bundled_round_trips(self):
        for game in (rps(), dice(), pennies()):
            text = serialize_game(game)
            assert parse_game(text) == game
            assert serialize_game(parse_game(text)) == text

    def test_word_entry_tokens(self):
        text = (
            "game words\n"
            "symmetric false\n"
            "rows 2 cols 2\n"
            "row 1: w l\n"
            "row 2: d w\n"
        )
        game = parse_game(text)
        assert np.array_equal(
            game.entries, np.array([[1, -1], [0, 1]], dtype=np.int8)
        )

    def test_comments_and_blank_lines_ignored(self):
        text = (
            "# a comment\n"
            "game c\n\n"
            "symmetric false\n"
            "rows 1 cols 1\n"
            "# another\n"
            "row 1: 0\n"
        )
        assert parse_game(text).name == "c"

    def test_missing_header_reports_line(self):
        with pytest.raises(ParseError) as err:
            parse_game("symmetric true\n")
        assert err.value.line == 1

    def test_bad_entry_token(self):
        text = "game b\nsymmetric false\nrows 1 cols 2\nrow 1: 0 2\n"
        with pytest.raises(ParseError) as err:
            parse_game(text)
        assert err.value.line == 4

    def test_wrong_entry_count(self):
        text = "game b\nsymmetric false\nrows 1 cols 2\nrow 1: 0\n"
        with pytest.raises(ParseError):
            parse_game(text)

    def test_row_lines_must_be_in_order(self):
        text = (
            "game b\nsymmetric false\nrows 2 cols 1\n"
            "row 2: 0\nrow 1: 0\n"
        )
        with pytest.raises(ParseError):
            parse_game(text)

    def test_label_count_mismatch(self):
        text = (
            "game b\nsymmetric false\nrows 2 cols 2\n"
            "labels_rows only_one\n"
            "row 1: 0 0\nrow 2: 0 0\n"
        )
        with pytest.raises(ParseError):
            parse_game(text)

    def test_symmetric_claim_is_checked(self):
        text = (
            "game b\nsymmetric true\nrows 2 cols 2\n"
            "row 1: 0 +1\nrow 2: +1 0\n"
        )
        with pytest.raises(InvariantError):
            parse_game(text)

    def test_trailing_garbage_rejected(self):
        text = serialize_game(rps()) + "extra\n"
        with pytest.raises(ParseError):
            parse_game(text)

    @given(game_tables(max_side=5))
    @settings(max_examples=60)
    def test_round_trip_property(self, game):
        text = serialize_game(game)
        again = parse_game(text)
        assert again == game
        assert serialize_game(again) == text

    @given(game_tables(max_side=4), st.booleans())
    @settings(max_examples=40)
    def test_round_trip_with_labels(self, game, label_cols):
        labels_rows = tuple(f"r{i}" for i in range(game.rows))
        labels_cols = tuple(f"c{j}" for j in range(game.cols)) if label_cols else None
        labeled = GameTable(
            name="lab", entries=game.entries,
            labels_rows=labels_rows, labels_cols=labels_cols,
        )
        assert parse_game(serialize_game(labeled)) == labeled


class TestEnumeration:
    def test_small_counts_exact(self):
        assert enumerate_game_count(1, 1) == 3
        assert enumerate_game_count(2, 2) == 81
        assert enumerate_game_count(2, 3) == 729
        assert enumerate_game_count(3, 3) == 3 ** 9

    def test_large_shapes_use_closed_form(self):
        assert enumerate_game_count(5, 5) == 3 ** 25

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            enumerate_game_count(0, 3)
        with pytest.raises(ValueError):
            enumerate_game_count(3, MAX_STRATEGIES + 1)
