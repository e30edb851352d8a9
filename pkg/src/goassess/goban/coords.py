"""Coordinate codecs: GTP vertices ("F7", letter I skipped) and SGF points.

Both map through Coord with (0, 0) at the lower-left corner, so "A1" is
Coord(0, 0) and SGF "as" is the same point.
"""

from __future__ import annotations

from .board import BOARD_SIZE, PASS, Coord

GTP_COLUMNS = "ABCDEFGHJKLMNOPQRST"  # no I, per GTP convention
SGF_COLUMNS = "abcdefghijklmnopqrs"


class CoordError(ValueError):
    pass


def parse_gtp(text: str) -> Coord:
    vertex = text.strip()
    if not vertex:
        raise CoordError("empty vertex")
    if vertex.lower() == "pass":
        return PASS
    letter = vertex[0].upper()
    if letter == "I":
        raise CoordError("GTP columns skip the letter I")
    col = GTP_COLUMNS.find(letter)
    if col < 0:
        raise CoordError(f"bad column letter in {text!r}")
    try:
        row = int(vertex[1:])
    except ValueError:
        raise CoordError(f"bad row number in {text!r}") from None
    if not 1 <= row <= BOARD_SIZE:
        raise CoordError(f"row {row} out of range 1..{BOARD_SIZE}")
    return Coord(col, row - 1)


def format_gtp(coord: Coord) -> str:
    if coord.is_pass:
        return "pass"
    return f"{GTP_COLUMNS[coord.col]}{coord.row + 1}"


def parse_sgf_point(text: str) -> Coord:
    if text == "" or text == "tt":
        return PASS
    if len(text) != 2:
        raise CoordError(f"bad SGF point {text!r}")
    col = SGF_COLUMNS.find(text[0])
    row_from_top = SGF_COLUMNS.find(text[1])
    if col < 0 or row_from_top < 0:
        raise CoordError(f"bad SGF point {text!r}")
    return Coord(col, BOARD_SIZE - 1 - row_from_top)


def format_sgf_point(coord: Coord) -> str:
    if coord.is_pass:
        return ""
    return f"{SGF_COLUMNS[coord.col]}{SGF_COLUMNS[BOARD_SIZE - 1 - coord.row]}"
