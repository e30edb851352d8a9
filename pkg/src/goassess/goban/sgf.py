"""SGF game-record parsing and serialization (FF[3]/FF[4], main line only).

Supported properties: FF, GM, SZ, KM, HA, RE, AB, B, W. Everything else is
kept verbatim in the record's metadata map so a round trip is lossless.
Variations are ignored: only the first child of every branch is followed.
Parsed move sequences are replayed through the board rules, so an illegal
record is rejected with the offending ply number.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .board import BoardState, Color, IllegalMoveError, Move, apply_move
from .coords import Coord, CoordError, format_sgf_point, parse_sgf_point


class SgfError(ValueError):
    pass


@dataclass(frozen=True)
class GameRecord:
    moves: tuple[Move, ...] = ()
    komi: float = 0.0
    handicap: int = 0
    handicap_stones: tuple[Coord, ...] = ()
    result: str | None = None
    metadata: dict[str, tuple[str, ...]] = field(default_factory=dict)
    board_size: int = 19

    def __post_init__(self) -> None:
        if self.board_size != 19:
            raise SgfError(f"board size {self.board_size} not supported (19 only)")
        expected = Color.WHITE if self.handicap > 0 else Color.BLACK
        for i, move in enumerate(self.moves, start=1):
            if move.number != i:
                raise SgfError(f"move numbers must be contiguous from 1 (ply {i})")
            if move.color is not expected:
                raise SgfError(f"colors must alternate; ply {i} is {move.color.value}")
            expected = expected.opponent


def replay_record(record: GameRecord) -> BoardState:
    """Replay a record from the empty board; raises SgfError on illegality."""
    to_move = Color.WHITE if record.handicap > 0 else Color.BLACK
    state = BoardState.empty()
    if record.handicap_stones:
        state = state.with_setup_stones(list(record.handicap_stones), Color.BLACK, to_move)
    elif record.handicap > 0:
        state = BoardState.empty(to_move)
    for move in record.moves:
        try:
            state = apply_move(state, move)
        except IllegalMoveError as exc:
            raise SgfError(f"illegal move at ply {move.number}: {exc}") from exc
    return state


def _tokenize(text: str):
    """Yield ('(', ')', (ident, [values])) tokens from SGF text."""
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch in "()":
            yield ch, None
            i += 1
        elif ch == ";":
            yield ";", None
            i += 1
        elif ch.isspace():
            i += 1
        elif ch.isalpha():
            start = i
            while i < n and text[i].isalpha():
                i += 1
            ident = text[start:i]
            values = []
            while True:
                while i < n and text[i].isspace():
                    i += 1
                if i >= n or text[i] != "[":
                    break
                i += 1
                buf = []
                while i < n and text[i] != "]":
                    if text[i] == "\\" and i + 1 < n:
                        i += 1
                    buf.append(text[i])
                    i += 1
                if i >= n:
                    raise SgfError(f"unterminated property value for {ident}")
                i += 1
                values.append("".join(buf))
            if not values:
                raise SgfError(f"property {ident} has no value")
            yield "prop", (ident, values)
        else:
            raise SgfError(f"unexpected character {ch!r} at offset {i}")


def _main_line_nodes(text: str) -> list[dict[str, tuple[str, ...]]]:
    """Properties of each node along the main line, in order."""
    tokens = list(_tokenize(text))
    if not tokens or tokens[0][0] != "(":
        raise SgfError("SGF must start with '('")
    depth = 0
    nodes: list[dict[str, tuple[str, ...]]] = []
    current: dict[str, tuple[str, ...]] | None = None
    on_main_line = True
    branch_depth: int | None = None  # depth at which we entered a skipped variation
    seen_subtree_at: set[int] = set()
    for kind, payload in tokens:
        if kind == "(":
            depth += 1
            if branch_depth is None and depth - 1 in seen_subtree_at:
                branch_depth = depth  # sibling variation: skip it
            if branch_depth is None:
                seen_subtree_at.add(depth - 1)
        elif kind == ")":
            if depth == 0:
                raise SgfError("unbalanced parentheses")
            if branch_depth == depth:
                branch_depth = None
            seen_subtree_at.discard(depth)
            depth -= 1
            current = None
        elif kind == ";":
            if branch_depth is None:
                current = {}
                nodes.append(current)
        else:
            ident, values = payload
            if branch_depth is None:
                if current is None:
                    raise SgfError(f"property {ident} outside a node")
                current[ident] = tuple(values)
    if depth != 0:
        raise SgfError("unbalanced parentheses")
    if not nodes:
        raise SgfError("no nodes in SGF")
    return nodes


_KNOWN = {"FF", "GM", "SZ", "KM", "HA", "RE", "AB", "B", "W"}


def parse_sgf(text: str) -> GameRecord:
    nodes = _main_line_nodes(text)
    root = nodes[0]

    ff = root.get("FF", ("4",))[0]
    if ff not in ("3", "4"):
        raise SgfError(f"unsupported SGF version FF[{ff}]")
    size = int(root.get("SZ", ("19",))[0])
    if size != 19:
        raise SgfError(f"board size {size} not supported (19 only)")
    komi = float(root.get("KM", ("0",))[0])
    handicap = int(root.get("HA", ("0",))[0])
    result = root.get("RE", (None,))[0]
    try:
        handicap_stones = tuple(parse_sgf_point(v) for v in root.get("AB", ()))
    except CoordError as exc:
        raise SgfError(f"bad AB point: {exc}") from exc

    metadata: dict[str, tuple[str, ...]] = {
        k: v for k, v in root.items() if k not in _KNOWN
    }

    moves: list[Move] = []
    for node in nodes:
        for ident in ("B", "W"):
            if ident in node:
                color = Color.BLACK if ident == "B" else Color.WHITE
                try:
                    coord = parse_sgf_point(node[ident][0])
                except CoordError as exc:
                    raise SgfError(f"bad move point at ply {len(moves) + 1}: {exc}") from exc
                moves.append(Move(color, coord, len(moves) + 1))

    record = GameRecord(
        moves=tuple(moves),
        komi=komi,
        handicap=handicap,
        handicap_stones=handicap_stones,
        result=result,
        metadata=metadata,
    )
    replay_record(record)  # validates legality, reports ply on failure
    return record


def _escape(value: str) -> str:
    return value.replace("\\", "\\\\").replace("]", "\\]")


def _fmt_number(value: float) -> str:
    if value == int(value):
        return str(int(value))
    return repr(value)


def serialize_sgf(record: GameRecord) -> str:
    parts = [f"(;FF[4]GM[1]SZ[{record.board_size}]", f"KM[{_fmt_number(record.komi)}]"]
    if record.handicap > 0:
        parts.append(f"HA[{record.handicap}]")
    if record.result is not None:
        parts.append(f"RE[{_escape(record.result)}]")
    if record.handicap_stones:
        parts.append("AB" + "".join(f"[{format_sgf_point(c)}]" for c in record.handicap_stones))
    for key in sorted(record.metadata):
        parts.append(key + "".join(f"[{_escape(v)}]" for v in record.metadata[key]))
    for move in record.moves:
        parts.append(f";{move.color.letter}[{format_sgf_point(move.coord)}]")
    parts.append(")")
    return "".join(parts)
