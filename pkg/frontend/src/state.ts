// Pure view-state core. The UI is a renderer of service state: every
// number on screen (sn, wr, tmr, situation) is copied from a frame or
// snapshot field, never computed here. The only game logic the client
// owns is materializing stone positions from the service-validated moves
// (placement plus capture removal), which rendering a goban requires.

import { BOARD_SIZE, parseVertex, pointIndex } from "./coords.js";
import type {
  CgsWire,
  CommentaryMessage,
  FrameMessage,
  SnapshotWire,
  StoneColor,
  SuggestionWire,
} from "./protocol.js";

export type Cells = (StoneColor | null)[];

export interface SeriesPoint {
  moveNo: number;
  sn: number;
  wr: number;
  tmr1: number;
}

export interface MoveRef {
  color: StoneColor;
  vertex: string;
}

export interface ViewState {
  sessionId: string;
  status: "open" | "finished";
  cells: Cells;
  moves: MoveRef[]; // full accepted-move history, for board jumps
  moveNo: number; // ply about to be played
  toMove: StoneColor;
  lastFrame: FrameMessage | null;
  suggestions: SuggestionWire[];
  hintCap: 3 | 5;
  lastMatchedRank: number | null;
  gauge: CgsWire | null; // null while warming up
  series: { black: SeriesPoint[]; white: SeriesPoint[] };
  commentary: CommentaryMessage | null;
  viewPly: number | null; // null = live; otherwise board shows this prefix
  needsResync: boolean;
}

export const SERIES_WINDOW = 150;

export function emptyCells(): Cells {
  return new Array<StoneColor | null>(BOARD_SIZE * BOARD_SIZE).fill(null);
}

function neighbors(index: number): number[] {
  const col = index % BOARD_SIZE;
  const row = Math.floor(index / BOARD_SIZE);
  const out: number[] = [];
  if (col > 0) out.push(index - 1);
  if (col < BOARD_SIZE - 1) out.push(index + 1);
  if (row > 0) out.push(index - BOARD_SIZE);
  if (row < BOARD_SIZE - 1) out.push(index + BOARD_SIZE);
  return out;
}

function groupHasLiberty(cells: Cells, start: number): { group: number[]; alive: boolean } {
  const color = cells[start];
  const group = [start];
  const seen = new Set<number>([start]);
  let alive = false;
  const frontier = [start];
  while (frontier.length) {
    const index = frontier.pop()!;
    for (const nb of neighbors(index)) {
      const cell = cells[nb];
      if (cell === null) alive = true;
      else if (cell === color && !seen.has(nb)) {
        seen.add(nb);
        group.push(nb);
        frontier.push(nb);
      }
    }
  }
  return { group, alive };
}

/** Place a service-accepted move and remove captured opponent groups. */
export function applyMoveToCells(cells: Cells, color: StoneColor, vertex: string): Cells {
  const point = parseVertex(vertex);
  if (point === "pass") return cells;
  const next = cells.slice();
  const index = pointIndex(point);
  next[index] = color;
  const opponent: StoneColor = color === "black" ? "white" : "black";
  for (const nb of neighbors(index)) {
    if (next[nb] === opponent) {
      const { group, alive } = groupHasLiberty(next, nb);
      if (!alive) for (const g of group) next[g] = null;
    }
  }
  return next;
}

/** Board after the first `uptoPly` moves of the history. */
export function cellsAtPly(moves: MoveRef[], uptoPly: number): Cells {
  let cells = emptyCells();
  for (const move of moves.slice(0, uptoPly)) {
    cells = applyMoveToCells(cells, move.color, move.vertex);
  }
  return cells;
}

export function initialState(sessionId: string, hintCap: 3 | 5 = 5): ViewState {
  return {
    sessionId,
    status: "open",
    cells: emptyCells(),
    moves: [],
    moveNo: 1,
    toMove: "black",
    lastFrame: null,
    suggestions: [],
    hintCap,
    lastMatchedRank: null,
    gauge: null,
    series: { black: [], white: [] },
    commentary: null,
    viewPly: null,
    needsResync: false,
  };
}

/**
 * Apply one frame. Frames for plies already applied leave the state
 * untouched (the same object), so re-delivery is idempotent; a frame
 * from the future flags a gap that forces a resync.
 */
export function applyFrame(state: ViewState, frame: FrameMessage): ViewState {
  if (frame.move_no < state.moveNo) return state;
  if (frame.move_no > state.moveNo) return { ...state, needsResync: true };
  const color = frame.move.color;
  const point: SeriesPoint = {
    moveNo: frame.move_no,
    sn: frame.sn,
    wr: frame.wr,
    tmr1: frame.tmr[0],
  };
  const series = {
    black: color === "black" ? windowed(state.series.black, point) : state.series.black,
    white: color === "white" ? windowed(state.series.white, point) : state.series.white,
  };
  return {
    ...state,
    cells: applyMoveToCells(state.cells, color, frame.move.vertex),
    moves: [...state.moves, { color, vertex: frame.move.vertex }],
    moveNo: frame.move_no + 1,
    toMove: color === "black" ? "white" : "black",
    lastFrame: frame,
    suggestions: frame.suggestions,
    lastMatchedRank: frame.matched_rank,
    gauge: frame.cgs ?? state.gauge,
    series,
  };
}

function windowed(points: SeriesPoint[], next: SeriesPoint): SeriesPoint[] {
  const out = [...points, next];
  return out.length > SERIES_WINDOW ? out.slice(out.length - SERIES_WINDOW) : out;
}

export function applyCommentary(state: ViewState, message: CommentaryMessage): ViewState {
  return { ...state, status: "finished", commentary: message };
}

/** Rebuild the whole state from the snapshot plus the full frame history. */
export function stateFromHistory(
  snapshot: SnapshotWire,
  frames: FrameMessage[],
  hintCap: 3 | 5 = 5,
): ViewState {
  let state = initialState(snapshot.id, hintCap);
  state = { ...state, suggestions: snapshot.suggestions };
  for (const frame of frames) state = applyFrame(state, frame);
  if (snapshot.status === "finished" && snapshot.commentary) {
    state = applyCommentary(state, snapshot.commentary);
  } else if (snapshot.status === "finished") {
    state = { ...state, status: "finished" };
  }
  // the snapshot's pending suggestions are authoritative for the next mover
  state = { ...state, suggestions: snapshot.suggestions, needsResync: false };
  return state;
}

/** Suggestion badges to overlay, capped by the hint setting. */
export function visibleBadges(state: ViewState): SuggestionWire[] {
  return state.suggestions.slice(0, state.hintCap);
}

/** Cells to draw: the live board, or a historical prefix while browsing. */
export function displayCells(state: ViewState): Cells {
  if (state.viewPly === null) return state.cells;
  return cellsAtPly(state.moves, state.viewPly);
}

/** Move tokens like "B117 (20152)" inside commentary text, with offsets. */
export interface MoveToken {
  text: string;
  color: StoneColor;
  moveNo: number;
  value: number;
  start: number;
  end: number;
}

export function findMoveTokens(text: string): MoveToken[] {
  const out: MoveToken[] = [];
  const pattern = /([BW])(\d+) \((\d+(?:\.\d+)?)%?\)/g;
  let match: RegExpExecArray | null;
  while ((match = pattern.exec(text)) !== null) {
    out.push({
      text: match[0],
      color: match[1] === "B" ? "black" : "white",
      moveNo: Number(match[2]),
      value: Number(match[3]),
      start: match.index,
      end: match.index + match[0].length,
    });
  }
  return out;
}
