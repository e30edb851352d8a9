// Wire types for the goassess service. Field names mirror the service
// schema exactly; every value the UI shows comes from these messages.

export type StoneColor = "black" | "white";

export interface SuggestionWire {
  vertex: string;
  sn: number;
  wr: number;
}

export interface CgsWire {
  move_no: number;
  inputs: Record<string, number>;
  crisp: number;
  label: string;
  clamped: string[];
}

export interface FrameMessage {
  type: "frame";
  move_no: number;
  move: { color: StoneColor; vertex: string };
  suggestions: SuggestionWire[];
  sn: number;
  wr: number;
  matched_rank: number | null;
  tmr: [number, number, number];
  cgs: CgsWire | null;
  timestamp: number;
}

export interface VerdictWire {
  method: 1 | 2;
  verdict: string;
  correct: boolean | null;
}

export interface CommentaryMessage {
  type: "commentary";
  result: string | null;
  ogs: string;
  text: string | null;
  verdicts: { method1: VerdictWire; method2: VerdictWire };
  timestamp: number;
}

export interface GapMessage {
  type: "gap";
  resync: true;
}

export type StreamMessage = FrameMessage | CommentaryMessage | GapMessage;

export interface SnapshotWire {
  id: string;
  status: "open" | "finished";
  fml_variant: string;
  komi: number;
  move_no: number;
  to_move: StoneColor;
  board: { black: string[]; white: string[] };
  captures: { black: number; white: number };
  suggestions: SuggestionWire[];
  last_frame: FrameMessage | null;
  cgs: CgsWire | null;
  commentary: CommentaryMessage | null;
}

export interface FramesWire {
  frames: FrameMessage[];
}
