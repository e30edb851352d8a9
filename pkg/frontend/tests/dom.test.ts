// @vitest-environment jsdom
import { readFileSync } from "node:fs";
import { describe, expect, it, vi } from "vitest";

import { BoardView } from "../src/board.js";
import { CommentaryView, GaugeView } from "../src/panels.js";
import type { FrameMessage, SnapshotWire, CommentaryMessage } from "../src/protocol.js";
import { applyCommentary, stateFromHistory } from "../src/state.js";

// plain relative path: under jsdom import.meta.url is not a file: URL
const fixture = JSON.parse(
  readFileSync("tests/fixtures/session30.json", "utf8"),
) as {
  created: SnapshotWire;
  frames: FrameMessage[];
  final_snapshot: SnapshotWire;
  commentary: CommentaryMessage;
};

describe("board view", () => {
  it("renders one stone per occupied point", () => {
    const board = new BoardView({ onPlay: () => undefined });
    const state = stateFromHistory(fixture.final_snapshot, fixture.frames);
    board.render(state);
    const stones = board.root.querySelectorAll(".stone");
    const expected =
      fixture.final_snapshot.board.black.length +
      fixture.final_snapshot.board.white.length;
    expect(stones.length).toBe(expected);
  });

  it("overlays at most five suggestion badges with rank and win rate", () => {
    const board = new BoardView({ onPlay: () => undefined });
    const open = { ...fixture.created, suggestions: fixture.created.suggestions };
    const state = stateFromHistory(open, []);
    board.render(state);
    const badges = board.root.querySelectorAll(".badge");
    expect(badges.length).toBeLessThanOrEqual(5);
    expect(badges.length).toBe(fixture.created.suggestions.length);
    const first = badges[0];
    expect(first.querySelector("text")!.textContent).toBe("1");
    expect(first.querySelector(".badge-wr")!.textContent).toMatch(/%$/);
    // simulation count appears only in the hover title
    expect(first.querySelector("title")!.textContent).toContain("sn=");
  });

  it("clicking an intersection reports its vertex", () => {
    const onPlay = vi.fn();
    const board = new BoardView({ onPlay });
    document.body.appendChild(board.root);
    const target = board.root.querySelector<SVGRectElement>('rect[data-vertex="D4"]')!;
    target.dispatchEvent(new MouseEvent("click", { bubbles: true }));
    expect(onPlay).toHaveBeenCalledWith("D4");
  });

  it("marks the followed suggestion badge", () => {
    let state = stateFromHistory(fixture.created, fixture.frames.slice(0, 1));
    // fabricate: make the next suggestions include the played move as rank 1
    const frame = fixture.frames[0];
    if (frame.matched_rank !== null) {
      state = { ...state, suggestions: [{ vertex: frame.move.vertex, sn: 1, wr: 0.5 }] };
      state = { ...state, lastMatchedRank: 1 };
      const board = new BoardView({ onPlay: () => undefined });
      board.render(state);
      expect(board.root.querySelector(".badge.followed")).not.toBeNull();
    }
  });
});

describe("gauge view", () => {
  it("shows warming up until a situation arrives", () => {
    const gauge = new GaugeView();
    const warm = stateFromHistory(fixture.created, fixture.frames.slice(0, 5));
    gauge.render(warm);
    expect(gauge.root.className).toContain("warming-up");
    expect(gauge.root.textContent).toContain("warming up");

    const active = stateFromHistory(fixture.created, fixture.frames.slice(0, 12));
    gauge.render(active);
    expect(gauge.root.className).not.toContain("warming-up");
    expect(gauge.root.textContent).toContain(active.gauge!.label);
  });
});

describe("commentary view", () => {
  it("is hidden before the finish and links move tokens after", () => {
    const jumps: number[] = [];
    const view = new CommentaryView({ onJump: (n) => jumps.push(n) });
    let state = stateFromHistory(fixture.final_snapshot, fixture.frames);
    view.render({ ...state, commentary: null });
    expect(view.root.className).toContain("hidden");

    state = applyCommentary(state, fixture.commentary);
    view.render(state);
    expect(view.root.className).not.toContain("hidden");
    const links = view.root.querySelectorAll("a.move-token");
    expect(links.length).toBeGreaterThanOrEqual(12);
    (links[0] as HTMLAnchorElement).dispatchEvent(
      new MouseEvent("click", { bubbles: true, cancelable: true }),
    );
    expect(jumps.length).toBe(1);
    expect(jumps[0]).toBe(Number((links[0] as HTMLElement).dataset.moveNo));
  });

  it("final line comes verbatim from the service payload", () => {
    const view = new CommentaryView({ onJump: () => undefined });
    let state = stateFromHistory(fixture.final_snapshot, fixture.frames);
    state = applyCommentary(state, fixture.commentary);
    view.render(state);
    const paragraphs = view.root.querySelectorAll("p");
    const closing = paragraphs[paragraphs.length - 1].textContent;
    expect(closing).toBe(fixture.commentary.text!.split("\n").at(-1));
  });
});
