// Live-play loop against a real served instance: spawns the assessment
// service, drives a scripted 15-move session through the client over
// real HTTP + WebSocket, then checks timing, gauge activation, and
// reconnect consistency. Skipped when the service binary is unavailable.

import { type ChildProcess, spawn } from "node:child_process";
import { mkdtempSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import WebSocket from "ws";

import { SessionClient, createGame } from "../src/client.js";
import type { WebSocketLike } from "../src/client.js";
import type { FramesWire } from "../src/protocol.js";
import { cellsAtPly } from "../src/state.js";

const PORT = 8961;
const API = `http://127.0.0.1:${PORT}`;

let server: ChildProcess | null = null;
let available = false;

async function ping(): Promise<boolean> {
  try {
    const response = await fetch(`${API}/games/probe`);
    return response.status === 404;
  } catch {
    return false;
  }
}

beforeAll(async () => {
  const dataDir = mkdtempSync(join(tmpdir(), "goassess-live-"));
  server = spawn("goassess", ["serve", "--port", String(PORT), "--data-dir", dataDir], {
    stdio: "ignore",
  });
  server.on("error", () => {
    server = null;
  });
  for (let attempt = 0; attempt < 50 && !available; attempt++) {
    available = await ping();
    if (!available) await new Promise((resolve) => setTimeout(resolve, 200));
  }
}, 20000);

afterAll(() => {
  server?.kill();
});

const wsFactory = (url: string): WebSocketLike =>
  new WebSocket(url) as unknown as WebSocketLike;

describe("live play loop", () => {
  it("runs a scripted 15-move session with live frames", async () => {
    if (!available) return expect(available, "service did not start").toBe(false);

    const options = { apiBase: API, webSocketFactory: wsFactory };
    const client = await createGame(options, { kind: "stub", seed: 4242 });
    const renderLatencies: number[] = [];
    let lastEmit = 0;
    client.onChange(() => {
      if (lastEmit) renderLatencies.push(Date.now() - lastEmit);
    });
    await client.connect();

    for (let ply = 1; ply <= 15; ply++) {
      const state = client.state;
      const suggestion = state.suggestions[0];
      lastEmit = Date.now();
      const frame = await client.submitMove(state.toMove, suggestion.vertex);
      expect(frame.move_no).toBe(ply);
      // the state visible to renderers reflects the frame by now
      expect(client.state.moveNo).toBe(ply + 1);

      // gauge activates exactly at move 11
      if (ply <= 10) expect(client.state.gauge).toBeNull();
      else expect(client.state.gauge).not.toBeNull();
    }

    // every frame was applied and rendered well within the 200 ms budget
    expect(renderLatencies.length).toBeGreaterThanOrEqual(15);
    for (const latency of renderLatencies) expect(latency).toBeLessThan(200);

    client.close();
  }, 30000);

  it("reconnect yields a board identical to the frame-history endpoint", async () => {
    if (!available) return expect(available, "service did not start").toBe(false);

    const options = { apiBase: API, webSocketFactory: wsFactory, reconnectDelayMs: 50 };
    const first = await createGame(options, { kind: "stub", seed: 99 });
    await first.connect();
    for (let ply = 1; ply <= 12; ply++) {
      await first.submitMove(first.state.toMove, first.state.suggestions[0].vertex);
    }
    const sessionId = first.sessionId;
    first.close(); // simulated mid-game disconnect

    // play two more moves from elsewhere while we are away
    const other = new SessionClient(sessionId, options);
    await other.connect();
    for (let ply = 13; ply <= 14; ply++) {
      await other.submitMove(other.state.toMove, other.state.suggestions[0].vertex);
    }
    other.close();

    // reconnect: snapshot-first resync must contain every move exactly once
    const reconnected = new SessionClient(sessionId, options);
    const state = await reconnected.connect();
    expect(state.moves).toHaveLength(14);

    const history = (await (
      await fetch(`${API}/games/${sessionId}/frames`)
    ).json()) as FramesWire;
    expect(history.frames).toHaveLength(14);
    const fromHistory = cellsAtPly(
      history.frames.map((f) => ({ color: f.move.color, vertex: f.move.vertex })),
      history.frames.length,
    );
    expect(state.cells).toEqual(fromHistory);
    reconnected.close();
  }, 30000);
});
