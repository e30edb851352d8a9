// Entry point: wires the session client to the board, gauge, curves, and
// commentary. Query parameters: ?api=<base-url>&game=<session-id>
// (omit game to create a fresh stub session), &hints=3|5.

import { BoardView } from "./board.js";
import { SessionClient, createGame } from "./client.js";
import { CommentaryView, CurvesView, GaugeView } from "./panels.js";
import type { ViewState } from "./state.js";

function toast(message: string): void {
  const element = document.createElement("div");
  element.className = "toast";
  element.textContent = message;
  document.body.appendChild(element);
  setTimeout(() => element.remove(), 2500);
}

export async function start(root: HTMLElement): Promise<void> {
  const params = new URLSearchParams(window.location.search);
  const apiBase = params.get("api") ?? "http://127.0.0.1:8572";
  const hintCap = params.get("hints") === "3" ? 3 : 5;
  const gameId = params.get("game");

  const options = { apiBase, hintCap: hintCap as 3 | 5 };
  let client: SessionClient;
  if (gameId) {
    client = new SessionClient(gameId, options);
  } else {
    const seed = Number(params.get("seed") ?? 42);
    client = await createGame(options, { kind: "stub", seed });
    history.replaceState(null, "", `?api=${encodeURIComponent(apiBase)}&game=${client.sessionId}`);
  }

  const board = new BoardView({
    onPlay: (vertex) => {
      const state = client.state;
      if (state.status !== "open" || state.viewPly !== null) return;
      client.submitMove(state.toMove, vertex).catch((error) => {
        toast(`rejected: ${error.message}`);
      });
    },
  });
  const gauge = new GaugeView();
  const curves = new CurvesView();
  const commentary = new CommentaryView({
    onJump: (moveNo) => {
      const state = client.state;
      render({ ...state, viewPly: Math.min(moveNo, state.moves.length) });
    },
  });

  const status = document.createElement("div");
  status.className = "status-line";
  const live = document.createElement("button");
  live.textContent = "back to live";
  live.className = "hidden";
  live.addEventListener("click", () => render({ ...client.state, viewPly: null }));

  root.replaceChildren(board.root as unknown as Node, status, live, gauge.root, curves.root, commentary.root);

  function render(state: ViewState): void {
    board.render(state);
    gauge.render(state);
    curves.render(state);
    commentary.render(state);
    status.textContent =
      state.viewPly !== null
        ? `viewing move ${state.viewPly} of ${state.moves.length}`
        : `${state.status} | move ${state.moveNo} | ${state.toMove} to play`;
    live.classList.toggle("hidden", state.viewPly === null);
  }

  client.onChange(render);
  const state = await client.connect();
  render(state);
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  void start(document.getElementById("app")!);
}
