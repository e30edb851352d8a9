// SVG goban: stones from the view state, suggestion badges with rank and
// win rate (simulation count on hover), and click-to-play wiring.

import { BOARD_SIZE, GTP_COLUMNS, formatVertex, parseVertex } from "./coords.js";
import type { ViewState } from "./state.js";
import { displayCells, visibleBadges } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const CELL = 30;
const MARGIN = 34;
const SIZE = MARGIN * 2 + CELL * (BOARD_SIZE - 1);

export interface BoardCallbacks {
  onPlay(vertex: string): void;
}

export class BoardView {
  readonly root: SVGSVGElement;
  private stonesLayer: SVGGElement;
  private badgesLayer: SVGGElement;

  constructor(private readonly callbacks: BoardCallbacks, doc: Document = document) {
    this.root = doc.createElementNS(SVG_NS, "svg");
    this.root.setAttribute("viewBox", `0 0 ${SIZE} ${SIZE}`);
    this.root.setAttribute("class", "goban");
    this.drawGrid(doc);
    this.stonesLayer = doc.createElementNS(SVG_NS, "g");
    this.badgesLayer = doc.createElementNS(SVG_NS, "g");
    this.root.appendChild(this.stonesLayer);
    this.root.appendChild(this.badgesLayer);
    this.drawClickTargets(doc);
  }

  private x(col: number): number {
    return MARGIN + col * CELL;
  }

  private y(row: number): number {
    // row 0 (vertex row 1) renders at the bottom
    return MARGIN + (BOARD_SIZE - 1 - row) * CELL;
  }

  private drawGrid(doc: Document): void {
    const grid = doc.createElementNS(SVG_NS, "g");
    grid.setAttribute("class", "grid");
    for (let i = 0; i < BOARD_SIZE; i++) {
      const h = doc.createElementNS(SVG_NS, "line");
      h.setAttribute("x1", String(this.x(0)));
      h.setAttribute("x2", String(this.x(BOARD_SIZE - 1)));
      h.setAttribute("y1", String(this.y(i)));
      h.setAttribute("y2", String(this.y(i)));
      grid.appendChild(h);
      const v = doc.createElementNS(SVG_NS, "line");
      v.setAttribute("x1", String(this.x(i)));
      v.setAttribute("x2", String(this.x(i)));
      v.setAttribute("y1", String(this.y(0)));
      v.setAttribute("y2", String(this.y(BOARD_SIZE - 1)));
      grid.appendChild(v);
      const label = doc.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(this.x(i)));
      label.setAttribute("y", String(SIZE - 8));
      label.setAttribute("class", "coord-label");
      label.textContent = GTP_COLUMNS[i];
      grid.appendChild(label);
    }
    this.root.appendChild(grid);
  }

  private drawClickTargets(doc: Document): void {
    const targets = doc.createElementNS(SVG_NS, "g");
    for (let row = 0; row < BOARD_SIZE; row++) {
      for (let col = 0; col < BOARD_SIZE; col++) {
        const target = doc.createElementNS(SVG_NS, "rect");
        target.setAttribute("x", String(this.x(col) - CELL / 2));
        target.setAttribute("y", String(this.y(row) - CELL / 2));
        target.setAttribute("width", String(CELL));
        target.setAttribute("height", String(CELL));
        target.setAttribute("fill", "transparent");
        const vertex = formatVertex({ col, row });
        target.setAttribute("data-vertex", vertex);
        target.addEventListener("click", () => this.callbacks.onPlay(vertex));
        targets.appendChild(target);
      }
    }
    this.root.appendChild(targets);
  }

  render(state: ViewState, doc: Document = document): void {
    this.stonesLayer.replaceChildren();
    const cells = displayCells(state);
    for (let index = 0; index < cells.length; index++) {
      const stone = cells[index];
      if (!stone) continue;
      const col = index % BOARD_SIZE;
      const row = Math.floor(index / BOARD_SIZE);
      const circle = doc.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(this.x(col)));
      circle.setAttribute("cy", String(this.y(row)));
      circle.setAttribute("r", String(CELL * 0.46));
      circle.setAttribute("class", `stone ${stone}`);
      this.stonesLayer.appendChild(circle);
    }

    this.badgesLayer.replaceChildren();
    if (state.viewPly !== null || state.status !== "open") return;
    visibleBadges(state).forEach((suggestion, i) => {
      const point = parseVertex(suggestion.vertex);
      if (point === "pass") return;
      const group = doc.createElementNS(SVG_NS, "g");
      const followed =
        state.lastFrame !== null &&
        state.lastMatchedRank === i + 1 &&
        state.lastFrame.move.vertex === suggestion.vertex;
      group.setAttribute(
        "class",
        `badge rank-${i + 1}${followed ? " followed" : ""}`,
      );
      group.setAttribute("data-vertex", suggestion.vertex);
      group.setAttribute("data-rank", String(i + 1));
      const circle = doc.createElementNS(SVG_NS, "circle");
      circle.setAttribute("cx", String(this.x(point.col)));
      circle.setAttribute("cy", String(this.y(point.row)));
      circle.setAttribute("r", String(CELL * 0.42));
      group.appendChild(circle);
      const label = doc.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String(this.x(point.col)));
      label.setAttribute("y", String(this.y(point.row) - 4));
      label.textContent = String(i + 1);
      group.appendChild(label);
      const wr = doc.createElementNS(SVG_NS, "text");
      wr.setAttribute("x", String(this.x(point.col)));
      wr.setAttribute("y", String(this.y(point.row) + 9));
      wr.setAttribute("class", "badge-wr");
      wr.textContent = `${(suggestion.wr * 100).toFixed(0)}%`;
      group.appendChild(wr);
      const hover = doc.createElementNS(SVG_NS, "title");
      hover.textContent = `rank ${i + 1}: ${suggestion.vertex} sn=${suggestion.sn} wr=${suggestion.wr}`;
      group.appendChild(hover);
      this.badgesLayer.appendChild(group);
    });
  }
}
