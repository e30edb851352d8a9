// Side panels: situation gauge, per-color series charts, commentary pane.

import type { ViewState } from "./state.js";
import { findMoveTokens } from "./state.js";
import type { SeriesPoint } from "./state.js";

const SVG_NS = "http://www.w3.org/2000/svg";

/** Gauge over [0, 100]: needle at the crisp value, label underneath.
 * Shows "warming up" until the first frame that carries a situation. */
export class GaugeView {
  readonly root: HTMLElement;

  constructor(doc: Document = document) {
    this.root = doc.createElement("div");
    this.root.className = "gauge warming-up";
    this.root.innerHTML =
      '<div class="gauge-track"><div class="gauge-needle"></div></div>' +
      '<div class="gauge-label">warming up</div>';
  }

  render(state: ViewState): void {
    const needle = this.root.querySelector<HTMLElement>(".gauge-needle")!;
    const label = this.root.querySelector<HTMLElement>(".gauge-label")!;
    if (!state.gauge) {
      this.root.classList.add("warming-up");
      label.textContent = "warming up";
      needle.style.left = "50%";
      return;
    }
    this.root.classList.remove("warming-up");
    needle.style.left = `${state.gauge.crisp}%`;
    label.textContent = `${state.gauge.label} (${state.gauge.crisp.toFixed(1)})`;
  }
}

function polyline(
  doc: Document,
  points: SeriesPoint[],
  value: (p: SeriesPoint) => number,
  scaleY: (v: number) => number,
  width: number,
  className: string,
): SVGPolylineElement {
  const line = doc.createElementNS(SVG_NS, "polyline");
  const first = points[0]?.moveNo ?? 0;
  const last = points[points.length - 1]?.moveNo ?? 1;
  const span = Math.max(1, last - first);
  const coords = points
    .map((p) => `${(((p.moveNo - first) / span) * width).toFixed(1)},${scaleY(value(p)).toFixed(1)}`)
    .join(" ");
  line.setAttribute("points", coords);
  line.setAttribute("class", className);
  return line;
}

/** Scrolling simulation-count and win-rate curves, one line per color. */
export class CurvesView {
  readonly root: HTMLElement;
  private readonly width = 360;
  private readonly height = 90;

  constructor(doc: Document = document) {
    this.root = doc.createElement("div");
    this.root.className = "curves";
  }

  render(state: ViewState, doc: Document = document): void {
    this.root.replaceChildren();
    const panels: [string, (p: SeriesPoint) => number, number][] = [
      ["simulations", (p) => p.sn, Math.max(1, ...state.series.black.map((p) => p.sn), ...state.series.white.map((p) => p.sn))],
      ["win rate", (p) => p.wr, 1],
    ];
    for (const [title, value, maximum] of panels) {
      const section = doc.createElement("div");
      const heading = doc.createElement("h3");
      heading.textContent = title;
      section.appendChild(heading);
      const svg = doc.createElementNS(SVG_NS, "svg");
      svg.setAttribute("viewBox", `0 0 ${this.width} ${this.height}`);
      svg.setAttribute("class", "curve");
      const scaleY = (v: number) => this.height - (v / maximum) * (this.height - 6) - 3;
      for (const color of ["black", "white"] as const) {
        const points = state.series[color];
        if (points.length) {
          svg.appendChild(polyline(doc, points, value, scaleY, this.width, `line ${color}`));
        }
      }
      section.appendChild(svg);
      this.root.appendChild(section);
    }
  }
}

export interface CommentaryCallbacks {
  onJump(moveNo: number): void;
}

/** Commentary pane; move tokens become links that jump the board. */
export class CommentaryView {
  readonly root: HTMLElement;

  constructor(private readonly callbacks: CommentaryCallbacks, doc: Document = document) {
    this.root = doc.createElement("div");
    this.root.className = "commentary hidden";
  }

  render(state: ViewState, doc: Document = document): void {
    if (!state.commentary || !state.commentary.text) {
      this.root.classList.add("hidden");
      this.root.replaceChildren();
      return;
    }
    this.root.classList.remove("hidden");
    this.root.replaceChildren();
    for (const line of state.commentary.text.split("\n")) {
      const paragraph = doc.createElement("p");
      let cursor = 0;
      for (const token of findMoveTokens(line)) {
        if (token.start > cursor) {
          paragraph.appendChild(doc.createTextNode(line.slice(cursor, token.start)));
        }
        const link = doc.createElement("a");
        link.href = "#";
        link.className = "move-token";
        link.dataset.moveNo = String(token.moveNo);
        link.textContent = token.text;
        link.addEventListener("click", (event) => {
          event.preventDefault();
          this.callbacks.onJump(token.moveNo);
        });
        paragraph.appendChild(link);
        cursor = token.end;
      }
      paragraph.appendChild(doc.createTextNode(line.slice(cursor)));
      this.root.appendChild(paragraph);
    }
  }
}
