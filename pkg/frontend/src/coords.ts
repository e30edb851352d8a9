// GTP vertex codec: "A1" is the lower-left corner, column letter I is
// skipped. Matches the service's coordinate convention.

export const BOARD_SIZE = 19;
export const GTP_COLUMNS = "ABCDEFGHJKLMNOPQRST";

export interface Point {
  col: number;
  row: number;
}

export function parseVertex(vertex: string): Point | "pass" {
  const trimmed = vertex.trim();
  if (trimmed.toLowerCase() === "pass") return "pass";
  const col = GTP_COLUMNS.indexOf(trimmed[0]?.toUpperCase() ?? "");
  const row = Number(trimmed.slice(1)) - 1;
  if (col < 0 || !Number.isInteger(row) || row < 0 || row >= BOARD_SIZE) {
    throw new Error(`bad vertex: ${vertex}`);
  }
  return { col, row };
}

export function formatVertex(point: Point | "pass"): string {
  if (point === "pass") return "pass";
  return `${GTP_COLUMNS[point.col]}${point.row + 1}`;
}

export function pointIndex(point: Point): number {
  return point.row * BOARD_SIZE + point.col;
}
