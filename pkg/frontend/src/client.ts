// Session client: snapshot + frame-history fetch, WebSocket subscription,
// automatic resync after drops or gaps, and move submission.

import type {
  FrameMessage,
  FramesWire,
  SnapshotWire,
  StoneColor,
  StreamMessage,
} from "./protocol.js";
import { ViewState, applyCommentary, applyFrame, stateFromHistory } from "./state.js";

export interface WebSocketLike {
  onopen: ((event: unknown) => void) | null;
  onmessage: ((event: { data: unknown }) => void) | null;
  onclose: ((event: unknown) => void) | null;
  onerror: ((event: unknown) => void) | null;
  close(): void;
}

export type WebSocketFactory = (url: string) => WebSocketLike;
export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export interface ClientOptions {
  apiBase: string; // e.g. "http://127.0.0.1:8572"
  fetchImpl?: FetchLike;
  webSocketFactory?: WebSocketFactory;
  reconnectDelayMs?: number;
  hintCap?: 3 | 5;
}

export class RequestRejected extends Error {
  constructor(public status: number, public detail: string) {
    super(`${status}: ${detail}`);
  }
}

export class SessionClient {
  private state_: ViewState | null = null;
  private socket: WebSocketLike | null = null;
  private listeners = new Set<(state: ViewState) => void>();
  private closed = false;
  private resyncing = false;
  private readonly fetchImpl: FetchLike;
  private readonly wsFactory: WebSocketFactory;
  private readonly reconnectDelay: number;
  private readonly hintCap: 3 | 5;

  constructor(
    public readonly sessionId: string,
    private readonly options: ClientOptions,
  ) {
    this.fetchImpl = options.fetchImpl ?? ((url, init) => fetch(url, init));
    this.wsFactory =
      options.webSocketFactory ??
      ((url) => new WebSocket(url) as unknown as WebSocketLike);
    this.reconnectDelay = options.reconnectDelayMs ?? 1000;
    this.hintCap = options.hintCap ?? 5;
  }

  get state(): ViewState {
    if (!this.state_) throw new Error("client not connected");
    return this.state_;
  }

  onChange(listener: (state: ViewState) => void): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private emit(): void {
    if (this.state_) for (const listener of this.listeners) listener(this.state_);
  }

  private url(path: string): string {
    return `${this.options.apiBase}${path}`;
  }

  private wsUrl(): string {
    const base = this.options.apiBase.replace(/^http/, "ws");
    return `${base}/games/${this.sessionId}/stream`;
  }

  private async getJson<T>(path: string): Promise<T> {
    const response = await this.fetchImpl(this.url(path));
    if (!response.ok) {
      throw new RequestRejected(response.status, await response.text());
    }
    return (await response.json()) as T;
  }

  private async postJson<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchImpl(this.url(path), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      let detail = "";
      try {
        const payload = (await response.json()) as { detail?: string };
        detail = payload.detail ?? "";
      } catch {
        detail = response.statusText;
      }
      throw new RequestRejected(response.status, detail);
    }
    return (await response.json()) as T;
  }

  /** Snapshot-first connect: render current state, then stream frames. */
  async connect(): Promise<ViewState> {
    await this.resync();
    this.openSocket();
    return this.state;
  }

  /** Refetch snapshot + full history and rebuild the state. */
  async resync(): Promise<void> {
    const snapshot = await this.getJson<SnapshotWire>(`/games/${this.sessionId}`);
    const history = await this.getJson<FramesWire>(`/games/${this.sessionId}/frames`);
    this.state_ = stateFromHistory(snapshot, history.frames, this.hintCap);
    this.emit();
  }

  private openSocket(): void {
    if (this.closed) return;
    const socket = this.wsFactory(this.wsUrl());
    this.socket = socket;
    socket.onmessage = (event) => {
      const message = JSON.parse(String(event.data)) as StreamMessage;
      this.handleMessage(message);
    };
    socket.onclose = () => this.scheduleReconnect();
    socket.onerror = () => {
      /* close follows */
    };
  }

  private scheduleReconnect(): void {
    if (this.closed) return;
    setTimeout(() => {
      if (this.closed) return;
      void this.resync()
        .then(() => this.openSocket())
        .catch(() => this.scheduleReconnect());
    }, this.reconnectDelay);
  }

  private handleMessage(message: StreamMessage): void {
    if (!this.state_) return;
    if (message.type === "frame") {
      const next = applyFrame(this.state_, message);
      if (next === this.state_) return; // duplicate delivery, nothing new
      this.state_ = next;
      if (next.needsResync) void this.forceResync();
      else this.emit();
    } else if (message.type === "commentary") {
      this.state_ = applyCommentary(this.state_, message);
      this.emit();
    } else {
      void this.forceResync();
    }
  }

  private async forceResync(): Promise<void> {
    if (this.resyncing) return;
    this.resyncing = true;
    try {
      await this.resync();
    } finally {
      this.resyncing = false;
    }
  }

  /** Submit a human move; the returned frame is applied immediately and
   * its re-delivery over the stream is a no-op. Rejections leave the
   * board untouched and surface as RequestRejected. */
  async submitMove(color: StoneColor, vertex: string): Promise<FrameMessage> {
    const frame = await this.postJson<FrameMessage>(
      `/games/${this.sessionId}/moves`,
      { color, vertex },
    );
    this.handleMessage(frame);
    return frame;
  }

  async finish(result?: string): Promise<void> {
    const payload = await this.postJson<StreamMessage>(
      `/games/${this.sessionId}/finish`,
      result ? { result } : {},
    );
    if (payload.type === "commentary") this.handleMessage(payload);
  }

  close(): void {
    this.closed = true;
    this.socket?.close();
  }
}

export async function createGame(
  options: ClientOptions,
  engine: Record<string, unknown> = { kind: "stub", seed: 42 },
  fmlVariant = "FML-2",
): Promise<SessionClient> {
  const fetchImpl = options.fetchImpl ?? ((url: string, init?: RequestInit) => fetch(url, init));
  const response = await fetchImpl(`${options.apiBase}/games`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ engine, fml_variant: fmlVariant }),
  });
  if (!response.ok) {
    throw new RequestRejected(response.status, await response.text());
  }
  const snapshot = (await response.json()) as SnapshotWire;
  return new SessionClient(snapshot.id, options);
}
