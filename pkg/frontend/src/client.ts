// HTTP client for the engine service. Commands go up as trace lines;
// documents, source, and session traces come back down.

import type {
  ApplyError,
  DocumentPayload,
  EngineStatePayload,
  RegistryPayload,
} from "./types.js";

export class EngineError extends Error {
  readonly index?: number;
  readonly lineNo?: number;

  constructor(detail: ApplyError) {
    super(detail.error);
    this.index = detail.index;
    this.lineNo = detail.line;
  }
}

async function readError(response: Response): Promise<EngineError> {
  let detail: ApplyError;
  try {
    detail = (await response.json()) as ApplyError;
  } catch {
    detail = { error: `engine returned HTTP ${response.status}` };
  }
  return new EngineError(detail);
}

export class EngineClient {
  constructor(readonly baseUrl: string, readonly sessionId: string) {}

  static async createSession(
    baseUrl: string,
    width: number,
    height: number,
  ): Promise<EngineClient> {
    const response = await fetch(`${baseUrl}/api/session`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ width, height }),
    });
    if (!response.ok) throw await readError(response);
    const body = (await response.json()) as { session: string };
    return new EngineClient(baseUrl, body.session);
  }

  private url(tail: string): string {
    return `${this.baseUrl}/api/session/${this.sessionId}/${tail}`;
  }

  async send(lines: string[]): Promise<void> {
    if (lines.length === 0) return;
    const response = await fetch(this.url("commands"), {
      method: "POST",
      headers: { "Content-Type": "text/plain; charset=utf-8" },
      body: lines.join("\n") + "\n",
    });
    if (!response.ok) throw await readError(response);
  }

  async document(): Promise<{ bytes: string; payload: DocumentPayload }> {
    const response = await fetch(this.url("document"));
    if (!response.ok) throw await readError(response);
    const bytes = await response.text();
    return { bytes, payload: JSON.parse(bytes) as DocumentPayload };
  }

  async source(): Promise<string> {
    const response = await fetch(this.url("source"));
    if (!response.ok) throw await readError(response);
    return response.text();
  }

  async trace(): Promise<string> {
    const response = await fetch(this.url("trace"));
    if (!response.ok) throw await readError(response);
    return response.text();
  }

  async state(): Promise<EngineStatePayload> {
    const response = await fetch(this.url("state"));
    if (!response.ok) throw await readError(response);
    return (await response.json()) as EngineStatePayload;
  }

  static async registry(baseUrl: string): Promise<RegistryPayload> {
    const response = await fetch(`${baseUrl}/api/registry`);
    if (!response.ok) throw await readError(response);
    return (await response.json()) as RegistryPayload;
  }
}
