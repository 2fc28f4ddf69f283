import type { GroupInfo, ReplicateRequest, Scene, Stroke, Viewport } from "./types.js";

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/**
 * Thin typed client for the symmetry service. All symmetry math happens
 * on the server; this module only moves JSON back and forth.
 */
export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) => fetch(input, init),
  ) {}

  async fetchGroups(): Promise<GroupInfo[]> {
    const res = await this.fetchImpl(`${this.baseUrl}/api/groups`);
    if (!res.ok) {
      throw new Error(`groups request failed: ${res.status}`);
    }
    return (await res.json()) as GroupInfo[];
  }

  async replicate(
    signature: string,
    cellScale: number,
    strokes: Stroke[],
    viewport: Viewport,
  ): Promise<Scene> {
    const body: ReplicateRequest = {
      signature,
      cell_scale: cellScale,
      strokes,
      viewport,
    };
    const res = await this.fetchImpl(`${this.baseUrl}/api/replicate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!res.ok) {
      let detail = `status ${res.status}`;
      try {
        const payload = (await res.json()) as { detail?: string };
        if (payload.detail) detail = payload.detail;
      } catch {
        /* non-JSON error body; keep the status text */
      }
      throw new Error(`replicate request failed: ${detail}`);
    }
    const payload = (await res.json()) as { strokes: Scene };
    return payload.strokes;
  }
}
