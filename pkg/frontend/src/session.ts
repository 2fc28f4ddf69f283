import type { Scene, Stroke, Viewport } from "./types.js";

export type ReplicateFn = (
  signature: string,
  cellScale: number,
  strokes: Stroke[],
  viewport: Viewport,
) => Promise<Scene>;

export interface SessionEvents {
  /** Fired whenever the rendered scene changes (in request order). */
  onScene?: (scene: Scene) => void;
  /** Fired when a replicate call fails; the stroke stays queued in history. */
  onError?: (error: Error) => void;
}

/**
 * Drawing-session state machine. Holds the stroke history, the undo/redo
 * stacks, and the scenes the server returned. The client never computes
 * symmetry: every scene is exactly one /api/replicate response (cached per
 * history depth so undo/redo restore identical pixels without refetching).
 *
 * Requests are chained so at most one replicate call is in flight and
 * responses are applied strictly in order.
 */
export class DoodleSession {
  private signatures: string[] = [];
  private signature = "";
  private cellScale = 1;
  private history: Stroke[] = [];
  private redoStack: Stroke[] = [];
  /** sceneByDepth[k] is the server's scene for history.slice(0, k). */
  private sceneByDepth: (Scene | undefined)[] = [[]];
  private scene: Scene = [];
  private chain: Promise<void> = Promise.resolve();
  private generation = 0;

  constructor(
    private readonly replicateFn: ReplicateFn,
    public viewport: Viewport = { xmin: 0, ymin: 0, xmax: 3, ymax: 3 },
    private readonly events: SessionEvents = {},
  ) {}

  setGroups(signatures: string[]): void {
    this.signatures = [...signatures];
    if (!this.signature && signatures.length > 0) {
      this.signature = signatures[0];
    }
  }

  get selectedSignature(): string {
    return this.signature;
  }

  get strokeCount(): number {
    return this.history.length;
  }

  get redoCount(): number {
    return this.redoStack.length;
  }

  get currentScene(): Scene {
    return this.scene;
  }

  /** Switch groups; unknown signatures are rejected, selection unchanged. */
  selectGroup(signature: string): Promise<void> {
    if (!this.signatures.includes(signature)) {
      throw new Error(`unknown signature: ${signature}`);
    }
    if (signature === this.signature) {
      return this.chain;
    }
    this.signature = signature;
    this.invalidateScenes();
    return this.requestScene(this.history.length);
  }

  setCellScale(scale: number): Promise<void> {
    if (!(scale > 0) || !Number.isFinite(scale)) {
      throw new Error(`cell scale must be positive, got ${scale}`);
    }
    if (scale === this.cellScale) {
      return this.chain;
    }
    this.cellScale = scale;
    this.invalidateScenes();
    return this.requestScene(this.history.length);
  }

  /** Append a stroke; starting a new branch clears the redo stack. */
  addStroke(stroke: Stroke): Promise<void> {
    this.history.push(stroke);
    this.redoStack = [];
    this.sceneByDepth.length = this.history.length; // drop stale deeper scenes
    return this.requestScene(this.history.length);
  }

  undo(): Promise<void> {
    if (this.history.length === 0) {
      return this.chain;
    }
    this.redoStack.push(this.history.pop()!);
    return this.requestScene(this.history.length);
  }

  redo(): Promise<void> {
    if (this.redoStack.length === 0) {
      return this.chain;
    }
    this.history.push(this.redoStack.pop()!);
    return this.requestScene(this.history.length);
  }

  clear(): Promise<void> {
    this.history = [];
    this.redoStack = [];
    this.invalidateScenes();
    return this.requestScene(0);
  }

  private invalidateScenes(): void {
    this.sceneByDepth = [[]];
  }

  private publish(scene: Scene): void {
    this.scene = scene;
    this.events.onScene?.(scene);
  }

  private requestScene(depth: number): Promise<void> {
    // Any state change supersedes whatever reply is still in flight.
    const generation = ++this.generation;
    const cached = this.sceneByDepth[depth];
    if (cached !== undefined) {
      this.publish(cached);
      return this.chain;
    }
    const strokes = this.history.slice(0, depth);
    const { signature, cellScale, viewport } = this;
    this.chain = this.chain.then(async () => {
      try {
        const scene = await this.replicateFn(
          signature,
          cellScale,
          strokes,
          viewport,
        );
        if (generation !== this.generation) {
          return; // a newer edit superseded this request
        }
        this.sceneByDepth[depth] = scene;
        this.publish(scene);
      } catch (error) {
        if (generation === this.generation) {
          this.events.onError?.(error as Error);
        }
      }
    });
    return this.chain;
  }
}
