import type { Scene, Stroke, Viewport } from "./types.js";

/**
 * World <-> screen mapping. This is the only geometry the client does:
 * a scale-and-translate of the server's world-coordinate strokes onto
 * canvas pixels, with the y axis flipped so world "up" is screen "up".
 */
export class ViewTransform {
  constructor(
    public readonly viewport: Viewport,
    public readonly width: number,
    public readonly height: number,
  ) {}

  get scaleX(): number {
    return this.width / (this.viewport.xmax - this.viewport.xmin);
  }

  get scaleY(): number {
    return this.height / (this.viewport.ymax - this.viewport.ymin);
  }

  worldToScreen(x: number, y: number): [number, number] {
    return [
      (x - this.viewport.xmin) * this.scaleX,
      this.height - (y - this.viewport.ymin) * this.scaleY,
    ];
  }

  screenToWorld(px: number, py: number): [number, number] {
    return [
      this.viewport.xmin + px / this.scaleX,
      this.viewport.ymin + (this.height - py) / this.scaleY,
    ];
  }
}

function tracePolyline(
  ctx: CanvasRenderingContext2D,
  view: ViewTransform,
  stroke: Stroke,
): void {
  if (stroke.points.length === 0) return;
  const [x0, y0] = view.worldToScreen(...stroke.points[0]);
  ctx.beginPath();
  if (stroke.points.length === 1) {
    // A dot: draw a tiny filled disc so single taps stay visible.
    ctx.arc(x0, y0, ctx.lineWidth / 2, 0, 2 * Math.PI);
    ctx.fill();
    return;
  }
  ctx.moveTo(x0, y0);
  for (let i = 1; i < stroke.points.length; i += 1) {
    const [x, y] = view.worldToScreen(...stroke.points[i]);
    ctx.lineTo(x, y);
  }
  ctx.stroke();
}

/** Paint the server's scene verbatim, plus an optional in-progress stroke. */
export function renderScene(
  ctx: CanvasRenderingContext2D,
  view: ViewTransform,
  scene: Scene,
  preview?: Stroke,
): void {
  ctx.clearRect(0, 0, view.width, view.height);
  ctx.fillStyle = "#ffffff";
  ctx.fillRect(0, 0, view.width, view.height);

  drawCellGrid(ctx, view);

  ctx.strokeStyle = "#1a1a1a";
  ctx.fillStyle = "#1a1a1a";
  ctx.lineWidth = 2.5;
  ctx.lineCap = "round";
  ctx.lineJoin = "round";
  for (const stroke of scene) {
    tracePolyline(ctx, view, stroke);
  }

  if (preview) {
    ctx.strokeStyle = "#c0392b";
    ctx.fillStyle = "#c0392b";
    tracePolyline(ctx, view, preview);
  }
}

function drawCellGrid(ctx: CanvasRenderingContext2D, view: ViewTransform): void {
  ctx.strokeStyle = "#e3e3e3";
  ctx.lineWidth = 1;
  const { xmin, xmax, ymin, ymax } = view.viewport;
  for (let x = Math.ceil(xmin); x <= Math.floor(xmax); x += 1) {
    const [sx] = view.worldToScreen(x, 0);
    ctx.beginPath();
    ctx.moveTo(sx, 0);
    ctx.lineTo(sx, view.height);
    ctx.stroke();
  }
  for (let y = Math.ceil(ymin); y <= Math.floor(ymax); y += 1) {
    const [, sy] = view.worldToScreen(0, y);
    ctx.beginPath();
    ctx.moveTo(0, sy);
    ctx.lineTo(view.width, sy);
    ctx.stroke();
  }
}
