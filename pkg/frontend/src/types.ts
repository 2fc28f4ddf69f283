/** A polyline in world coordinates. */
export interface Stroke {
  points: [number, number][];
}

/** One wallpaper group as served by GET /api/groups. */
export interface GroupInfo {
  signature: string;
  name: string;
  chi: { num: number; den: number };
  point_group_order: number;
  lattice: [number, number][];
}

/** World-coordinate window sent with every replicate request. */
export interface Viewport {
  xmin: number;
  ymin: number;
  xmax: number;
  ymax: number;
}

/** Everything the canvas needs to paint: the server's stroke images. */
export type Scene = Stroke[];

export interface ReplicateRequest {
  signature: string;
  cell_scale: number;
  strokes: Stroke[];
  viewport: Viewport;
}
