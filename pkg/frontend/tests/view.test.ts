import { describe, expect, it } from "vitest";

import { ViewTransform } from "../src/view.js";

describe("ViewTransform", () => {
  const view = new ViewTransform({ xmin: 0, ymin: 0, xmax: 3, ymax: 3 }, 600, 600);

  it("maps the viewport corners to the canvas corners", () => {
    expect(view.worldToScreen(0, 0)).toEqual([0, 600]); // bottom-left
    expect(view.worldToScreen(3, 3)).toEqual([600, 0]); // top-right
    expect(view.worldToScreen(1.5, 1.5)).toEqual([300, 300]);
  });

  it("round-trips world -> screen -> world", () => {
    for (const [x, y] of [
      [0.25, 0.75],
      [2.9, 0.1],
      [1.234, 2.345],
    ]) {
      const [px, py] = view.worldToScreen(x, y);
      const [wx, wy] = view.screenToWorld(px, py);
      expect(wx).toBeCloseTo(x, 12);
      expect(wy).toBeCloseTo(y, 12);
    }
  });

  it("handles asymmetric viewports and canvas sizes", () => {
    const wide = new ViewTransform(
      { xmin: -1, ymin: 0, xmax: 3, ymax: 2 },
      800,
      300,
    );
    expect(wide.worldToScreen(-1, 0)).toEqual([0, 300]);
    expect(wide.worldToScreen(3, 2)).toEqual([800, 0]);
    const [wx, wy] = wide.screenToWorld(...wide.worldToScreen(0.5, 1.5));
    expect(wx).toBeCloseTo(0.5, 12);
    expect(wy).toBeCloseTo(1.5, 12);
  });
});
