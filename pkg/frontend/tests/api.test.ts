import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

describe("ApiClient", () => {
  it("fetches and returns the group list", async () => {
    const groups = [
      {
        signature: "**",
        name: "monoscopic",
        chi: { num: 0, den: 1 },
        point_group_order: 2,
        lattice: [
          [1, 0],
          [0, 1],
        ],
      },
    ];
    let requested = "";
    const client = new ApiClient("http://svc", async (input) => {
      requested = input;
      return jsonResponse(groups);
    });

    expect(await client.fetchGroups()).toEqual(groups);
    expect(requested).toBe("http://svc/api/groups");
  });

  it("raises on a failed group fetch", async () => {
    const client = new ApiClient("", async () => new Response("", { status: 503 }));
    await expect(client.fetchGroups()).rejects.toThrow(/503/);
  });

  it("sends the exact replicate body shape", async () => {
    let captured: { input: string; init?: RequestInit } | undefined;
    const client = new ApiClient("", async (input, init) => {
      captured = { input, init };
      return jsonResponse({ strokes: [{ points: [[0.7, 0.7]] }] });
    });

    const scene = await client.replicate(
      "2222",
      1,
      [{ points: [[0.3, 0.3]] }],
      { xmin: 0, ymin: 0, xmax: 1, ymax: 1 },
    );

    expect(captured!.input).toBe("/api/replicate");
    expect(captured!.init!.method).toBe("POST");
    expect(captured!.init!.headers).toEqual({ "content-type": "application/json" });
    expect(JSON.parse(captured!.init!.body as string)).toEqual({
      signature: "2222",
      cell_scale: 1,
      strokes: [{ points: [[0.3, 0.3]] }],
      viewport: { xmin: 0, ymin: 0, xmax: 1, ymax: 1 },
    });
    expect(scene).toEqual([{ points: [[0.7, 0.7]] }]);
  });

  it("surfaces the service's error detail", async () => {
    const client = new ApiClient("", async () =>
      jsonResponse({ detail: "'*532' is not one of the 17 plane signatures" }, 400),
    );
    await expect(
      client.replicate("*532", 1, [], { xmin: 0, ymin: 0, xmax: 1, ymax: 1 }),
    ).rejects.toThrow(/17 plane signatures/);
  });

  it("falls back to the status code for non-JSON errors", async () => {
    const client = new ApiClient("", async () => new Response("boom", { status: 500 }));
    await expect(
      client.replicate("o", 1, [], { xmin: 0, ymin: 0, xmax: 1, ymax: 1 }),
    ).rejects.toThrow(/status 500/);
  });
});
