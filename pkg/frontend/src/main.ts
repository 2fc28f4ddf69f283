import { ApiClient } from "./api.js";
import { DoodleSession } from "./session.js";
import { ViewTransform, renderScene } from "./view.js";
import type { GroupInfo, Stroke } from "./types.js";

const CANVAS_SIZE = 600;

// Same-origin by default when the page is served by the API process;
// override by setting window.API_BASE before this script loads.
const API_BASE =
  (window as { API_BASE?: string }).API_BASE ?? "http://127.0.0.1:8000";

function buildLayout(): {
  canvas: HTMLCanvasElement;
  picker: HTMLSelectElement;
  undoBtn: HTMLButtonElement;
  redoBtn: HTMLButtonElement;
  clearBtn: HTMLButtonElement;
  status: HTMLDivElement;
} {
  document.title = "Wallpaper Doodle";
  const root = document.createElement("div");
  root.id = "app";
  root.innerHTML = `
    <h1>Wallpaper doodle</h1>
    <p class="hint">Pick one of the 17 symmetry groups and draw — every
    stroke is replicated by the server across the whole sheet.</p>
    <div class="toolbar">
      <label>group
        <select id="group-picker"></select>
      </label>
      <button id="undo-btn">undo</button>
      <button id="redo-btn">redo</button>
      <button id="clear-btn">clear</button>
      <span id="status"></span>
    </div>
    <canvas id="sheet" width="${CANVAS_SIZE}" height="${CANVAS_SIZE}"></canvas>
  `;
  document.body.appendChild(root);
  return {
    canvas: root.querySelector("#sheet") as HTMLCanvasElement,
    picker: root.querySelector("#group-picker") as HTMLSelectElement,
    undoBtn: root.querySelector("#undo-btn") as HTMLButtonElement,
    redoBtn: root.querySelector("#redo-btn") as HTMLButtonElement,
    clearBtn: root.querySelector("#clear-btn") as HTMLButtonElement,
    status: root.querySelector("#status") as HTMLDivElement,
  };
}

function fillPicker(picker: HTMLSelectElement, groups: GroupInfo[]): void {
  for (const group of groups) {
    const option = document.createElement("option");
    option.value = group.signature;
    option.textContent = `${group.signature} — ${group.name}`;
    picker.appendChild(option);
  }
}

async function start(): Promise<void> {
  const ui = buildLayout();
  const ctx = ui.canvas.getContext("2d")!;
  const api = new ApiClient(API_BASE);
  const view = new ViewTransform(
    { xmin: 0, ymin: 0, xmax: 3, ymax: 3 },
    CANVAS_SIZE,
    CANVAS_SIZE,
  );

  let preview: Stroke | undefined;
  const session = new DoodleSession(
    (signature, cellScale, strokes, viewport) =>
      api.replicate(signature, cellScale, strokes, viewport),
    view.viewport,
    {
      onScene: (scene) => {
        renderScene(ctx, view, scene, preview);
        ui.status.textContent = `${scene.length} stroke images`;
      },
      onError: (error) => {
        ui.status.textContent = `error: ${error.message}`;
      },
    },
  );

  let groups: GroupInfo[];
  try {
    groups = await api.fetchGroups();
  } catch (error) {
    ui.status.textContent =
      "cannot reach the symmetry service — run `orbifold serve` first";
    throw error;
  }
  fillPicker(ui.picker, groups);
  session.setGroups(groups.map((g) => g.signature));
  ui.picker.value = session.selectedSignature;
  renderScene(ctx, view, []);

  ui.picker.addEventListener("change", () => {
    void session.selectGroup(ui.picker.value);
  });
  ui.undoBtn.addEventListener("click", () => void session.undo());
  ui.redoBtn.addEventListener("click", () => void session.redo());
  ui.clearBtn.addEventListener("click", () => void session.clear());

  // Freehand input: preview the raw stroke locally while the pointer is
  // down; on release, commit it once and let the server replicate it.
  let drawing = false;
  ui.canvas.addEventListener("pointerdown", (event) => {
    drawing = true;
    ui.canvas.setPointerCapture(event.pointerId);
    const [wx, wy] = view.screenToWorld(event.offsetX, event.offsetY);
    preview = { points: [[wx, wy]] };
    renderScene(ctx, view, session.currentScene, preview);
  });
  ui.canvas.addEventListener("pointermove", (event) => {
    if (!drawing || !preview) return;
    const [wx, wy] = view.screenToWorld(event.offsetX, event.offsetY);
    preview.points.push([wx, wy]);
    renderScene(ctx, view, session.currentScene, preview);
  });
  const finish = () => {
    if (!drawing || !preview) return;
    drawing = false;
    const stroke = preview;
    preview = undefined;
    void session.addStroke(stroke);
  };
  ui.canvas.addEventListener("pointerup", finish);
  ui.canvas.addEventListener("pointercancel", finish);
}

void start();
