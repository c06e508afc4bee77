// DOM wiring: canvas, chart picker, sheet inputs, history panel.

import { ServiceClient } from "./api.js";
import { describeSet, summarize, witnessLine } from "./format.js";
import {
  buildScene,
  fitTransform,
  fromScreen,
  pickVector,
  toScreen,
  type DrawOp,
  type ScreenTransform,
} from "./render.js";
import { Session } from "./session.js";
import type { PointSpec } from "./types.js";

const SERVICE_URL =
  new URLSearchParams(window.location.search).get("service") ??
  "http://127.0.0.1:8471";

const ROW7: PointSpec = {
  chart: { family: "b_b_Mp", index: 0 },
  charges: [
    { re: "-1", im: "1" },
    { re: "-2", im: "1" },
    { re: "-4", im: "1" },
  ],
  sheets: [0, 0, 0],
};

// One known-valid starting point per chart family.
const DEFAULT_POINTS: Record<string, PointSpec> = {
  b_b_Mp: ROW7,
  M_b_b: {
    chart: { family: "M_b_b", index: 0 },
    charges: [{ re: "1", im: "-1" }, { re: "-1", im: "1" }, { re: "-2", im: "1" }],
    sheets: [-1, 0, 0],
  },
  b_a_b: {
    chart: { family: "b_a_b", index: 0 },
    charges: [{ re: "1", im: "1" }, { re: "-1", im: "1" }, { re: "-1", im: "-2" }],
    sheets: [0, 0, 1],
  },
  a_a_M: {
    chart: { family: "a_a_M", index: 0 },
    charges: [{ re: "-1", im: "1" }, { re: "-2", im: "1" }, { re: "-4", im: "1" }],
    sheets: [0, 0, 0],
  },
  Mp_a_a: {
    chart: { family: "Mp_a_a", index: 0 },
    charges: [{ re: "1", im: "-1" }, { re: "-1", im: "1" }, { re: "-2", im: "1" }],
    sheets: [-1, 0, 0],
  },
  a_b_a: {
    chart: { family: "a_b_a", index: 0 },
    charges: [{ re: "0", im: "1" }, { re: "-1", im: "-2" }, { re: "2", im: "-1" }],
    sheets: [0, 1, 1],
  },
  a_M_b: {
    chart: { family: "a_M_b", index: 0 },
    charges: [{ re: "0", im: "1" }, { re: "0", im: "2" }, { re: "0", im: "-3" }],
    sheets: [0, 0, 1],
  },
  b_Mp_a: {
    chart: { family: "b_Mp_a", index: 0 },
    charges: [{ re: "0", im: "1" }, { re: "0", im: "2" }, { re: "0", im: "-3" }],
    sheets: [0, 0, 1],
  },
};

const client = new ServiceClient(SERVICE_URL);
const session = new Session(client);

const canvas = document.getElementById("plane") as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;
const panel = document.getElementById("panel")!;
const historyList = document.getElementById("history")!;
const banner = document.getElementById("banner")!;

let scene: DrawOp[] = [];
let transform: ScreenTransform = { scale: 60, originX: 0, originY: 0 };
let dragging: 0 | 1 | 2 | null = null;

function redraw(): void {
  const entry = session.state.history.at(-1);
  const point = session.state.current;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  if (!point) return;
  scene = buildScene(point, entry?.classification ?? null);
  transform = fitTransform(scene, canvas.width, canvas.height);

  // axes
  ctx.strokeStyle = "#dddddd";
  ctx.beginPath();
  ctx.moveTo(0, transform.originY);
  ctx.lineTo(canvas.width, transform.originY);
  ctx.moveTo(transform.originX, 0);
  ctx.lineTo(transform.originX, canvas.height);
  ctx.stroke();

  for (const op of scene) {
    if (op.kind === "arc") {
      ctx.strokeStyle = op.color;
      ctx.setLineDash([4, 4]);
      ctx.beginPath();
      ctx.arc(
        transform.originX,
        transform.originY,
        op.radius * transform.scale,
        -op.toAngle,
        -op.fromAngle,
      );
      ctx.stroke();
      ctx.setLineDash([]);
      continue;
    }
    const tip = toScreen(transform, op.to);
    ctx.strokeStyle = op.color;
    ctx.fillStyle = op.color;
    ctx.lineWidth = op.draggable ? 2 : 1;
    ctx.beginPath();
    ctx.moveTo(transform.originX, transform.originY);
    ctx.lineTo(tip.x, tip.y);
    ctx.stroke();
    ctx.beginPath();
    ctx.arc(tip.x, tip.y, op.draggable ? 6 : 3, 0, 2 * Math.PI);
    ctx.fill();
    ctx.fillText(op.label, tip.x + 8, tip.y - 8);
  }

  if (session.state.violation.length) {
    banner.textContent = `rejected: ${session.state.violation.join("; ")}`;
    banner.className = "banner error";
  } else if (!session.state.exact) {
    banner.textContent = "approximate input in effect";
    banner.className = "banner warn";
  } else {
    banner.textContent = "";
    banner.className = "banner";
  }

  if (entry) {
    panel.innerHTML = [
      `<div class="loc">${entry.location}</div>`,
      `<div>${summarize(entry.classification)}</div>`,
      `<div class="witness">${witnessLine(entry.classification.witnesses)}</div>`,
    ].join("");
  }

  historyList.innerHTML = session.state.history
    .map((h) => {
      const cls = h.wallCrossed ? "crossing" : "";
      const c0 = describeSet(
        h.classification.c0_ss,
        h.classification.cardinalities.c0,
      );
      return `<li class="${cls}">#${h.seq} ${h.location} | C₁:${h.c1Summary} | ${c0}</li>`;
    })
    .join("");
}

canvas.addEventListener("mousedown", (event) => {
  const rect = canvas.getBoundingClientRect();
  dragging = pickVector(
    scene,
    transform,
    event.clientX - rect.left,
    event.clientY - rect.top,
  );
});

canvas.addEventListener("mouseup", async (event) => {
  if (dragging === null) return;
  const which = dragging;
  dragging = null;
  const rect = canvas.getBoundingClientRect();
  const world = fromScreen(
    transform,
    event.clientX - rect.left,
    event.clientY - rect.top,
  );
  try {
    await session.dragCharge(which, world.x, world.y);
  } catch (err) {
    banner.textContent = `offline: ${String(err)}`;
    banner.className = "banner error";
  }
  redraw();
});

function sheetInputs(): HTMLInputElement[] {
  return [0, 1, 2].map(
    (i) => document.getElementById(`sheet-${i}`) as HTMLInputElement,
  );
}

function syncSheetInputs(): void {
  const point = session.state.current;
  if (!point) return;
  sheetInputs().forEach((input, i) => {
    input.value = String(point.sheets[i]);
  });
}

async function boot(): Promise<void> {
  const picker = document.getElementById("chart-picker") as HTMLSelectElement;
  try {
    const families = await client.charts();
    for (const family of families) {
      const option = document.createElement("option");
      option.value = family.family;
      option.textContent = `${family.family}: (${family.objects.join(", ")})`;
      picker.appendChild(option);
    }
    picker.value = ROW7.chart.family;
    await session.setPoint(ROW7);
  } catch (err) {
    banner.textContent = `service unreachable at ${SERVICE_URL}: ${String(err)}`;
    banner.className = "banner error";
  }
  picker.addEventListener("change", async () => {
    const fallback = DEFAULT_POINTS[picker.value];
    if (fallback) {
      await session.setPoint(fallback);
      syncSheetInputs();
      redraw();
    }
  });
  sheetInputs().forEach((input, i) => {
    input.addEventListener("change", async () => {
      const point = session.state.current;
      if (!point) return;
      const sheets = [...point.sheets] as PointSpec["sheets"];
      sheets[i] = Number(input.value);
      await session.setPoint({ ...point, sheets });
      redraw();
    });
  });
  syncSheetInputs();
  redraw();
}

void boot();
