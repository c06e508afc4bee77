// Scene construction for the complex-plane canvas, kept free of DOM types so
// the geometry is unit-testable.  A scene is a list of draw operations in
// world coordinates; the screen transform maps the charge plane onto pixels.

import { chargeToXY } from "./session.js";
import type { Classification, PointSpec, WireRational } from "./types.js";

export interface Vec {
  x: number;
  y: number;
}

export interface DrawVector {
  kind: "vector";
  to: Vec;
  label: string;
  color: string;
  draggable: boolean;
  chargeIndex?: 0 | 1 | 2;
}

export interface DrawArc {
  kind: "arc";
  fromAngle: number; // radians
  toAngle: number;
  radius: number;
  label: string;
  color: string;
}

export type DrawOp = DrawVector | DrawArc;

export interface ScreenTransform {
  scale: number;
  originX: number;
  originY: number;
}

export function fitTransform(
  ops: DrawOp[],
  width: number,
  height: number,
  margin = 40,
): ScreenTransform {
  let extent = 1;
  for (const op of ops) {
    if (op.kind === "vector") {
      extent = Math.max(extent, Math.abs(op.to.x), Math.abs(op.to.y));
    }
  }
  const scale = (Math.min(width, height) / 2 - margin) / extent;
  return { scale, originX: width / 2, originY: height / 2 };
}

export function toScreen(t: ScreenTransform, v: Vec): Vec {
  return { x: t.originX + v.x * t.scale, y: t.originY - v.y * t.scale };
}

export function fromScreen(t: ScreenTransform, px: number, py: number): Vec {
  return { x: (px - t.originX) / t.scale, y: (t.originY - py) / t.scale };
}

const CHART_OBJECT_LABELS: Record<string, [string, string, string]> = {
  Mp_a_a: ["M'", "a^m", "a^m+1"],
  a_b_a: ["a^m", "b^m+1", "a^m+1"],
  a_a_M: ["a^m", "a^m+1", "M"],
  a_M_b: ["a^m", "M", "b^m+1"],
  b_Mp_a: ["b^m", "M'", "a^m"],
  M_b_b: ["M", "b^m", "b^m+1"],
  b_a_b: ["b^m", "a^m", "b^m+1"],
  b_b_Mp: ["b^m", "b^m+1", "M'"],
};

const CHARGE_COLORS = ["#1f77b4", "#2ca02c", "#d62728"];

function wireToVec(charge: WireRational): Vec {
  const { x, y } = chargeToXY(charge);
  return { x, y };
}

function addDerived(
  ops: DrawOp[],
  label: string,
  value: Vec,
  color: string,
): void {
  ops.push({ kind: "vector", to: value, label, color, draggable: false });
}

/**
 * Draw list for a point: the three chart charges (draggable), the derived
 * vectors Z(delta), Z(M), Z(M') reconstructed by the same linear relations
 * the service uses, and phase arcs for the witnesses t, N, u when present.
 */
export function buildScene(
  point: PointSpec,
  classification: Classification | null,
): DrawOp[] {
  const ops: DrawOp[] = [];
  const labels = CHART_OBJECT_LABELS[point.chart.family] ?? ["E0", "E1", "E2"];
  const vectors = point.charges.map(wireToVec);
  vectors.forEach((v, i) => {
    ops.push({
      kind: "vector",
      to: v,
      label: labels[i] ?? `E${i}`,
      color: CHARGE_COLORS[i] ?? "#333333",
      draggable: true,
      chargeIndex: i as 0 | 1 | 2,
    });
  });
  const w = classification?.witnesses as
    | { t?: { approx: number }; U?: { approx: number }; V?: { approx: number } }
    | undefined;
  if (w?.t) {
    ops.push({
      kind: "arc",
      fromAngle: Math.PI * w.t.approx,
      toAngle: Math.PI * (w.t.approx + 1),
      radius: 0.9,
      label: "(t, t+1)",
      color: "#999999",
    });
  }
  // derived charge vectors via the class relations of the chart family
  const [z0, z1, z2] = vectors as [Vec, Vec, Vec];
  const sub = (p: Vec, q: Vec): Vec => ({ x: p.x - q.x, y: p.y - q.y });
  const add = (p: Vec, q: Vec): Vec => ({ x: p.x + q.x, y: p.y + q.y });
  switch (point.chart.family) {
    case "b_b_Mp":
    case "a_a_M":
      addDerived(ops, "Z(δ)", sub(z0, z1), "#9467bd");
      break;
    case "M_b_b":
    case "Mp_a_a":
      addDerived(ops, "Z(δ)", sub(z1, z2), "#9467bd");
      break;
    case "a_M_b": // Z(M') = Z(a^m) - Z(b^m+1), Z(delta) = Z(M) + Z(M')
      addDerived(ops, "Z(M')", sub(z0, z2), "#9467bd");
      addDerived(ops, "Z(δ)", add(z1, sub(z0, z2)), "#8c564b");
      break;
    case "b_Mp_a":
      addDerived(ops, "Z(M)", sub(z0, z2), "#9467bd");
      addDerived(ops, "Z(δ)", add(z1, sub(z0, z2)), "#8c564b");
      break;
    default:
      break;
  }
  return ops;
}

/** Hit test in screen space: index of the draggable vector near the pixel. */
export function pickVector(
  ops: DrawOp[],
  t: ScreenTransform,
  px: number,
  py: number,
  tolerance = 12,
): 0 | 1 | 2 | null {
  for (const op of ops) {
    if (op.kind !== "vector" || !op.draggable) continue;
    const s = toScreen(t, op.to);
    const d = Math.hypot(s.x - px, s.y - py);
    if (d <= tolerance && op.chargeIndex !== undefined) {
      return op.chargeIndex;
    }
  }
  return null;
}
