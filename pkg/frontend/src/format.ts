// Rendering of symbolic answer sets into compact panel strings.

import type { Classification, SymbolicSet } from "./types.js";

const SUPERSCRIPTS: Record<string, string> = {
  "-": "⁻", "0": "⁰", "1": "¹", "2": "²", "3": "³",
  "4": "⁴", "5": "⁵", "6": "⁶", "7": "⁷", "8": "⁸",
  "9": "⁹",
};

export function superscript(n: number): string {
  return String(n).split("").map((c) => SUPERSCRIPTS[c] ?? c).join("");
}

const FAMILY_SYMBOL: Record<string, string> = {
  alpha: "α",
  beta: "β",
  da: "a",
  db: "b",
};

function memberLabel(literal: string): string {
  // literals look like "alpha:2", "da:-1", or constants "M", "M'"
  const [family, index] = literal.split(":");
  if (index === undefined || family === undefined) return literal;
  const symbol = FAMILY_SYMBOL[family] ?? family;
  return `${symbol}${superscript(Number(index))}`;
}

function rangeLabel(family: string, lo: number | null, hi: number | null): string {
  const symbol = FAMILY_SYMBOL[family] ?? family;
  if (lo === null && hi === null) return `${symbol}ʲ (all j)`;
  if (lo === null) return `${symbol}ʲ (j ≤ ${hi})`;
  if (hi === null) return `${symbol}ʲ (j ≥ ${lo})`;
  return `${symbol}ʲ (${lo} ≤ j ≤ ${hi})`;
}

export function describeSet(set: SymbolicSet, cardinality: string): string {
  const parts: string[] = [];
  parts.push(...set.constants.map(memberLabel));
  // interleave finite members in their given order, e.g. alpha2 beta2 alpha3 ...
  const byIndex = new Map<number, string[]>();
  const loose: string[] = [];
  for (const literal of set.finite) {
    const idx = Number(literal.split(":")[1]);
    if (Number.isFinite(idx)) {
      const bucket = byIndex.get(idx) ?? [];
      bucket.push(memberLabel(literal));
      byIndex.set(idx, bucket);
    } else {
      loose.push(memberLabel(literal));
    }
  }
  for (const idx of [...byIndex.keys()].sort((a, b) => a - b)) {
    parts.push(...(byIndex.get(idx) ?? []));
  }
  parts.push(...loose);
  parts.push(...set.ranges.map((r) => rangeLabel(r.family, r.lo, r.hi)));
  const body = parts.length ? parts.join("") : "∅";
  const count = cardinality === "inf" ? "∞" : cardinality;
  return `${body} (${count})`;
}

export function summarize(classification: Classification): string {
  const c1 = classification.c1_ss.length
    ? classification.c1_ss.join("")
    : "∅";
  return [
    `C₁,σσ: ${c1}`,
    `C₀,σσ: ${describeSet(classification.c0_ss, classification.cardinalities.c0)}`,
    `points: ${describeSet(classification.derived_ss, classification.cardinalities.derived)}`,
  ].join("  |  ");
}

export function witnessLine(witnesses: Record<string, unknown>): string {
  const interesting = ["row", "t", "q", "v", "s", "N", "u", "U", "V"];
  const parts: string[] = [];
  for (const key of interesting) {
    const value = witnesses[key];
    if (value === undefined) continue;
    if (typeof value === "object" && value !== null && "approx" in value) {
      parts.push(`${key}≈${(value as { approx: number }).approx.toFixed(4)}`);
    } else {
      parts.push(`${key}=${String(value)}`);
    }
  }
  return parts.join("  ");
}
