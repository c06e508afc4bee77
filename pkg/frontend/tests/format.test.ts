import { describe, expect, it } from "vitest";

import { describeSet, summarize, superscript } from "../src/format.js";
import type { Classification } from "../src/types.js";

describe("format", () => {
  it("renders superscripts including negatives", () => {
    expect(superscript(2)).toBe("²");
    expect(superscript(-13)).toBe("⁻¹³");
  });

  it("renders the finite genus-zero set of the reference scenario", () => {
    const set = {
      constants: [],
      finite: ["alpha:2", "alpha:3", "alpha:4", "beta:2", "beta:3", "beta:4"],
      ranges: [],
    };
    expect(describeSet(set, "6")).toBe(
      "α²β²α³β³α⁴β⁴ (6)",
    );
  });

  it("renders empty and infinite sets", () => {
    expect(describeSet({ constants: [], finite: [], ranges: [] }, "0")).toBe(
      "∅ (0)",
    );
    const allB = {
      constants: ["M'"],
      finite: [],
      ranges: [{ family: "db", lo: null, hi: null }],
    };
    expect(describeSet(allB, "inf")).toContain("(all j)");
    expect(describeSet(allB, "inf")).toContain("∞");
  });

  it("summarizes a classification", () => {
    const classification: Classification = {
      derived_ss: {
        constants: ["M", "M'"],
        finite: ["da:2"],
        ranges: [{ family: "db", lo: null, hi: null }],
      },
      c0_ss: { constants: [], finite: ["alpha:2", "beta:2"], ranges: [] },
      c1_s: ["B"],
      c1_ss: ["B"],
      witnesses: {},
      cardinalities: { c0: "2", derived: "inf", c1_s: "1", c1_ss: "1" },
    };
    const line = summarize(classification);
    expect(line).toContain("C₁,σσ: B");
    expect(line).toContain("α²β² (2)");
  });
});
