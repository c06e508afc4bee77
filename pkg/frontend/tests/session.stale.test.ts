// The session keeps a single in-flight sequence: when a newer drag starts
// before an older response arrives, the older answer must be discarded.

import { describe, expect, it } from "vitest";

import type { ServiceClient, ServiceReply } from "../src/api.js";
import { Session } from "../src/session.js";
import type {
  Classification,
  ClassifyResponse,
  LocateResponse,
  PointSpec,
} from "../src/types.js";

const BASE_POINT: PointSpec = {
  chart: { family: "b_b_Mp", index: 0 },
  charges: [
    { re: "-1", im: "1" },
    { re: "-2", im: "1" },
    { re: "-4", im: "1" },
  ],
  sheets: [0, 0, 0],
};

function emptyClassification(marker: string): Classification {
  return {
    derived_ss: { constants: [marker], finite: [], ranges: [] },
    c0_ss: { constants: [], finite: [], ranges: [] },
    c1_s: ["B"],
    c1_ss: ["B"],
    witnesses: {},
    cardinalities: { c0: "0", derived: "2", c1_s: "1", c1_ss: "1" },
  };
}

/** Fake client whose classify responses resolve in a controllable order. */
class FakeClient {
  pending: Array<{
    point: PointSpec;
    resolve: (reply: ServiceReply<ClassifyResponse>) => void;
  }> = [];

  classify(point: PointSpec): Promise<ServiceReply<ClassifyResponse>> {
    return new Promise((resolve) => {
      this.pending.push({ point, resolve });
    });
  }

  locate(point: PointSpec): Promise<ServiceReply<LocateResponse>> {
    const body: LocateResponse = {
      point,
      exact: true,
      version: "test",
      location: "ChB_interior",
    };
    return Promise.resolve({
      ok: true,
      status: 200,
      body,
      raw: JSON.stringify(body),
    });
  }

  release(index: number, marker: string): void {
    const entry = this.pending[index];
    if (!entry) throw new Error(`no pending request ${index}`);
    const body: ClassifyResponse = {
      point: entry.point,
      exact: true,
      version: "test",
      classification: emptyClassification(marker),
    };
    entry.resolve({ ok: true, status: 200, body, raw: JSON.stringify(body) });
  }
}

describe("stale responses", () => {
  it("keeps only the newest drag when an older response arrives late", async () => {
    const fake = new FakeClient();
    const session = new Session(fake as unknown as ServiceClient);
    const first = session.setPoint(BASE_POINT);
    // a second move supersedes the first before it resolved
    const second = session.setPoint({
      ...BASE_POINT,
      charges: [BASE_POINT.charges[0], BASE_POINT.charges[1], { re: "-5", im: "1" }],
    });
    expect(fake.pending).toHaveLength(2);
    fake.release(1, "newer");
    await second;
    fake.release(0, "older");
    await first;
    expect(session.state.history).toHaveLength(1);
    expect(
      session.state.history[0]?.classification.derived_ss.constants,
    ).toEqual(["newer"]);
  });
});
