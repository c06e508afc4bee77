// Session state: the current point, the replayable history of service
// answers, and the drag logic.  The UI never computes classifications
// itself; every displayed set is the most recent service response, stored
// verbatim so a session can be replayed and byte-compared.

import { ServiceClient, isError } from "./api.js";
import { formatRational, parseRational, snap, toNumber } from "./rational.js";
import type {
  Classification,
  ClassifyResponse,
  LocateResponse,
  PointSpec,
  WireRational,
} from "./types.js";

export interface HistoryEntry {
  seq: number;
  point: PointSpec;
  location: string;
  c1Summary: string;
  classification: Classification;
  /** raw classify response body, exactly as the service sent it */
  classifyRaw: string;
  locateRaw: string;
  wallCrossed: boolean;
}

export interface SessionState {
  current: PointSpec | null;
  snapDenominator: number;
  history: HistoryEntry[];
  /** inequalities of the last rejected move, empty when current is valid */
  violation: string[];
  exact: boolean;
}

export function initialState(snapDenominator = 64): SessionState {
  return {
    current: null,
    snapDenominator,
    history: [],
    violation: [],
    exact: true,
  };
}

export function snapCharge(
  x: number,
  y: number,
  denominator: number,
): WireRational {
  return {
    re: formatRational(snap(x, denominator)),
    im: formatRational(snap(y, denominator)),
  };
}

export function chargeToXY(charge: WireRational): { x: number; y: number } {
  return {
    x: toNumber(parseRational(charge.re)),
    y: toNumber(parseRational(charge.im)),
  };
}

export class Session {
  state: SessionState;
  private seq = 0;
  private inFlight = 0;

  constructor(
    private readonly client: ServiceClient,
    snapDenominator = 64,
  ) {
    this.state = initialState(snapDenominator);
  }

  /** Validate and record a whole point (chart switch or initial load). */
  async setPoint(point: PointSpec): Promise<SessionState> {
    return this.acknowledge(point);
  }

  /**
   * Move one charge vector to a canvas position.  The target is snapped to
   * the rational grid, revalidated by the service and appended to history;
   * a stale response (superseded by a newer drag) is discarded.
   */
  async dragCharge(
    which: 0 | 1 | 2,
    targetX: number,
    targetY: number,
  ): Promise<SessionState> {
    if (!this.state.current) throw new Error("no current point");
    const snapped = snapCharge(targetX, targetY, this.state.snapDenominator);
    const charges = [...this.state.current.charges] as PointSpec["charges"];
    charges[which] = snapped;
    const moved: PointSpec = { ...this.state.current, charges };
    return this.acknowledge(moved);
  }

  private async acknowledge(point: PointSpec): Promise<SessionState> {
    const mySeq = ++this.seq;
    this.inFlight += 1;
    try {
      const classifyReply = await this.client.classify(point);
      if (mySeq !== this.seq) return this.state; // stale, discard
      if (isError(classifyReply.body)) {
        this.state = {
          ...this.state,
          violation: [classifyReply.body.error.detail],
        };
        return this.state;
      }
      const locateReply = await this.client.locate(point);
      if (mySeq !== this.seq) return this.state;
      if (isError(locateReply.body)) {
        this.state = {
          ...this.state,
          violation: [locateReply.body.error.detail],
        };
        return this.state;
      }
      const classifyBody = classifyReply.body as ClassifyResponse;
      const locateBody = locateReply.body as LocateResponse;
      const previous = this.state.history.at(-1);
      const entry: HistoryEntry = {
        seq: mySeq,
        point: classifyBody.point,
        location: locateBody.location,
        c1Summary: classifyBody.classification.c1_ss.join("") || "none",
        classification: classifyBody.classification,
        classifyRaw: classifyReply.raw,
        locateRaw: locateReply.raw,
        wallCrossed:
          previous !== undefined && previous.location !== locateBody.location,
      };
      this.state = {
        ...this.state,
        current: classifyBody.point,
        history: [...this.state.history, entry],
        violation: [],
        exact: classifyBody.exact,
      };
      return this.state;
    } finally {
      this.inFlight -= 1;
    }
  }
}
