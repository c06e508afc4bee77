// Thin typed client for the classifier service.  The raw response text is
// kept alongside the parsed body so the session history can store exactly
// what the service said, byte for byte.

import type {
  ChartCatalogEntry,
  ClassifyResponse,
  ErrorBody,
  LocateResponse,
  PointSpec,
} from "./types.js";

export interface ServiceReply<T> {
  ok: boolean;
  status: number;
  body: T | ErrorBody;
  raw: string;
}

export class ServiceClient {
  constructor(private readonly baseUrl: string) {}

  private async post<T>(path: string, payload: unknown): Promise<ServiceReply<T>> {
    const resp = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    const raw = await resp.text();
    return {
      ok: resp.ok,
      status: resp.status,
      body: JSON.parse(raw) as T | ErrorBody,
      raw,
    };
  }

  classify(point: PointSpec): Promise<ServiceReply<ClassifyResponse>> {
    return this.post<ClassifyResponse>("/classify", { point });
  }

  locate(point: PointSpec): Promise<ServiceReply<LocateResponse>> {
    return this.post<LocateResponse>("/locate", { point });
  }

  async charts(): Promise<ChartCatalogEntry[]> {
    const resp = await fetch(this.baseUrl + "/charts");
    const body = (await resp.json()) as { families: ChartCatalogEntry[] };
    return body.families;
  }
}

export function isError(body: unknown): body is ErrorBody {
  return typeof body === "object" && body !== null && "error" in body;
}
