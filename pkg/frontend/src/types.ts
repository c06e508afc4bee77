// Wire types of the classifier service.  All numbers are exact "p/q" strings.

export interface WireRational {
  re: string;
  im: string;
}

export interface ChartSpec {
  family: string;
  index: number;
}

export interface PointSpec {
  chart: ChartSpec;
  charges: [WireRational, WireRational, WireRational];
  sheets: [number, number, number];
}

export interface IndexRange {
  family: string;
  lo: number | null;
  hi: number | null;
}

export interface SymbolicSet {
  constants: string[];
  finite: string[];
  ranges: IndexRange[];
}

export interface PhaseJson {
  dir: WireRational;
  sheet: number;
  approx: number;
}

export interface Classification {
  derived_ss: SymbolicSet;
  c0_ss: SymbolicSet;
  c1_s: string[];
  c1_ss: string[];
  witnesses: Record<string, unknown>;
  cardinalities: { c0: string; derived: string; c1_s: string; c1_ss: string };
}

export interface ClassifyResponse {
  point: PointSpec;
  exact: boolean;
  version: string;
  classification: Classification;
}

export interface LocateResponse {
  point: PointSpec;
  exact: boolean;
  version: string;
  location: string;
}

export interface ErrorBody {
  error: { code: string; detail: string };
}

export interface ChartCatalogEntry {
  family: string;
  objects: string[];
  inequalities: string[];
}
