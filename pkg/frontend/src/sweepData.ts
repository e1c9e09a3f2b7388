/**
 * Parsing and validation for the three sweep CSVs.
 *
 * breakpoints.csv: index,c            (c exact "p/q")
 * segments.csv:    per-segment interval, supports, constant P1 weights and
 *                  P2 base/slope coefficients, all exact "p/q"
 * samples.csv:     float-valued plotting samples per segment
 */

import { readFileSync } from "node:fs";
import { join } from "node:path";
import Papa from "papaparse";

import { Frac, parseFrac } from "./rational.js";

export interface Breakpoint {
  index: number;
  c: Frac;
}

export interface Segment {
  id: string;
  cLo: Frac;
  cHi: Frac;
  supportP1: string[];
  supportP2: string[];
  p1: Map<string, Frac>;
  p2Base: Map<string, Frac>;
  p2Slope: Map<string, Frac>;
}

export interface SampleRow {
  segmentId: string;
  c: number;
  pi1: Map<string, number>;
  pi2: Map<string, number>;
  u1: number;
  u2: number;
}

export interface SweepBundle {
  breakpoints: Breakpoint[];
  segments: Segment[];
  samples: SampleRow[];
  p1Actions: string[];
  p2Actions: string[];
}

function rows(path: string): Record<string, string>[] {
  const text = readFileSync(path, "utf8");
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    const first = parsed.errors[0];
    throw new Error(`${path}: CSV parse error: ${first.message}`);
  }
  return parsed.data;
}

function need(row: Record<string, string>, column: string, path: string): string {
  const value = row[column];
  if (value === undefined || value === "") {
    throw new Error(`${path}: missing column ${JSON.stringify(column)}`);
  }
  return value;
}

function prefixed(
  header: string[],
  prefix: string,
  path: string,
): string[] {
  const labels = header.filter((h) => h.startsWith(prefix)).map((h) => h.slice(prefix.length));
  if (labels.length === 0) {
    throw new Error(`${path}: no ${prefix}* columns found`);
  }
  return labels;
}

export function loadBundle(dir: string): SweepBundle {
  const bpPath = join(dir, "breakpoints.csv");
  const segPath = join(dir, "segments.csv");
  const samplePath = join(dir, "samples.csv");

  const breakpoints = rows(bpPath).map((row) => ({
    index: Number(need(row, "index", bpPath)),
    c: parseFrac(need(row, "c", bpPath)),
  }));
  if (breakpoints.length === 0) throw new Error(`${bpPath}: no breakpoints`);

  const segRows = rows(segPath);
  if (segRows.length === 0) throw new Error(`${segPath}: no segments`);
  const segHeader = Object.keys(segRows[0]);
  const p1Actions = prefixed(segHeader, "p1_", segPath);
  const p2Actions = prefixed(segHeader, "p2_base_", segPath);
  const segments: Segment[] = segRows.map((row) => {
    const grab = (prefix: string, labels: string[]) => {
      const out = new Map<string, Frac>();
      for (const label of labels) {
        out.set(label, parseFrac(need(row, `${prefix}${label}`, segPath)));
      }
      return out;
    };
    return {
      id: need(row, "segment_id", segPath),
      cLo: parseFrac(need(row, "c_lo", segPath)),
      cHi: parseFrac(need(row, "c_hi", segPath)),
      supportP1: need(row, "support_p1", segPath).split("|"),
      supportP2: need(row, "support_p2", segPath).split("|"),
      p1: grab("p1_", p1Actions),
      p2Base: grab("p2_base_", p2Actions),
      p2Slope: grab("p2_slope_", p2Actions),
    };
  });

  const sampleRows = rows(samplePath);
  if (sampleRows.length === 0) throw new Error(`${samplePath}: no sample rows`);
  const sampleHeader = Object.keys(sampleRows[0]);
  const samplesP1 = prefixed(sampleHeader, "pi1_", samplePath);
  const samplesP2 = prefixed(sampleHeader, "pi2_", samplePath);
  const samples: SampleRow[] = sampleRows.map((row) => {
    const floats = (prefix: string, labels: string[]) => {
      const out = new Map<string, number>();
      for (const label of labels) {
        const v = Number(need(row, `${prefix}${label}`, samplePath));
        if (!Number.isFinite(v)) throw new Error(`${samplePath}: non-numeric ${prefix}${label}`);
        out.set(label, v);
      }
      return out;
    };
    return {
      segmentId: need(row, "segment_id", samplePath),
      c: Number(need(row, "c", samplePath)),
      pi1: floats("pi1_", samplesP1),
      pi2: floats("pi2_", samplesP2),
      u1: Number(need(row, "u1", samplePath)),
      u2: Number(need(row, "u2", samplePath)),
    };
  });

  const segmentIds = new Set(segments.map((s) => s.id));
  for (const sample of samples) {
    if (!segmentIds.has(sample.segmentId)) {
      throw new Error(`${samplePath}: sample references unknown segment ${sample.segmentId}`);
    }
  }

  return { breakpoints, segments, samples, p1Actions, p2Actions };
}
