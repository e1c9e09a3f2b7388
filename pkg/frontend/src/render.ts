/**
 * Deterministic SVG rendering of sweep bundles.
 *
 * Trajectory figures draw strategy weights against the simulation cost:
 * one two-point polyline per action per segment, taken straight from the
 * exact affine coefficients in segments.csv (no resampling), plus dashed
 * vertical markers at the breakpoints.  Welfare figures draw the sampled
 * utilities per segment.  Every polyline carries data attributes with
 * the exact endpoint fractions so the figure can be audited numerically.
 */

import { SweepBundle, Segment } from "./sweepData.js";
import { Frac, add, formatFrac, fracToNumber, mul } from "./rational.js";

const WIDTH = 860;
const HEIGHT = 520;
const MARGIN = { left: 64, right: 170, top: 28, bottom: 48 };
const PLOT_W = WIDTH - MARGIN.left - MARGIN.right;
const PLOT_H = HEIGHT - MARGIN.top - MARGIN.bottom;

const PALETTE = [
  "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
  "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f",
];

interface Scale {
  x0: number;
  x1: number;
  y0: number;
  y1: number;
}

function px(scale: Scale, x: number): number {
  return MARGIN.left + ((x - scale.x0) / (scale.x1 - scale.x0)) * PLOT_W;
}

function py(scale: Scale, y: number): number {
  return MARGIN.top + (1 - (y - scale.y0) / (scale.y1 - scale.y0)) * PLOT_H;
}

function fmt(v: number): string {
  return v.toFixed(3);
}

function svgOpen(scale: Scale, kind: string): string[] {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" ` +
      `viewBox="0 0 ${WIDTH} ${HEIGHT}" data-kind="${kind}" ` +
      `data-x0="${scale.x0}" data-x1="${scale.x1}" data-y0="${scale.y0}" data-y1="${scale.y1}" ` +
      `data-ml="${MARGIN.left}" data-mt="${MARGIN.top}" data-pw="${PLOT_W}" data-ph="${PLOT_H}">`,
    `<rect width="${WIDTH}" height="${HEIGHT}" fill="#ffffff"/>`,
  ];
}

function axes(scale: Scale, xLabel: string, yLabel: string): string[] {
  const out: string[] = [];
  out.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${PLOT_W}" height="${PLOT_H}" ` +
      `fill="none" stroke="#444444" stroke-width="1"/>`,
  );
  const ticks = 5;
  for (let k = 0; k <= ticks; k++) {
    const xv = scale.x0 + ((scale.x1 - scale.x0) * k) / ticks;
    const yv = scale.y0 + ((scale.y1 - scale.y0) * k) / ticks;
    out.push(
      `<text x="${fmt(px(scale, xv))}" y="${HEIGHT - MARGIN.bottom + 18}" ` +
        `font-size="11" text-anchor="middle" fill="#333333">${xv.toFixed(2)}</text>`,
      `<text x="${MARGIN.left - 8}" y="${fmt(py(scale, yv) + 4)}" ` +
        `font-size="11" text-anchor="end" fill="#333333">${yv.toFixed(2)}</text>`,
    );
  }
  out.push(
    `<text x="${MARGIN.left + PLOT_W / 2}" y="${HEIGHT - 10}" font-size="13" ` +
      `text-anchor="middle" fill="#111111">${xLabel}</text>`,
    `<text x="16" y="${MARGIN.top + PLOT_H / 2}" font-size="13" text-anchor="middle" ` +
      `fill="#111111" transform="rotate(-90 16 ${MARGIN.top + PLOT_H / 2})">${yLabel}</text>`,
  );
  return out;
}

function breakpointMarkers(bundle: SweepBundle, scale: Scale): string[] {
  return bundle.breakpoints.map((bp) => {
    const x = fmt(px(scale, fracToNumber(bp.c)));
    return (
      `<line class="breakpoint" data-c="${formatFrac(bp.c)}" x1="${x}" x2="${x}" ` +
      `y1="${MARGIN.top}" y2="${MARGIN.top + PLOT_H}" stroke="#999999" ` +
      `stroke-width="1" stroke-dasharray="5,4"/>`
    );
  });
}

function endpointValue(seg: Segment, action: string, at: Frac): Frac {
  const base = seg.p2Base.get(action)!;
  const slope = seg.p2Slope.get(action)!;
  return add(base, mul(slope, at));
}

export function renderTrajectory(bundle: SweepBundle): string {
  const xMax = Math.max(...bundle.segments.map((s) => fracToNumber(s.cHi)));
  const scale: Scale = { x0: 0, x1: xMax, y0: 0, y1: 1 };
  const parts = svgOpen(scale, "trajectory");
  parts.push(...axes(scale, "simulation cost c", "strategy weight"));
  parts.push(...breakpointMarkers(bundle, scale));
  const colorOf = new Map<string, string>();
  [...bundle.p1Actions.map((a) => `1:${a}`), ...bundle.p2Actions.map((a) => `2:${a}`)].forEach(
    (key, i) => colorOf.set(key, PALETTE[i % PALETTE.length]),
  );
  for (const seg of bundle.segments) {
    const lo = fracToNumber(seg.cLo);
    const hi = fracToNumber(seg.cHi);
    for (const action of bundle.p1Actions) {
      const w = seg.p1.get(action)!;
      const wv = fracToNumber(w);
      const points = `${fmt(px(scale, lo))},${fmt(py(scale, wv))} ${fmt(px(scale, hi))},${fmt(py(scale, wv))}`;
      parts.push(
        `<polyline class="traj p1" data-segment="${seg.id}" data-player="1" ` +
          `data-action="${action}" data-exact-lo="${formatFrac(seg.cLo)}:${formatFrac(w)}" ` +
          `data-exact-hi="${formatFrac(seg.cHi)}:${formatFrac(w)}" points="${points}" ` +
          `fill="none" stroke="${colorOf.get(`1:${action}`)}" stroke-width="2"/>`,
      );
    }
    for (const action of bundle.p2Actions) {
      const vLo = endpointValue(seg, action, seg.cLo);
      const vHi = endpointValue(seg, action, seg.cHi);
      const points =
        `${fmt(px(scale, lo))},${fmt(py(scale, fracToNumber(vLo)))} ` +
        `${fmt(px(scale, hi))},${fmt(py(scale, fracToNumber(vHi)))}`;
      parts.push(
        `<polyline class="traj p2" data-segment="${seg.id}" data-player="2" ` +
          `data-action="${action}" data-exact-lo="${formatFrac(seg.cLo)}:${formatFrac(vLo)}" ` +
          `data-exact-hi="${formatFrac(seg.cHi)}:${formatFrac(vHi)}" points="${points}" ` +
          `fill="none" stroke="${colorOf.get(`2:${action}`)}" stroke-width="2" ` +
          `stroke-dasharray="7,3"/>`,
      );
    }
  }
  parts.push(...legend(colorOf));
  parts.push("</svg>");
  return parts.join("\n");
}

export function renderWelfare(bundle: SweepBundle): string {
  const values = bundle.samples.flatMap((s) => [s.u1, s.u2]);
  const lo = Math.min(...values);
  const hi = Math.max(...values);
  const pad = (hi - lo || 1) * 0.05;
  const xMax = Math.max(...bundle.samples.map((s) => s.c));
  const scale: Scale = { x0: 0, x1: xMax, y0: lo - pad, y1: hi + pad };
  const parts = svgOpen(scale, "welfare");
  parts.push(...axes(scale, "simulation cost c", "equilibrium utility"));
  parts.push(...breakpointMarkers(bundle, scale));
  const bySegment = new Map<string, { c: number; u1: number; u2: number }[]>();
  for (const s of bundle.samples) {
    const bucket = bySegment.get(s.segmentId) ?? [];
    bucket.push({ c: s.c, u1: s.u1, u2: s.u2 });
    bySegment.set(s.segmentId, bucket);
  }
  const segIds = [...bySegment.keys()].sort();
  for (const id of segIds) {
    const samples = bySegment.get(id)!.slice().sort((a, b) => a.c - b.c);
    for (const [player, pick, color] of [
      ["1", (s: { u1: number }) => s.u1, "#1f77b4"],
      ["2", (s: { u2: number }) => s.u2, "#d62728"],
    ] as const) {
      const points = samples
        .map((s) => `${fmt(px(scale, s.c))},${fmt(py(scale, pick(s as never)))}`)
        .join(" ");
      parts.push(
        `<polyline class="welfare u${player}" data-segment="${id}" data-player="${player}" ` +
          `points="${points}" fill="none" stroke="${color}" stroke-width="1.6"/>`,
      );
    }
  }
  parts.push(
    `<text x="${WIDTH - MARGIN.right + 12}" y="${MARGIN.top + 14}" font-size="12" fill="#1f77b4">u1 (simulator)</text>`,
    `<text x="${WIDTH - MARGIN.right + 12}" y="${MARGIN.top + 32}" font-size="12" fill="#d62728">u2 (simulated)</text>`,
  );
  parts.push("</svg>");
  return parts.join("\n");
}

function legend(colorOf: Map<string, string>): string[] {
  const out: string[] = [];
  let row = 0;
  for (const [key, color] of colorOf) {
    const [player, action] = key.split(":", 2);
    const y = MARGIN.top + 14 + row * 18;
    const x = WIDTH - MARGIN.right + 12;
    const dash = player === "2" ? ' stroke-dasharray="7,3"' : "";
    out.push(
      `<line x1="${x}" x2="${x + 22}" y1="${y - 4}" y2="${y - 4}" stroke="${color}" stroke-width="2"${dash}/>`,
      `<text x="${x + 28}" y="${y}" font-size="12" fill="#111111">P${player}: ${action}</text>`,
    );
    row += 1;
  }
  return out;
}
