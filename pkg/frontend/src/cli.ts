/**
 * plotview trajectory|welfare <sweep-dir> [-o out.svg]
 *
 * Reads breakpoints.csv, segments.csv and samples.csv from the sweep
 * directory and writes a deterministic SVG figure.  Exit codes follow the
 * solver CLI: 1 for usage problems, 2 for schema violations.
 */

import { writeFileSync } from "node:fs";

import { loadBundle } from "./sweepData.js";
import { renderTrajectory, renderWelfare } from "./render.js";

export function run(argv: string[]): number {
  const args = [...argv];
  let out = "fig.svg";
  const outIdx = args.findIndex((a) => a === "-o" || a === "--output");
  if (outIdx >= 0) {
    if (outIdx + 1 >= args.length) {
      console.error('level=error code=usage msg="-o needs a path"');
      return 1;
    }
    out = args[outIdx + 1];
    args.splice(outIdx, 2);
  }
  const [kind, dir] = args;
  if (!dir || (kind !== "trajectory" && kind !== "welfare")) {
    console.error('level=error code=usage msg="usage: plotview trajectory|welfare <dir> [-o fig.svg]"');
    return 1;
  }
  if (!out.endsWith(".svg")) {
    console.error(`level=warn code=format msg="output is SVG markup regardless of extension: ${out}"`);
  }
  let svg: string;
  try {
    const bundle = loadBundle(dir);
    svg = kind === "trajectory" ? renderTrajectory(bundle) : renderWelfare(bundle);
  } catch (err) {
    console.error(`level=error code=schema msg="${(err as Error).message}"`);
    return 2;
  }
  writeFileSync(out, svg + "\n");
  console.error(`level=info code=written msg="${out}"`);
  return 0;
}

if (import.meta.url === `file://${process.argv[1]}`) {
  process.exit(run(process.argv.slice(2)));
}
