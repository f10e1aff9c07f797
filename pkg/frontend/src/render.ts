#!/usr/bin/env node
/** CLI: render <csv> <figure-name> <out.svg>
 *
 * Reads a figure-preset CSV produced by `unruh-lab figure`, renders the
 * panel, and writes an SVG image. Exits 1 with a diagnostic on schema
 * mismatch or empty input, 2 on usage errors.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { SchemaError, parsePresetCsv } from "./csv.js";
import { panelSpec, renderSvg } from "./svg.js";

export function renderFile(csvPath: string, figureName: string, outPath: string): void {
  const spec = panelSpec(figureName);
  const text = readFileSync(csvPath, "utf8");
  const series = parsePresetCsv(text);
  writeFileSync(outPath, renderSvg(series, spec));
}

function main(argv: string[]): number {
  if (argv.length !== 3) {
    console.error("usage: render <csv> <figure-name> <out.svg>");
    return 2;
  }
  const [csvPath, figureName, outPath] = argv;
  if (!outPath.endsWith(".svg")) {
    console.error(`output must be an .svg path, got ${outPath}`);
    return 2;
  }
  try {
    renderFile(csvPath, figureName, outPath);
  } catch (err) {
    if (err instanceof SchemaError) {
      console.error(`schema error in ${csvPath}: ${err.message}`);
    } else {
      console.error(String(err));
    }
    return 1;
  }
  return 0;
}

const invokedDirectly = process.argv[1]?.endsWith("render.js")
  || process.argv[1]?.endsWith("render.ts");
if (invokedDirectly) {
  process.exit(main(process.argv.slice(2)));
}
