import { mkdtempSync, readFileSync, statSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";
import { parsePresetCsv } from "../src/csv.js";
import { renderFile } from "../src/render.js";
import { panelSpec, renderSvg } from "../src/svg.js";

const FIXTURE = join(__dirname, "fixtures", "fig1-top-sample.csv");

function tmp(): string {
  return mkdtempSync(join(tmpdir(), "unruh-render-"));
}

describe("panelSpec", () => {
  it("labels the derivative panels", () => {
    const spec = panelSpec("fig1-top");
    expect(spec.xLabel).toBe("T_KMS");
    expect(spec.yLabel).toBe("dF/dT_KMS");
  });
  it("labels the EDR panels", () => {
    expect(panelSpec("fig2a").yLabel).toBe("T_EDR");
    expect(panelSpec("fig2c").yLabel).toBe("Omega/T_EDR");
  });
  it("rejects unknown names", () => {
    expect(() => panelSpec("fig9")).toThrow(/unknown figure name/);
  });
});

describe("renderSvg", () => {
  it("renders all five gap series with distinct markers", () => {
    const series = parsePresetCsv(readFileSync(FIXTURE, "utf8"));
    expect(series).toHaveLength(5);
    const svg = renderSvg(series, panelSpec("fig1-top"));
    expect(svg).toContain("<svg");
    expect(svg).toContain("Omega=15");
    expect(svg).toContain("#7b2d8b"); // inverted purple triangles
    expect(svg).toContain("#1f77b4"); // blue circles
    expect(svg).toContain("dF/dT_KMS");
  });

  it("is deterministic", () => {
    const series = parsePresetCsv(readFileSync(FIXTURE, "utf8"));
    const a = renderSvg(series, panelSpec("fig1-top"));
    const b = renderSvg(series, panelSpec("fig1-top"));
    expect(a).toBe(b);
  });
});

describe("renderFile", () => {
  it("writes a nonzero SVG file", () => {
    const out = join(tmp(), "fig.svg");
    renderFile(FIXTURE, "fig1-top", out);
    expect(statSync(out).size).toBeGreaterThan(1000);
    expect(readFileSync(out, "utf8").startsWith("<svg")).toBe(true);
  });

  it("identical bytes on rerun", () => {
    const dir = tmp();
    const a = join(dir, "a.svg");
    const b = join(dir, "b.svg");
    renderFile(FIXTURE, "fig1-top", a);
    renderFile(FIXTURE, "fig1-top", b);
    expect(readFileSync(a)).toEqual(readFileSync(b));
  });

  it("errors on an empty CSV", () => {
    const dir = tmp();
    const empty = join(dir, "empty.csv");
    writeFileSync(empty, "");
    expect(() => renderFile(empty, "fig1-top", join(dir, "x.svg"))).toThrow(/empty CSV/);
  });
});
