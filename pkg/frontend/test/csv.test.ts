import { describe, expect, it } from "vitest";
import { SchemaError, parsePresetCsv } from "../src/csv.js";

const GOOD = [
  "x,series_label,y",
  "0.5,Omega=0.5,0.01",
  "1,Omega=0.5,-0.02",
  "0.5,Omega=2,nan",
  "1,Omega=2,0.5",
].join("\n");

describe("parsePresetCsv", () => {
  it("groups rows by series in first-appearance order", () => {
    const series = parsePresetCsv(GOOD);
    expect(series.map((s) => s.label)).toEqual(["Omega=0.5", "Omega=2"]);
    expect(series[0].x).toEqual([0.5, 1]);
    expect(series[0].y).toEqual([0.01, -0.02]);
  });

  it("drops non-finite y values", () => {
    const series = parsePresetCsv(GOOD);
    expect(series[1].x).toEqual([1]);
    expect(series[1].y).toEqual([0.5]);
  });

  it("rejects empty input", () => {
    expect(() => parsePresetCsv("")).toThrow(SchemaError);
  });

  it("rejects header-only input", () => {
    expect(() => parsePresetCsv("x,series_label,y\n")).toThrow(/no data rows/);
  });

  it("rejects a wrong header", () => {
    expect(() => parsePresetCsv("a,b,c\n1,s,2")).toThrow(/bad header/);
  });

  it("rejects malformed rows", () => {
    expect(() => parsePresetCsv("x,series_label,y\n1,2")).toThrow(/3 fields/);
    expect(() => parsePresetCsv("x,series_label,y\nfoo,s,1")).toThrow(/bad x/);
  });

  it("rejects all-nan data", () => {
    expect(() => parsePresetCsv("x,series_label,y\n1,s,nan")).toThrow(/no finite data/);
  });
});
