/** Parsing and validation of the figure-preset CSV schema (x, series_label, y). */

export interface SeriesData {
  label: string;
  x: number[];
  y: number[];
}

export class SchemaError extends Error {}

const HEADER = "x,series_label,y";

/**
 * Parse a preset CSV into per-series arrays, preserving the order in which
 * series first appear. Rows with a non-finite y (the generator writes "nan"
 * for unresolved cells) are dropped from the drawable data.
 */
export function parsePresetCsv(text: string): SeriesData[] {
  const lines = text.split(/\r?\n/).filter((ln) => ln.trim().length > 0);
  if (lines.length === 0) {
    throw new SchemaError("empty CSV: no header row");
  }
  if (lines[0].trim() !== HEADER) {
    throw new SchemaError(`bad header ${JSON.stringify(lines[0])}; expected "${HEADER}"`);
  }
  if (lines.length === 1) {
    throw new SchemaError("empty CSV: header but no data rows");
  }
  const bySeries = new Map<string, SeriesData>();
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(",");
    if (parts.length !== 3) {
      throw new SchemaError(`row ${i + 1}: expected 3 fields, got ${parts.length}`);
    }
    const x = Number(parts[0]);
    const label = parts[1];
    const y = Number(parts[2]);
    if (!Number.isFinite(x) || label.length === 0) {
      throw new SchemaError(`row ${i + 1}: bad x or empty series label`);
    }
    let series = bySeries.get(label);
    if (!series) {
      series = { label, x: [], y: [] };
      bySeries.set(label, series);
    }
    if (Number.isFinite(y)) {
      series.x.push(x);
      series.y.push(y);
    }
  }
  const out = [...bySeries.values()];
  if (out.every((s) => s.x.length === 0)) {
    throw new SchemaError("no finite data points in any series");
  }
  return out;
}
