/** Marker shapes and colors per series.
 *
 * The gap series carry fixed styles: Omega=15 inverted
 * purple triangles, Omega=10 red triangles, Omega=5 green rhombi,
 * Omega=2 orange squares, Omega=0.5 blue circles. Any other series label
 * cycles through a distinguishable fallback palette.
 */

export type MarkerShape = "circle" | "square" | "diamond" | "triangle-up" | "triangle-down";

export interface MarkerStyle {
  shape: MarkerShape;
  color: string;
}

const GAP_STYLES: Record<string, MarkerStyle> = {
  "Omega=15": { shape: "triangle-down", color: "#7b2d8b" },
  "Omega=10": { shape: "triangle-up", color: "#d62728" },
  "Omega=5": { shape: "diamond", color: "#2ca02c" },
  "Omega=2": { shape: "square", color: "#ff7f0e" },
  "Omega=0.5": { shape: "circle", color: "#1f77b4" },
};

const FALLBACK: MarkerStyle[] = [
  { shape: "circle", color: "#1f77b4" },
  { shape: "square", color: "#d62728" },
  { shape: "diamond", color: "#2ca02c" },
  { shape: "triangle-up", color: "#ff7f0e" },
  { shape: "triangle-down", color: "#7b2d8b" },
];

export function markerFor(label: string, seriesIndex: number): MarkerStyle {
  return GAP_STYLES[label] ?? FALLBACK[seriesIndex % FALLBACK.length];
}

/** SVG path fragment for one marker centred at (cx, cy). */
export function markerSvg(style: MarkerStyle, cx: number, cy: number, r: number): string {
  const c = style.color;
  const p = (v: number) => v.toFixed(2);
  switch (style.shape) {
    case "circle":
      return `<circle cx="${p(cx)}" cy="${p(cy)}" r="${p(r)}" fill="${c}"/>`;
    case "square":
      return `<rect x="${p(cx - r)}" y="${p(cy - r)}" width="${p(2 * r)}" height="${p(2 * r)}" fill="${c}"/>`;
    case "diamond":
      return `<path d="M${p(cx)} ${p(cy - 1.3 * r)}L${p(cx + r)} ${p(cy)}L${p(cx)} ${p(cy + 1.3 * r)}L${p(cx - r)} ${p(cy)}Z" fill="${c}"/>`;
    case "triangle-up":
      return `<path d="M${p(cx)} ${p(cy - 1.2 * r)}L${p(cx + 1.1 * r)} ${p(cy + r)}L${p(cx - 1.1 * r)} ${p(cy + r)}Z" fill="${c}"/>`;
    case "triangle-down":
      return `<path d="M${p(cx)} ${p(cy + 1.2 * r)}L${p(cx + 1.1 * r)} ${p(cy - r)}L${p(cx - 1.1 * r)} ${p(cy - r)}Z" fill="${c}"/>`;
  }
}
