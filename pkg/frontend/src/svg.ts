/** SVG assembly for one figure panel. */

import { SeriesData } from "./csv.js";
import { markerFor, markerSvg } from "./markers.js";
import { Scale, extent, linearScale, symlogScale } from "./scale.js";

export interface PanelSpec {
  xLabel: string;
  yLabel: string;
  yMode: "linear" | "symlog";
  title: string;
}

/** Axis labels and scale mode per preset name. */
export function panelSpec(figureName: string): PanelSpec {
  const derivative: PanelSpec = {
    xLabel: "T_KMS",
    yLabel: "dF/dT_KMS",
    yMode: "symlog",
    title: figureName,
  };
  switch (figureName) {
    case "fig1-top":
    case "fig1-bottom":
    case "fig3-top":
    case "fig3-bottom":
      return derivative;
    case "fig2a":
    case "fig2b":
      return { xLabel: "T_KMS", yLabel: "T_EDR", yMode: "linear", title: figureName };
    case "fig2c":
      return { xLabel: "Omega", yLabel: "Omega/T_EDR", yMode: "linear", title: figureName };
    case "fig2d":
      return { xLabel: "Omega", yLabel: "T_EDR", yMode: "linear", title: figureName };
    default:
      throw new Error(
        `unknown figure name ${JSON.stringify(figureName)}; expected fig1-top, ` +
        "fig1-bottom, fig2a, fig2b, fig2c, fig2d, fig3-top or fig3-bottom",
      );
  }
}

const W = 760;
const H = 520;
const MARGIN = { left: 90, right: 180, top: 46, bottom: 58 };

function esc(text: string): string {
  return text.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

export function renderSvg(series: SeriesData[], spec: PanelSpec): string {
  const xs = series.flatMap((s) => s.x);
  const ys = series.flatMap((s) => s.y);
  const xDomain = extent(xs);
  const yDomain = extent(ys);
  const xScale = linearScale(xDomain, [MARGIN.left, W - MARGIN.right]);
  let yScale: Scale;
  if (spec.yMode === "symlog") {
    const yAbsMax = Math.max(...ys.map(Math.abs), 1e-300);
    yScale = symlogScale(yDomain, [H - MARGIN.bottom, MARGIN.top], yAbsMax * 1e-8);
  } else {
    yScale = linearScale(yDomain, [H - MARGIN.bottom, MARGIN.top]);
  }

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" ` +
    `viewBox="0 0 ${W} ${H}" font-family="Helvetica, Arial, sans-serif">`,
  );
  parts.push(`<rect width="${W}" height="${H}" fill="white"/>`);
  parts.push(
    `<text x="${(MARGIN.left + W - MARGIN.right) / 2}" y="24" text-anchor="middle" ` +
    `font-size="16">${esc(spec.title)}</text>`,
  );

  // frame
  const x0 = MARGIN.left;
  const x1 = W - MARGIN.right;
  const y0 = H - MARGIN.bottom;
  const y1 = MARGIN.top;
  parts.push(
    `<rect x="${x0}" y="${y1}" width="${x1 - x0}" height="${y0 - y1}" ` +
    `fill="none" stroke="#333" stroke-width="1"/>`,
  );

  for (const t of xScale.ticks()) {
    const px = xScale.toPixel(t.value);
    parts.push(`<line x1="${px.toFixed(2)}" y1="${y0}" x2="${px.toFixed(2)}" y2="${y0 + 5}" stroke="#333"/>`);
    parts.push(
      `<text x="${px.toFixed(2)}" y="${y0 + 20}" text-anchor="middle" font-size="11">${esc(t.label)}</text>`,
    );
  }
  for (const t of yScale.ticks()) {
    const py = yScale.toPixel(t.value);
    parts.push(`<line x1="${x0 - 5}" y1="${py.toFixed(2)}" x2="${x0}" y2="${py.toFixed(2)}" stroke="#333"/>`);
    parts.push(
      `<text x="${x0 - 9}" y="${(py + 4).toFixed(2)}" text-anchor="end" font-size="11">${esc(t.label)}</text>`,
    );
  }
  // zero line for derivative panels
  if (yDomain[0] < 0 && yDomain[1] > 0) {
    const pz = yScale.toPixel(0);
    parts.push(
      `<line x1="${x0}" y1="${pz.toFixed(2)}" x2="${x1}" y2="${pz.toFixed(2)}" ` +
      `stroke="#999" stroke-width="0.7" stroke-dasharray="4 3"/>`,
    );
  }

  parts.push(
    `<text x="${(x0 + x1) / 2}" y="${H - 14}" text-anchor="middle" font-size="14">${esc(spec.xLabel)}</text>`,
  );
  parts.push(
    `<text x="20" y="${(y0 + y1) / 2}" text-anchor="middle" font-size="14" ` +
    `transform="rotate(-90 20 ${(y0 + y1) / 2})">${esc(spec.yLabel)}</text>`,
  );

  series.forEach((s, i) => {
    const style = markerFor(s.label, i);
    const pts = s.x.map((xv, j) => ({
      px: xScale.toPixel(xv),
      py: yScale.toPixel(s.y[j]),
    }));
    const path = pts.map((p, j) => `${j === 0 ? "M" : "L"}${p.px.toFixed(2)} ${p.py.toFixed(2)}`).join("");
    parts.push(`<path d="${path}" fill="none" stroke="${style.color}" stroke-width="1.1" opacity="0.75"/>`);
    const markerStride = Math.max(1, Math.floor(pts.length / 40));
    pts.forEach((p, j) => {
      if (j % markerStride === 0) {
        parts.push(markerSvg(style, p.px, p.py, 3.4));
      }
    });
    // legend entry
    const ly = MARGIN.top + 16 + i * 22;
    const lx = W - MARGIN.right + 18;
    parts.push(markerSvg(style, lx, ly - 4, 4));
    parts.push(`<text x="${lx + 12}" y="${ly}" font-size="12">${esc(s.label)}</text>`);
  });

  parts.push("</svg>");
  return parts.join("\n") + "\n";
}
