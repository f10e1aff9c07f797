/** Linear and signed-log ("symlog") axis scales with tick generation. */

export interface Scale {
  toPixel(value: number): number;
  ticks(): Array<{ value: number; label: string }>;
}

export function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  if (!Number.isFinite(lo) || !Number.isFinite(hi)) {
    throw new Error("cannot compute extent of empty data");
  }
  if (lo === hi) {
    const pad = Math.abs(lo) > 0 ? Math.abs(lo) * 0.5 : 1;
    return [lo - pad, hi + pad];
  }
  return [lo, hi];
}

function formatTick(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 0.01 && a < 10000) {
    return String(Number(v.toPrecision(4)));
  }
  return v.toExponential(0).replace("e+", "e");
}

/** Plain linear scale with ~6 round-valued ticks. */
export function linearScale(domain: [number, number], range: [number, number]): Scale {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const slope = (r1 - r0) / (d1 - d0);
  return {
    toPixel: (v) => r0 + (v - d0) * slope,
    ticks: () => {
      const span = d1 - d0;
      const step = Math.pow(10, Math.floor(Math.log10(span / 5)));
      const mult = span / 5 / step;
      const nice = mult >= 5 ? 5 * step : mult >= 2 ? 2 * step : step;
      const out: Array<{ value: number; label: string }> = [];
      for (let v = Math.ceil(d0 / nice) * nice; v <= d1 + 1e-12 * span; v += nice) {
        const clean = Math.abs(v) < 1e-12 * span ? 0 : v;
        out.push({ value: clean, label: formatTick(clean) });
      }
      return out;
    },
  };
}

/**
 * Signed-log scale for data spanning many orders of magnitude in both
 * signs (the dF/dT_KMS panels). Values inside [-linthresh, linthresh]
 * map linearly; outside, logarithmically. Ticks at signed decades.
 */
export function symlogScale(
  domain: [number, number],
  range: [number, number],
  linthresh: number,
): Scale {
  const tr = (v: number): number => {
    const a = Math.abs(v);
    if (a <= linthresh) return v / linthresh;
    return Math.sign(v) * (1 + Math.log10(a / linthresh));
  };
  const t0 = tr(domain[0]);
  const t1 = tr(domain[1]);
  const inner = linearScale([t0, t1], range);
  return {
    toPixel: (v) => inner.toPixel(tr(v)),
    ticks: () => {
      const out: Array<{ value: number; label: string }> = [];
      const hiDec = Math.ceil(Math.log10(Math.max(Math.abs(domain[0]), Math.abs(domain[1]), linthresh)));
      const loDec = Math.floor(Math.log10(linthresh));
      const stride = Math.max(1, Math.ceil((hiDec - loDec) / 4));
      if (domain[0] < 0) {
        for (let d = hiDec; d >= loDec; d -= stride) {
          const v = -Math.pow(10, d);
          if (v >= domain[0] && v <= domain[1]) out.push({ value: v, label: `-1e${d}` });
        }
      }
      if (domain[0] <= 0 && domain[1] >= 0) out.push({ value: 0, label: "0" });
      for (let d = loDec; d <= hiDec; d += stride) {
        const v = Math.pow(10, d);
        if (v >= domain[0] && v <= domain[1]) out.push({ value: v, label: `1e${d}` });
      }
      return out;
    },
  };
}
