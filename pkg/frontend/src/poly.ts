/**
 * Jones polynomial wire format and display rendering.
 *
 * The service ships polynomials as exact decimal-string coefficients in
 * ascending exponent order. Rendering keeps that order and never parses
 * coefficients into floats: big values pass through verbatim.
 */

export interface PolyTerm {
  exp: number;
  coef: string;
}

export interface PolyWire {
  variable: string;
  terms: PolyTerm[];
}

const SUPERSCRIPTS: Record<string, string> = {
  "0": "⁰",
  "1": "¹",
  "2": "²",
  "3": "³",
  "4": "⁴",
  "5": "⁵",
  "6": "⁶",
  "7": "⁷",
  "8": "⁸",
  "9": "⁹",
  "-": "⁻",
};

export function superscript(n: number): string {
  return String(n)
    .split("")
    .map((ch) => SUPERSCRIPTS[ch] ?? ch)
    .join("");
}

function monomial(variable: string, exp: number): string {
  if (exp === 0) return "";
  if (exp === 1) return variable;
  return variable + superscript(exp);
}

/** "1" for the unknot, "t + t3 - t4" style (unicode superscripts) otherwise. */
export function polyToString(poly: PolyWire): string {
  if (poly.terms.length === 0) return "0";
  const parts: string[] = [];
  for (const term of poly.terms) {
    const negative = term.coef.startsWith("-");
    const magnitude = negative ? term.coef.slice(1) : term.coef;
    const mono = monomial(poly.variable, term.exp);
    let body: string;
    if (mono === "") {
      body = magnitude;
    } else if (magnitude === "1") {
      body = mono;
    } else {
      body = `${magnitude}${mono}`;
    }
    if (parts.length === 0) {
      parts.push(negative ? `-${body}` : body);
    } else {
      parts.push(`${negative ? "-" : "+"} ${body}`);
    }
  }
  return parts.join(" ");
}

export function termCount(poly: PolyWire): number {
  return poly.terms.length;
}

export function polyEquals(a: PolyWire, b: PolyWire): boolean {
  if (a.variable !== b.variable || a.terms.length !== b.terms.length) {
    return false;
  }
  return a.terms.every(
    (t, i) => t.exp === b.terms[i]?.exp && t.coef === b.terms[i]?.coef,
  );
}

/**
 * L1 distance between coefficient maps over the union of exponents,
 * matching the service's closeness metric. Exact: coefficients are
 * decimal strings and the arithmetic runs in BigInt.
 */
export function polyDistance(a: PolyWire, b: PolyWire): bigint {
  const diff = new Map<number, bigint>();
  for (const t of a.terms) {
    diff.set(t.exp, (diff.get(t.exp) ?? 0n) + BigInt(t.coef));
  }
  for (const t of b.terms) {
    diff.set(t.exp, (diff.get(t.exp) ?? 0n) - BigInt(t.coef));
  }
  let total = 0n;
  for (const v of diff.values()) {
    total += v < 0n ? -v : v;
  }
  return total;
}
