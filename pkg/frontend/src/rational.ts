// Exact rational helpers for the snapping grid.  The UI never does float
// arithmetic on charge values: canvas coordinates are snapped straight onto
// the k/denominator lattice and shipped as "p/q" strings.

export interface Rational {
  num: bigint;
  den: bigint; // > 0, reduced
}

function gcd(a: bigint, b: bigint): bigint {
  a = a < 0n ? -a : a;
  b = b < 0n ? -b : b;
  while (b) {
    [a, b] = [b, a % b];
  }
  return a;
}

export function rational(num: bigint, den: bigint): Rational {
  if (den === 0n) throw new Error("zero denominator");
  if (den < 0n) {
    num = -num;
    den = -den;
  }
  const g = gcd(num, den) || 1n;
  return { num: num / g, den: den / g };
}

export function parseRational(text: string): Rational {
  const m = /^([+-]?\d+)(?:\/(\d+))?$/.exec(text.trim());
  if (!m || m[1] === undefined) throw new Error(`not a rational: ${text}`);
  return rational(BigInt(m[1]), m[2] ? BigInt(m[2]) : 1n);
}

export function formatRational(r: Rational): string {
  return r.den === 1n ? r.num.toString() : `${r.num}/${r.den}`;
}

export function toNumber(r: Rational): number {
  return Number(r.num) / Number(r.den);
}

/** Nearest lattice point k/denominator to a float coordinate. */
export function snap(value: number, denominator: number): Rational {
  const k = Math.round(value * denominator);
  return rational(BigInt(k), BigInt(denominator));
}

export function equalRational(a: Rational, b: Rational): boolean {
  return a.num === b.num && a.den === b.den;
}
