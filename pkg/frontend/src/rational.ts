/** Exact "p/q" fractions as carried by the sweep CSVs. */

export interface Frac {
  num: bigint;
  den: bigint;
}

const PATTERN = /^(-?\d+)(?:\/(-?\d+))?$/;

export function parseFrac(text: string): Frac {
  const m = PATTERN.exec(text.trim());
  if (!m) throw new Error(`not a rational literal: ${JSON.stringify(text)}`);
  let num = BigInt(m[1]);
  let den = m[2] === undefined ? 1n : BigInt(m[2]);
  if (den === 0n) throw new Error(`zero denominator in ${JSON.stringify(text)}`);
  if (den < 0n) {
    num = -num;
    den = -den;
  }
  const g = gcd(num < 0n ? -num : num, den);
  return { num: num / g, den: den / g };
}

export function fracToNumber(f: Frac): number {
  return Number(f.num) / Number(f.den);
}

export function formatFrac(f: Frac): string {
  return `${f.num}/${f.den}`;
}

export function add(a: Frac, b: Frac): Frac {
  return normalize(a.num * b.den + b.num * a.den, a.den * b.den);
}

export function mul(a: Frac, b: Frac): Frac {
  return normalize(a.num * b.num, a.den * b.den);
}

export function eq(a: Frac, b: Frac): boolean {
  return a.num * b.den === b.num * a.den;
}

function normalize(num: bigint, den: bigint): Frac {
  if (den < 0n) {
    num = -num;
    den = -den;
  }
  const g = gcd(num < 0n ? -num : num, den);
  return { num: num / g, den: den / g };
}

function gcd(a: bigint, b: bigint): bigint {
  while (b !== 0n) {
    [a, b] = [b, a % b];
  }
  return a === 0n ? 1n : a;
}
