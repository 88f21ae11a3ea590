/** Parse the server's exact rational strings ("p/q" or decimal text).
 *
 * The client never computes geometry; rationals are converted to floats
 * for display and cross-checking only.
 */

export function parseRational(text: string): number {
  const slash = text.indexOf("/");
  if (slash >= 0) {
    const num = Number(text.slice(0, slash));
    const den = Number(text.slice(slash + 1));
    if (!Number.isFinite(num) || !Number.isFinite(den) || den === 0) {
      throw new Error(`bad rational: ${text}`);
    }
    return num / den;
  }
  const value = Number(text);
  if (!Number.isFinite(value)) {
    throw new Error(`bad rational: ${text}`);
  }
  return value;
}

/** Format a float as an exact decimal string for request payloads.
 *
 * Click positions are snapped to a fine lattice before formatting, so the
 * decimal expansion is short and the server parses it losslessly.
 */
export function formatCoordinate(value: number, snap = 1 / 256): string {
  const snapped = Math.round(value / snap) * snap;
  return String(Number(snapped.toFixed(10)));
}
