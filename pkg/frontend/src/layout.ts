/**
 * Diagram layout: PD text to a combinatorial map to screen positions.
 *
 * The map mirrors the service's conventions exactly: a crossing
 * X[a,b,c,d] has counterclockwise slots (a, d, b, c), darts are
 * crossing*4+slot, alpha twins darts sharing an arc, and a face orbit
 * steps twin-then-rotate. The face count must come out to n + 2 for a
 * planar diagram; the renderer treats that as a hard invariant. The
 * force-directed relaxation on top is pure aesthetics and fully
 * deterministic (no randomness) so tests can pin outputs.
 */

export interface KnotMap {
  n: number;
  quads: number[][];
  /** CCW arc ids per crossing; slot 0 is the incoming under-strand. */
  slots: number[][];
  /** Twin dart for each of the 4n darts. */
  alpha: number[];
  /** Face orbits as dart lists. */
  faces: number[][];
}

export function parsePdText(text: string): number[][] {
  const trimmed = text.trim();
  if (trimmed === "") return [];
  const quads: number[][] = [];
  const pattern = /X\[(\d+),(\d+),(\d+),(\d+)\]/g;
  for (const match of trimmed.matchAll(pattern)) {
    quads.push([
      Number(match[1]),
      Number(match[2]),
      Number(match[3]),
      Number(match[4]),
    ]);
  }
  const residue = trimmed.replace(pattern, "").trim();
  if (quads.length === 0 || residue !== "") {
    throw new Error(`unrecognized PD text: ${JSON.stringify(text)}`);
  }
  return quads;
}

export function buildMap(quads: number[][]): KnotMap {
  const n = quads.length;
  const slots: number[][] = quads.map((q) => {
    if (q.length !== 4) {
      throw new Error(`crossing needs 4 arcs, got ${q.length}`);
    }
    const [a, b, c, d] = q as [number, number, number, number];
    return [a, d, b, c];
  });
  const byArc = new Map<number, number[]>();
  slots.forEach((rot, c) => {
    rot.forEach((arc, s) => {
      const darts = byArc.get(arc) ?? [];
      darts.push(c * 4 + s);
      byArc.set(arc, darts);
    });
  });
  const alpha = new Array<number>(4 * n).fill(-1);
  for (const [arc, darts] of byArc) {
    if (darts.length !== 2) {
      throw new Error(`arc ${arc} appears ${darts.length} times, expected 2`);
    }
    const [d1, d2] = darts as [number, number];
    alpha[d1] = d2;
    alpha[d2] = d1;
  }
  const seen = new Array<boolean>(4 * n).fill(false);
  const faces: number[][] = [];
  for (let start = 0; start < 4 * n; start++) {
    if (seen[start]) continue;
    const orbit: number[] = [];
    let d = start;
    while (!seen[d]) {
      seen[d] = true;
      orbit.push(d);
      const twin = alpha[d];
      if (twin === undefined || twin < 0) {
        throw new Error("dangling dart");
      }
      d = (twin & ~3) | ((twin + 1) & 3);
    }
    faces.push(orbit);
  }
  return { n, quads, slots, alpha, faces };
}

export function mapFromPdText(text: string): KnotMap {
  return buildMap(parsePdText(text));
}

export interface Point {
  x: number;
  y: number;
}

export interface ArcPath {
  arc: number;
  from: Point;
  to: Point;
  /** Control point for a quadratic curve through the middle. */
  via: Point;
  selfLoop: boolean;
}

export interface DiagramLayout {
  /** True for the crossingless unknot: render a plain circle. */
  trivialCircle: boolean;
  crossings: Point[];
  arcs: ArcPath[];
  /** Slot indices whose strand is drawn continuous (the over pair). */
  overSlots: [number, number];
  width: number;
  height: number;
}

export function slotAnchor(center: Point, slot: number, radius: number): Point {
  // Slots fan out CCW; screen y grows downward, hence the sign flip.
  const angle = (Math.PI / 2) * slot + Math.PI / 4;
  return {
    x: center.x + radius * Math.cos(angle),
    y: center.y - radius * Math.sin(angle),
  };
}

export function layoutDiagram(
  map: KnotMap,
  width = 320,
  height = 320,
): DiagramLayout {
  if (map.n === 0) {
    return {
      trivialCircle: true,
      crossings: [],
      arcs: [],
      overSlots: [1, 3],
      width,
      height,
    };
  }
  if (map.faces.length !== map.n + 2) {
    throw new Error(
      `refusing to draw a non-planar map: ${map.faces.length} faces for n=${map.n}`,
    );
  }
  const cx = width / 2;
  const cy = height / 2;
  const ring = Math.min(width, height) * 0.33;
  const pos: Point[] = map.slots.map((_, i) => ({
    x: cx + ring * Math.cos((2 * Math.PI * i) / map.n),
    y: cy + ring * Math.sin((2 * Math.PI * i) / map.n),
  }));

  const springs: Array<[number, number]> = [];
  const pairedDarts: Array<[number, number]> = [];
  const reported = new Set<number>();
  map.alpha.forEach((twin, dart) => {
    if (twin <= dart) return;
    pairedDarts.push([dart, twin]);
    const c1 = dart >> 2;
    const c2 = twin >> 2;
    if (c1 !== c2 && !reported.has(c1 * map.n + c2)) {
      springs.push([c1, c2]);
      reported.add(c1 * map.n + c2);
    }
  });

  const rest = ring * 0.9;
  for (let iter = 0; iter < 200; iter++) {
    const fx = new Array<number>(map.n).fill(0);
    const fy = new Array<number>(map.n).fill(0);
    for (let i = 0; i < map.n; i++) {
      for (let j = i + 1; j < map.n; j++) {
        const a = pos[i] as Point;
        const b = pos[j] as Point;
        const dx = a.x - b.x;
        const dy = a.y - b.y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const push = (rest * rest) / d2;
        const d = Math.sqrt(d2);
        fx[i] = (fx[i] as number) + (dx / d) * push;
        fy[i] = (fy[i] as number) + (dy / d) * push;
        fx[j] = (fx[j] as number) - (dx / d) * push;
        fy[j] = (fy[j] as number) - (dy / d) * push;
      }
    }
    for (const [i, j] of springs) {
      const a = pos[i] as Point;
      const b = pos[j] as Point;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = (d - rest) * 0.08;
      fx[i] = (fx[i] as number) + (dx / d) * pull;
      fy[i] = (fy[i] as number) + (dy / d) * pull;
      fx[j] = (fx[j] as number) - (dx / d) * pull;
      fy[j] = (fy[j] as number) - (dy / d) * pull;
    }
    const step = 0.85 * (1 - iter / 220);
    for (let i = 0; i < map.n; i++) {
      const p = pos[i] as Point;
      p.x += Math.max(-6, Math.min(6, (fx[i] as number) * step));
      p.y += Math.max(-6, Math.min(6, (fy[i] as number) * step));
      p.x = Math.max(16, Math.min(width - 16, p.x));
      p.y = Math.max(16, Math.min(height - 16, p.y));
    }
  }

  const anchorR = 11;
  const arcs: ArcPath[] = pairedDarts.map(([d1, d2]) => {
    const c1 = d1 >> 2;
    const c2 = d2 >> 2;
    const from = slotAnchor(pos[c1] as Point, d1 & 3, anchorR);
    const to = slotAnchor(pos[c2] as Point, d2 & 3, anchorR);
    const selfLoop = c1 === c2;
    const mid = { x: (from.x + to.x) / 2, y: (from.y + to.y) / 2 };
    let via = mid;
    if (selfLoop) {
      const center = pos[c1] as Point;
      via = {
        x: center.x + (mid.x - center.x) * 3.2,
        y: center.y + (mid.y - center.y) * 3.2,
      };
    }
    const arcId = map.slots[c1]?.[d1 & 3];
    return { arc: arcId ?? -1, from, to, via, selfLoop };
  });

  return {
    trivialCircle: false,
    crossings: pos,
    arcs,
    overSlots: [1, 3],
    width,
    height,
  };
}
