/**
 * DOM-free view layer.
 *
 * The app renders to a plain VNode tree; tests assert on the tree
 * directly (no DOM emulation needed) and the browser entry point turns
 * it into real elements with mount(). No diffing: the page is small
 * enough to re-render wholesale on every state change.
 */

import type { GameStatus, MoveSites, MoveWire, Snapshot } from "./api.js";
import type { DiagramLayout, KnotMap, Point } from "./layout.js";
import { slotAnchor } from "./layout.js";
import type { PolyWire } from "./poly.js";
import { polyDistance, polyToString } from "./poly.js";

export type EventHandler = () => void;

export interface VNode {
  tag: string;
  attrs: Record<string, string>;
  children: Array<VNode | string>;
  events: Record<string, EventHandler>;
}

export function h(
  tag: string,
  attrs: Record<string, string> = {},
  children: Array<VNode | string> = [],
  events: Record<string, EventHandler> = {},
): VNode {
  return { tag, attrs, children, events };
}

/** Depth-first search for the first node matching a predicate. */
export function findNode(
  root: VNode,
  pred: (node: VNode) => boolean,
): VNode | undefined {
  if (pred(root)) return root;
  for (const child of root.children) {
    if (typeof child === "string") continue;
    const hit = findNode(child, pred);
    if (hit) return hit;
  }
  return undefined;
}

export function findByClass(root: VNode, cls: string): VNode | undefined {
  return findNode(root, (n) => (n.attrs["class"] ?? "").split(" ").includes(cls));
}

export function allNodes(root: VNode, pred: (node: VNode) => boolean): VNode[] {
  const out: VNode[] = [];
  const walk = (node: VNode) => {
    if (pred(node)) out.push(node);
    for (const child of node.children) {
      if (typeof child !== "string") walk(child);
    }
  };
  walk(root);
  return out;
}

export function textContent(node: VNode): string {
  return node.children
    .map((c) => (typeof c === "string" ? c : textContent(c)))
    .join("");
}

const BANNERS: Partial<Record<GameStatus, { cls: string; text: string }>> = {
  RoundWon: {
    cls: "banner banner-win",
    text: "Round won! The polynomials match; a fresh opponent is up.",
  },
  GameWon: { cls: "banner banner-win", text: "You won the game!" },
  GameLost: {
    cls: "banner banner-loss",
    text: "Game over: a round ran out of turns.",
  },
};

/** Outcome banner, or null while a round is still in progress. */
export function renderBanner(status: GameStatus): VNode | null {
  const spec = BANNERS[status];
  if (!spec) return null;
  return h("div", { class: spec.cls, role: "status" }, [spec.text]);
}

export function renderPolyPanel(label: string, poly: PolyWire): VNode {
  return h("section", { class: "poly-panel" }, [
    h("h3", {}, [label]),
    h("code", { class: "poly-text" }, [polyToString(poly)]),
  ]);
}

/** Side-by-side polynomials plus the closeness metric between them. */
export function renderComparison(player: PolyWire, target: PolyWire): VNode {
  const dist = polyDistance(player, target);
  return h("div", { class: "comparison" }, [
    renderPolyPanel("Your Jones polynomial", player),
    renderPolyPanel("Opponent target", target),
    h("p", { class: "closeness" }, [
      dist === 0n ? "Polynomials match!" : `Closeness: ${dist} away`,
    ]),
  ]);
}

export function renderScoreboard(snap: Snapshot): VNode {
  return h("dl", { class: "scoreboard" }, [
    h("dt", {}, ["Round"]),
    h("dd", { class: "round" }, [
      `${snap.round} of ${snap.config.totalRounds}`,
    ]),
    h("dt", {}, ["Turn"]),
    h("dd", { class: "turn" }, [
      `${snap.turnInRound} of ${snap.config.maxTurnsPerRound}`,
    ]),
    h("dt", {}, ["Score"]),
    h("dd", { class: "score" }, [String(snap.score)]),
  ]);
}

function fmt(v: number): string {
  return String(Math.round(v * 100) / 100);
}

interface OverlayTarget {
  move: MoveWire;
  at: Point;
}

function faceCentroid(map: KnotMap, layout: DiagramLayout, face: number): Point {
  const orbit = map.faces[face];
  if (!orbit || orbit.length === 0) {
    throw new Error(`no face ${face} in this diagram`);
  }
  let x = 0;
  let y = 0;
  for (const dart of orbit) {
    const center = layout.crossings[dart >> 2];
    if (!center) throw new Error(`dart ${dart} beyond layout`);
    const p = slotAnchor(center, dart & 3, 26);
    x += p.x;
    y += p.y;
  }
  return { x: x / orbit.length, y: y / orbit.length };
}

function arcMid(layout: DiagramLayout, arc: number): Point {
  const path = layout.arcs.find((a) => a.arc === arc);
  if (!path) throw new Error(`no arc ${arc} in this layout`);
  return path.via;
}

const SITE_ORDER = [
  "R1Add",
  "R1Remove",
  "R2Add",
  "R2Remove",
  "R3",
  "CrossingFlip",
] as const;

/** Screen position for each enumerated move's overlay marker. */
export function overlayTargets(
  map: KnotMap,
  layout: DiagramLayout,
  sites: MoveSites,
): OverlayTarget[] {
  if (layout.trivialCircle) {
    // No geometry to hang sites on: space them around the circle. The
    // game starts here (kinking the unknot is always the first move).
    const all = SITE_ORDER.flatMap((kind) => sites[kind]);
    const cx = layout.width / 2;
    const cy = layout.height / 2;
    const r = Math.min(layout.width, layout.height) * 0.3;
    return all.map((move, i) => {
      const angle = (2 * Math.PI * i) / Math.max(all.length, 1);
      return {
        move,
        at: { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) },
      };
    });
  }
  const out: OverlayTarget[] = [];
  const crossingAt = (c: number): Point => {
    const p = layout.crossings[c];
    if (!p) throw new Error(`no crossing ${c} in this layout`);
    return p;
  };
  const add = (move: MoveWire, at: Point) => out.push({ move, at });
  for (const move of sites.R1Add) {
    add(move, arcMid(layout, move.site["arc"] as number));
  }
  for (const move of sites.R1Remove) {
    add(move, crossingAt(move.site["crossing"] as number));
  }
  for (const move of sites.R2Add) {
    const a = arcMid(layout, move.site["arc1"] as number);
    const b = arcMid(layout, move.site["arc2"] as number);
    add(move, { x: (a.x + b.x) / 2, y: (a.y + b.y) / 2 });
  }
  for (const move of sites.R2Remove) {
    add(move, faceCentroid(map, layout, move.site["face"] as number));
  }
  for (const move of sites.R3) {
    add(move, faceCentroid(map, layout, move.site["face"] as number));
  }
  for (const move of sites.CrossingFlip) {
    add(move, crossingAt(move.site["crossing"] as number));
  }
  return out;
}

export interface DiagramOptions {
  sites?: MoveSites;
  onMove?: (move: MoveWire) => void;
}

/**
 * SVG scene for one diagram: arcs as quadratic paths, a small disk
 * punching the gap at each crossing, then the over-strand stub drawn
 * back on top so the over pair reads as continuous. Move overlays go
 * last so they stay clickable.
 */
export function renderDiagram(
  map: KnotMap,
  layout: DiagramLayout,
  opts: DiagramOptions = {},
): VNode {
  const children: Array<VNode | string> = [];
  if (layout.trivialCircle) {
    children.push(
      h("circle", {
        class: "strand trivial",
        cx: fmt(layout.width / 2),
        cy: fmt(layout.height / 2),
        r: fmt(Math.min(layout.width, layout.height) * 0.3),
        fill: "none",
      }),
    );
  } else {
    for (const arc of layout.arcs) {
      children.push(
        h("path", {
          class: "strand",
          "data-arc": String(arc.arc),
          d:
            `M ${fmt(arc.from.x)} ${fmt(arc.from.y)} ` +
            `Q ${fmt(arc.via.x)} ${fmt(arc.via.y)} ` +
            `${fmt(arc.to.x)} ${fmt(arc.to.y)}`,
          fill: "none",
        }),
      );
    }
    const [o1, o2] = layout.overSlots;
    layout.crossings.forEach((center, c) => {
      children.push(
        h("circle", {
          class: "crossing-gap",
          "data-crossing": String(c),
          cx: fmt(center.x),
          cy: fmt(center.y),
          r: "7",
        }),
      );
      const a = slotAnchor(center, o1, 11);
      const b = slotAnchor(center, o2, 11);
      children.push(
        h("line", {
          class: "strand over-stub",
          x1: fmt(a.x),
          y1: fmt(a.y),
          x2: fmt(b.x),
          y2: fmt(b.y),
        }),
      );
    });
  }
  if (opts.sites) {
    for (const { move, at } of overlayTargets(map, layout, opts.sites)) {
      const events: Record<string, EventHandler> = {};
      if (opts.onMove) {
        const cb = opts.onMove;
        events["click"] = () => cb(move);
      }
      children.push(
        h(
          "circle",
          {
            class: `site site-${move.kind}`,
            "data-kind": move.kind,
            cx: fmt(at.x),
            cy: fmt(at.y),
            r: "9",
          },
          [],
          events,
        ),
      );
    }
  }
  return h(
    "svg",
    {
      class: "diagram",
      viewBox: `0 0 ${layout.width} ${layout.height}`,
      width: String(layout.width),
      height: String(layout.height),
    },
    children,
  );
}

const SVG_TAGS = new Set([
  "svg",
  "path",
  "circle",
  "line",
  "g",
  "text",
  "rect",
  "polyline",
]);

const SVG_NS = "http://www.w3.org/2000/svg";

interface MinimalDocument {
  createElement(tag: string): Element;
  createElementNS(ns: string, tag: string): Element;
  createTextNode(text: string): Node;
}

/** Materialize a VNode tree under a real DOM parent (browser entry). */
export function mount(
  node: VNode | string,
  parent: Element,
  doc: MinimalDocument = document,
): void {
  if (typeof node === "string") {
    parent.appendChild(doc.createTextNode(node));
    return;
  }
  const el = SVG_TAGS.has(node.tag)
    ? doc.createElementNS(SVG_NS, node.tag)
    : doc.createElement(node.tag);
  for (const [name, value] of Object.entries(node.attrs)) {
    el.setAttribute(name, value);
  }
  for (const [name, handler] of Object.entries(node.events)) {
    el.addEventListener(name, handler);
  }
  for (const child of node.children) {
    mount(child, el, doc);
  }
  parent.appendChild(el);
}

export function replaceChildren(
  root: VNode,
  parent: Element,
  doc: MinimalDocument = document,
): void {
  parent.replaceChildren();
  mount(root, parent, doc);
}
