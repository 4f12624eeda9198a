import type { NetJson } from "./types.js";

export interface PlacedNode {
  id: string;
  kind: "place" | "transition";
  label: string;
  rank: number;
  x: number;
  y: number;
}

export interface Layout {
  nodes: PlacedNode[];
  byId: Map<string, PlacedNode>;
  width: number;
  height: number;
}

export const COLUMN_WIDTH = 130;
export const ROW_HEIGHT = 78;
export const MARGIN = 60;

/**
 * Layered left-to-right layout.
 *
 * Ranks come from a breadth-first walk out of the initial place (cycles are
 * therefore fine); the final place is pushed to the last column. Within a
 * rank, a few barycenter sweeps reduce crossings, with node ids breaking
 * ties so the result is deterministic.
 */
export function layoutNet(net: NetJson): Layout {
  const ids = new Set(net.nodes.map((node) => node.id));
  if (ids.size !== net.nodes.length) {
    throw new Error("net has duplicate node ids");
  }
  for (const arc of net.arcs) {
    if (!ids.has(arc.from) || !ids.has(arc.to)) {
      throw new Error(`arc references unknown node: ${arc.from} -> ${arc.to}`);
    }
  }
  if (net.nodes.length === 0) {
    return { nodes: [], byId: new Map(), width: 2 * MARGIN, height: 2 * MARGIN };
  }

  const successors = new Map<string, string[]>();
  const predecessors = new Map<string, string[]>();
  const append = (map: Map<string, string[]>, key: string, value: string) => {
    const list = map.get(key);
    if (list) list.push(value);
    else map.set(key, [value]);
  };
  for (const arc of net.arcs) {
    append(successors, arc.from, arc.to);
    append(predecessors, arc.to, arc.from);
  }

  // Breadth-first ranks from the source place.
  const rank = new Map<string, number>();
  const queue: string[] = [];
  if (ids.has(net.initial)) {
    rank.set(net.initial, 0);
    queue.push(net.initial);
  }
  while (queue.length > 0) {
    const current = queue.shift()!;
    for (const next of successors.get(current) ?? []) {
      if (!rank.has(next)) {
        rank.set(next, rank.get(current)! + 1);
        queue.push(next);
      }
    }
  }
  let maxRank = 0;
  for (const value of rank.values()) maxRank = Math.max(maxRank, value);
  for (const node of net.nodes) {
    if (!rank.has(node.id)) rank.set(node.id, maxRank + 1); // disconnected from i
  }
  for (const value of rank.values()) maxRank = Math.max(maxRank, value);
  if (ids.has(net.final)) {
    rank.set(net.final, maxRank); // sink always sits in the last column
  }

  // Group nodes per rank, stable by id.
  const columns: string[][] = [];
  for (const node of net.nodes) {
    const r = rank.get(node.id)!;
    (columns[r] ??= []).push(node.id);
  }
  for (const column of columns) column?.sort();

  // Barycenter ordering: average the previous column's positions.
  const position = new Map<string, number>();
  const reindex = (column: string[]) =>
    column.forEach((id, index) => position.set(id, index));
  columns.forEach((column) => column && reindex(column));
  for (let sweep = 0; sweep < 3; sweep++) {
    for (let r = 1; r < columns.length; r++) {
      const column = columns[r];
      if (!column) continue;
      const score = (id: string): number => {
        const prev = (predecessors.get(id) ?? []).filter(
          (p) => rank.get(p) === r - 1
        );
        if (prev.length === 0) return position.get(id)!;
        return prev.reduce((sum, p) => sum + (position.get(p) ?? 0), 0) / prev.length;
      };
      column.sort((a, b) => score(a) - score(b) || a.localeCompare(b));
      reindex(column);
    }
  }

  let tallest = 1;
  for (const column of columns) {
    if (column) tallest = Math.max(tallest, column.length);
  }
  const nodes: PlacedNode[] = [];
  const byId = new Map<string, PlacedNode>();
  const info = new Map(net.nodes.map((node) => [node.id, node]));
  columns.forEach((column, r) => {
    if (!column) return;
    const offset = ((tallest - column.length) * ROW_HEIGHT) / 2;
    column.forEach((id, index) => {
      const node = info.get(id)!;
      const placed: PlacedNode = {
        id,
        kind: node.kind,
        label: node.label,
        rank: r,
        x: MARGIN + r * COLUMN_WIDTH,
        y: MARGIN + offset + index * ROW_HEIGHT,
      };
      nodes.push(placed);
      byId.set(id, placed);
    });
  });

  return {
    nodes,
    byId,
    width: 2 * MARGIN + (columns.length - 1) * COLUMN_WIDTH,
    height: 2 * MARGIN + (tallest - 1) * ROW_HEIGHT,
  };
}
