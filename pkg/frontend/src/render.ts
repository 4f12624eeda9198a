import type { Layout, PlacedNode } from "./layout.js";
import type { NetJson, RouteJson } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";
const PLACE_RADIUS = 17;
const BOX_WIDTH = 92;
const BOX_HEIGHT = 40;

export interface NetHandlers {
  onNodeClick(id: string, kind: "place" | "transition"): void;
}

function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>
): SVGElementTagNameMap[K] {
  const element = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    element.setAttribute(key, value);
  }
  return element;
}

function edgeEndpoint(node: PlacedNode, towards: PlacedNode): [number, number] {
  // Trim the line at the node border so arrowheads stay visible.
  const dx = towards.x - node.x;
  const dy = towards.y - node.y;
  const length = Math.hypot(dx, dy) || 1;
  const radius = node.kind === "place" ? PLACE_RADIUS : BOX_WIDTH / 2 - 8;
  return [node.x + (dx / length) * radius, node.y + (dy / length) * radius];
}

function shortLabel(text: string, max = 14): string {
  return text.length > max ? text.slice(0, max - 1) + "…" : text;
}

/** Render a laid-out net into the svg element, wiping previous content. */
export function renderNet(
  svg: SVGSVGElement,
  net: NetJson,
  layout: Layout,
  handlers: NetHandlers
): void {
  svg.textContent = "";
  svg.setAttribute("viewBox", `0 0 ${layout.width} ${layout.height}`);
  svg.setAttribute("width", String(layout.width));
  svg.setAttribute("height", String(layout.height));

  const defs = svgElement("defs", {});
  const marker = svgElement("marker", {
    id: "arrow",
    viewBox: "0 0 10 10",
    refX: "9",
    refY: "5",
    markerWidth: "7",
    markerHeight: "7",
    orient: "auto-start-reverse",
  });
  marker.appendChild(svgElement("path", { d: "M 0 0 L 10 5 L 0 10 z", fill: "#5c6672" }));
  defs.appendChild(marker);
  svg.appendChild(defs);

  const edgeLayer = svgElement("g", { class: "edges" });
  for (const arc of net.arcs) {
    const from = layout.byId.get(arc.from)!;
    const to = layout.byId.get(arc.to)!;
    const [x1, y1] = edgeEndpoint(from, to);
    const [x2, y2] = edgeEndpoint(to, from);
    const line = svgElement("line", {
      x1: String(x1),
      y1: String(y1),
      x2: String(x2),
      y2: String(y2),
      class: "edge",
      "marker-end": "url(#arrow)",
    });
    edgeLayer.appendChild(line);
  }
  svg.appendChild(edgeLayer);

  const nodeLayer = svgElement("g", { class: "nodes" });
  for (const node of layout.nodes) {
    const group = svgElement("g", {
      class: `node ${node.kind}`,
      "data-node-id": node.id,
      "data-kind": node.kind,
    });
    if (node.kind === "place") {
      const circle = svgElement("circle", {
        cx: String(node.x),
        cy: String(node.y),
        r: String(PLACE_RADIUS),
      });
      group.appendChild(circle);
      if (node.id === net.initial || node.id === net.final) {
        group.classList.add(node.id === net.initial ? "source" : "sink");
        const text = svgElement("text", {
          x: String(node.x),
          y: String(node.y + 5),
          "text-anchor": "middle",
          class: "place-label",
        });
        text.textContent = node.id === net.initial ? "i" : "o";
        group.appendChild(text);
      }
    } else {
      const rect = svgElement("rect", {
        x: String(node.x - BOX_WIDTH / 2),
        y: String(node.y - BOX_HEIGHT / 2),
        width: String(BOX_WIDTH),
        height: String(BOX_HEIGHT),
        rx: "6",
      });
      group.appendChild(rect);
      const text = svgElement("text", {
        x: String(node.x),
        y: String(node.y + 4),
        "text-anchor": "middle",
        class: "transition-label",
      });
      text.textContent = shortLabel(node.label || node.id);
      const title = svgElement("title", {});
      title.textContent = node.label || node.id;
      group.appendChild(title);
      group.appendChild(text);
    }
    group.addEventListener("click", () => handlers.onNodeClick(node.id, node.kind));
    nodeLayer.appendChild(group);
  }
  svg.appendChild(nodeLayer);
}

/**
 * Apply (or clear, with null) the route overlay.
 *
 * Fired transitions and visited places get the ``route`` class; transitions
 * that deviated with NOT_ENABLED get ``warn`` instead.
 */
export function applyHighlight(svg: SVGSVGElement, route: RouteJson | null): void {
  const warned = new Set(
    (route?.deviations ?? [])
      .filter((d) => d.kind === "NOT_ENABLED")
      .map((d) => d.label)
  );
  const onRoute = new Set([
    ...(route?.fired ?? []),
    ...(route?.visitedPlaces ?? []),
  ]);
  for (const element of svg.querySelectorAll<SVGGElement>("[data-node-id]")) {
    const id = element.getAttribute("data-node-id")!;
    element.classList.toggle("warn", warned.has(id));
    element.classList.toggle("route", onRoute.has(id) && !warned.has(id));
  }
}

/** Ids of currently highlighted elements, for tests and badges. */
export function highlightedIds(svg: SVGSVGElement): { route: string[]; warn: string[] } {
  const route: string[] = [];
  const warn: string[] = [];
  for (const element of svg.querySelectorAll<SVGGElement>("[data-node-id]")) {
    const id = element.getAttribute("data-node-id")!;
    if (element.classList.contains("route")) route.push(id);
    if (element.classList.contains("warn")) warn.push(id);
  }
  return { route, warn };
}
