"""Wire formats for nets and routes: Graphviz DOT and JSON payloads."""

from __future__ import annotations

import json
from typing import Any, Mapping

from .discovery import ACTIVITY, LabelInfo, TraceLog
from .model import XelLog
from .petri import SINK_ID, SOURCE_ID, PetriNet
from .replay import Route


def _quote(identifier: str) -> str:
    escaped = identifier.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def export_dot(net: PetriNet, label_index: Mapping[str, LabelInfo]) -> bytes:
    """Render a net as Graphviz DOT, left to right.

    Places are circles (source and sink are filled and labelled ``i`` and
    ``o``), transitions are boxes carrying their display names. Output is
    deterministic for a given net.
    """
    lines = ["digraph petrinet {", "  rankdir=LR;", '  node [fontname="Helvetica"];']
    for place in net.places:
        pid = place.pid
        if pid == SOURCE_ID:
            style = ' label="i" style=filled fillcolor="#cfe8cf"'
        elif pid == SINK_ID:
            style = ' label="o" style=filled fillcolor="#e8cfcf"'
        else:
            style = ' label=""'
        lines.append(f"  {_quote(pid)} [shape=circle{style}];")
    for label in net.transitions:
        info = label_index.get(label)
        display = info.name if info is not None else label
        lines.append(
            f"  {_quote(label)} [shape=box style=filled fillcolor=\"#f4e5ad\""
            f" label={_quote(display)}];"
        )
    for source, target in net.arcs:
        lines.append(f"  {_quote(source)} -> {_quote(target)};")
    lines.append("}")
    return ("\n".join(lines) + "\n").encode("utf-8")


def net_to_json(net: PetriNet, traces: TraceLog, log: XelLog | None = None) -> dict[str, Any]:
    """Build the JSON form of a net.

    Nodes list places first (source, internal, sink) and then transitions.
    At activity granularity each transition embeds its step definitions so a
    viewer can show them without an extra round-trip.
    """
    nodes: list[dict[str, Any]] = []
    for place in net.places:
        pid = place.pid
        label = pid if pid in (SOURCE_ID, SINK_ID) else ""
        nodes.append({"id": pid, "kind": "place", "label": label})
    embed_steps = traces.granularity == ACTIVITY and log is not None
    for label in net.transitions:
        info = traces.label_index.get(label)
        node: dict[str, Any] = {
            "id": label,
            "kind": "transition",
            "label": info.name if info is not None else label,
        }
        if embed_steps:
            activity = log.meta.activity_by_id.get(label)
            node["steps"] = [
                {"id": step.id, "name": step.name, "ordinal": step.ordinal}
                for step in activity.steps_by_ordinal
            ] if activity is not None else []
        nodes.append(node)
    return {
        "nodes": nodes,
        "arcs": [{"from": source, "to": target} for source, target in net.arcs],
        "initial": SOURCE_ID,
        "final": SINK_ID,
    }


def route_to_json(route: Route) -> dict[str, Any]:
    """Mirror a :class:`Route` losslessly as JSON-ready data."""
    return {
        "caseId": route.case_id,
        "fired": list(route.fired),
        "visitedPlaces": list(route.visited_places),
        "deviations": [
            {"position": d.position, "label": d.label, "kind": d.kind}
            for d in route.deviations
        ],
        "complete": route.complete,
    }


def json_bytes(payload: Any) -> bytes:
    """Deterministic, human-readable JSON bytes with a trailing newline."""
    return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
