"""Mine Petri nets from the same log at both granularities.

Run from the repository root:

    python demos/02_discover_net.py

Writes activity-net.dot and step-net.dot next to this script; render them
with `dot -Tsvg activity-net.dot > activity-net.svg` if graphviz is around.
"""

from pathlib import Path

from xel import alpha_miner, build_traces, dfg, export_dot, footprint, parse_xel

HERE = Path(__file__).resolve().parent
FIXTURE = HERE.parent / "fixtures" / "sample-order.xel"

log = parse_xel(FIXTURE.read_bytes())

for granularity in ("activity", "step"):
    traces = build_traces(log, granularity)
    print(f"\n== {granularity} granularity ==")
    print(f"traces: {[t.labels for t in traces.traces]}")

    fp = footprint(traces)
    print("footprint matrix:")
    width = max(len(a) for a in fp.alphabet)
    header = " " * (width + 2) + "  ".join(f"{b:>{width}}" for b in fp.alphabet)
    print("  " + header)
    for a in fp.alphabet:
        row = "  ".join(f"{fp.relation(a, b).value:>{width}}" for b in fp.alphabet)
        print(f"  {a:>{width}}  {row}")

    graph = dfg(traces)
    print(f"directly-follows edges: {sorted(graph.edges.items())}")

    net = alpha_miner(traces)
    print(f"net: {len(net.transitions)} transitions, {len(net.places)} places, {len(net.arcs)} arcs")
    out = HERE / f"{granularity}-net.dot"
    out.write_bytes(export_dot(net, traces.label_index))
    print(f"wrote {out.name}")
