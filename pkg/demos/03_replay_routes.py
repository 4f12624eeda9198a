"""Replay cases on the mined net and diagnose a deviating one.

Run from the repository root:

    python demos/03_replay_routes.py
"""

from pathlib import Path

from xel import alpha_miner, build_traces, parse_xel, replay_all, replay_case
from xel.discovery import Trace, TraceLog

FIXTURE = Path(__file__).resolve().parent.parent / "fixtures" / "sample-order.xel"

log = parse_xel(FIXTURE.read_bytes())
traces = build_traces(log, "activity")
net = alpha_miner(traces)

summary = replay_all(net, traces)
print(f"replayed {len(summary.routes)} cases; {summary.complete_fraction:.0%} fit the model")
for route in summary.routes:
    print(f"  case {route.case_id}: fired {' -> '.join(route.fired)}")
    print(f"    places visited: {' -> '.join(route.visited_places)}")

# Now a case that skips approval: replay flags where it breaks but keeps going.
rogue = TraceLog(
    traces.granularity,
    traces.traces + (Trace("K_rogue", ("register", "pack", "ship")),),
    traces.label_index,
)
route = replay_case(net, rogue, "K_rogue")
print("\nrogue case that skips approval:")
print(f"  fired: {route.fired}")
for deviation in route.deviations:
    print(f"  deviation at position {deviation.position}: {deviation.label} was {deviation.kind}")
print(f"  complete: {route.complete}")
