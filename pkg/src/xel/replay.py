"""Token replay of case traces on a discovered net.

Replay never aborts: labels missing from the net are recorded as
``UNKNOWN_LABEL`` and skipped, and a transition fired without full enablement
is recorded as ``NOT_ENABLED`` and then force-fired (the missing tokens are
inserted first) so the rest of the case can still be diagnosed and the whole
attempted route highlighted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .discovery import TraceLog
from .petri import SINK_ID, SOURCE_ID, PetriNet

NOT_ENABLED = "NOT_ENABLED"
UNKNOWN_LABEL = "UNKNOWN_LABEL"


@dataclass(frozen=True)
class Deviation:
    position: int
    label: str
    kind: str


@dataclass(frozen=True)
class Route:
    """The path one case took through a net.

    ``fired`` lists every transition that fired (normally or forced) in
    order; ``visited_places`` lists every place that received a token, in
    arrival order; ``complete`` is true iff the final marking is exactly one
    token on the sink.
    """

    case_id: str
    fired: tuple[str, ...]
    visited_places: tuple[str, ...]
    deviations: tuple[Deviation, ...]
    complete: bool

    @property
    def conforms(self) -> bool:
        return self.complete and not self.deviations


def replay_case(net: PetriNet, traces: TraceLog, case_id: str) -> Route:
    """Replay one case's trace on the net, token by token."""
    trace = traces.trace_of(case_id)

    marking = net.initial_marking()
    visited: list[str] = [SOURCE_ID]
    fired: list[str] = []
    deviations: list[Deviation] = []

    for position, label in enumerate(trace.labels):
        if label not in net.transition_set:
            deviations.append(Deviation(position, label, UNKNOWN_LABEL))
            continue
        inputs = net.preset[label]
        outputs = net.postset[label]
        missing = sorted(pid for pid in inputs if marking[pid] == 0)
        if missing:
            deviations.append(Deviation(position, label, NOT_ENABLED))
            for pid in missing:  # force-fire: insert the missing tokens
                marking[pid] += 1
                visited.append(pid)
        for pid in inputs:
            marking[pid] -= 1
        for pid in outputs:
            marking[pid] += 1
        visited.extend(outputs)  # preset/postset ids are pre-sorted
        fired.append(label)

    complete = all(
        count == (1 if pid == SINK_ID else 0) for pid, count in marking.items()
    )
    return Route(case_id, tuple(fired), tuple(visited), tuple(deviations), complete)


@dataclass(frozen=True)
class ReplaySummary:
    routes: tuple[Route, ...]
    complete_fraction: float


def replay_all(net: PetriNet, traces: TraceLog) -> ReplaySummary:
    """Replay every case; the fraction counts complete, deviation-free routes.

    An empty trace log vacuously has fraction 1.0.
    """
    routes = tuple(replay_case(net, traces, trace.case_id) for trace in traces.traces)
    if not routes:
        return ReplaySummary((), 1.0)
    conforming = sum(1 for route in routes if route.conforms)
    return ReplaySummary(routes, conforming / len(routes))
