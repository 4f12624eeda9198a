"""Process discovery: trace extraction, footprint relations, alpha miner, DFG.

The miner follows the classic alpha construction:

1. ``T_L``: the labels occurring in the traces.
2. ``T_I`` / ``T_O``: labels starting / ending at least one trace.
3. ``X_L``: pairs of non-empty label sets ``(A, B)`` where every ``a in A``
   causally precedes every ``b in B`` and the members of ``A`` (and of
   ``B``) are pairwise unrelated, including each label with itself.
4. ``Y_L``: the maximal elements of ``X_L`` under componentwise inclusion.
5. One place per element of ``Y_L`` plus a source ``i`` and sink ``o``.
6. Arcs ``a -> p(A,B) -> b``, plus ``i`` into every initial label and every
   final label into ``o``.

No loop handling is attempted: a label that directly follows itself keeps
the parallel self-relation, is excluded from candidate sets by rule 3, and
triggers a :class:`SelfLoopWarning`.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Mapping

from .errors import AlphabetTooLargeError, EmptyLogError, NotFoundError
from .model import XelLog
from .petri import SINK_ID, SOURCE_ID, Place, PetriNet
from .queries import ordered_events
from .validation import require_valid

ACTIVITY = "activity"
STEP = "step"
GRANULARITIES = (ACTIVITY, STEP)


class SelfLoopWarning(UserWarning):
    """A label directly follows itself; classic alpha keeps it unplaced."""


@dataclass(frozen=True)
class LabelInfo:
    """Display data for one meta-level label used as a transition."""

    name: str
    kind: str  # "activity" or "step"
    activity_id: str


@dataclass(frozen=True)
class Trace:
    case_id: str
    labels: tuple[str, ...]


@dataclass(frozen=True)
class TraceLog:
    """A multiset of label sequences, one per case, at a fixed granularity.

    Labels are always meta-level ids; display names live in ``label_index``
    and are applied only when rendering.
    """

    granularity: str
    traces: tuple[Trace, ...]
    label_index: Mapping[str, LabelInfo]

    def sequences(self) -> list[tuple[str, ...]]:
        return [trace.labels for trace in self.traces]

    def trace_of(self, case_id: str) -> Trace:
        for trace in self.traces:
            if trace.case_id == case_id:
                return trace
        raise NotFoundError("case", case_id)


def build_traces(log: XelLog, granularity: str) -> TraceLog:
    """Project a log onto label sequences.

    At activity granularity each case maps to its activity ids, events
    ordered by start time (document order on ties). At step granularity each
    event contributes its step ids in ordinal order; an event without step
    instances contributes its activity id as an atomic label so traces stay
    complete.
    """
    if granularity not in GRANULARITIES:
        raise ValueError(f"granularity must be one of {GRANULARITIES}, got {granularity!r}")
    require_valid(log)

    label_index: dict[str, LabelInfo] = {}
    traces = []
    for case in log.cases:
        labels: list[str] = []
        for event in ordered_events(case):
            activity = log.meta.activity_by_id[event.activity_ref]
            if granularity == ACTIVITY:
                labels.append(activity.id)
                label_index.setdefault(
                    activity.id, LabelInfo(activity.name, ACTIVITY, activity.id)
                )
                continue
            if not event.step_instances:
                labels.append(activity.id)
                label_index.setdefault(
                    activity.id, LabelInfo(activity.name, ACTIVITY, activity.id)
                )
                continue
            step_defs = {step.id: step for step in activity.steps}
            for instance in sorted(
                event.step_instances, key=lambda si: step_defs[si.step_ref].ordinal
            ):
                step = step_defs[instance.step_ref]
                labels.append(step.id)
                label_index.setdefault(step.id, LabelInfo(step.name, STEP, activity.id))
        traces.append(Trace(case.id, tuple(labels)))
    return TraceLog(granularity, tuple(traces), label_index)


class Relation(Enum):
    CAUSAL = "->"
    INVERSE = "<-"
    PARALLEL = "||"
    UNRELATED = "#"


@dataclass(frozen=True)
class Footprint:
    """The complete ordering-relation matrix over a trace alphabet."""

    alphabet: tuple[str, ...]
    relations: Mapping[tuple[str, str], Relation]
    directly_follows: Mapping[tuple[str, str], int]

    def relation(self, a: str, b: str) -> Relation:
        return self.relations[(a, b)]


def _check_traces(traces: TraceLog) -> None:
    if not traces.traces:
        raise EmptyLogError("trace log has no traces")
    for trace in traces.traces:
        if not trace.labels:
            raise EmptyLogError(f"case '{trace.case_id}' has an empty trace")


def footprint(traces: TraceLog) -> Footprint:
    """Compute the footprint of a trace log.

    ``a > b`` iff ``a`` directly precedes ``b`` in some trace; then
    ``a -> b`` iff ``a > b`` and not ``b > a``; ``a || b`` iff both hold;
    ``a # b`` iff neither does.
    """
    _check_traces(traces)
    follows: Counter[tuple[str, str]] = Counter()
    labels: set[str] = set()
    for trace in traces.traces:
        labels.update(trace.labels)
        for left, right in zip(trace.labels, trace.labels[1:]):
            follows[(left, right)] += 1

    alphabet = tuple(sorted(labels))
    relations: dict[tuple[str, str], Relation] = {}
    for a in alphabet:
        for b in alphabet:
            ab = (a, b) in follows
            ba = (b, a) in follows
            if ab and ba:
                relations[(a, b)] = Relation.PARALLEL
            elif ab:
                relations[(a, b)] = Relation.CAUSAL
            elif ba:
                relations[(a, b)] = Relation.INVERSE
            else:
                relations[(a, b)] = Relation.UNRELATED
    return Footprint(alphabet, relations, dict(follows))


def _unrelated_cliques(candidates: list[str], unrelated) -> list[tuple[str, ...]]:
    """All non-empty subsets of ``candidates`` that are pairwise unrelated.

    Candidates must already satisfy ``x # x``. Enumeration extends each
    clique only with later candidates, so every clique appears exactly once
    and in lexicographic order.
    """
    found: list[tuple[str, ...]] = []
    stack: list[str] = []

    def extend(start: int) -> None:
        for idx in range(start, len(candidates)):
            label = candidates[idx]
            if all(unrelated(label, member) for member in stack):
                stack.append(label)
                found.append(tuple(stack))
                extend(idx + 1)
                stack.pop()

    extend(0)
    return found


def alpha_miner(traces: TraceLog, max_alphabet: int = 64) -> PetriNet:
    """Run the classic alpha construction over a trace log.

    The candidate-pair search is exponential in the alphabet, so alphabets
    beyond ``max_alphabet`` are rejected. Output ordering is deterministic:
    transitions sorted, internal places sorted by their (A, B) label sets.
    """
    fp = footprint(traces)
    if len(fp.alphabet) > max_alphabet:
        raise AlphabetTooLargeError(len(fp.alphabet), max_alphabet)

    self_loops = [a for a in fp.alphabet if fp.relation(a, a) is Relation.PARALLEL]
    if self_loops:
        warnings.warn(
            f"label(s) {', '.join(self_loops)} directly follow themselves;"
            " the classic construction leaves them without surrounding places",
            SelfLoopWarning,
            stacklevel=2,
        )

    def unrelated(a: str, b: str) -> bool:
        return fp.relation(a, b) is Relation.UNRELATED

    successors = {
        a: frozenset(b for b in fp.alphabet if fp.relation(a, b) is Relation.CAUSAL)
        for a in fp.alphabet
    }

    # Only self-unrelated labels may join a candidate set; A-side members
    # need causal successors, B-side members causal predecessors.
    a_candidates = [a for a in fp.alphabet if unrelated(a, a) and successors[a]]
    pairs: set[tuple[frozenset[str], frozenset[str]]] = set()
    for a_set in _unrelated_cliques(a_candidates, unrelated):
        shared = reduce(frozenset.intersection, (successors[a] for a in a_set))
        b_candidates = sorted(b for b in shared if unrelated(b, b))
        for b_set in _unrelated_cliques(b_candidates, unrelated):
            pairs.add((frozenset(a_set), frozenset(b_set)))

    maximal = [
        (a_set, b_set)
        for a_set, b_set in pairs
        if not any(
            (a_set, b_set) != (other_a, other_b) and a_set <= other_a and b_set <= other_b
            for other_a, other_b in pairs
        )
    ]

    first_labels = sorted({trace.labels[0] for trace in traces.traces})
    last_labels = sorted({trace.labels[-1] for trace in traces.traces})

    internal = sorted(
        (Place(tuple(a_set), tuple(b_set)) for a_set, b_set in maximal),
        key=lambda place: (place.inputs, place.outputs),
    )
    places = (Place((), tuple(first_labels)), *internal, Place(tuple(last_labels), ()))

    arcs: set[tuple[str, str]] = set()
    for label in first_labels:
        arcs.add((SOURCE_ID, label))
    for label in last_labels:
        arcs.add((label, SINK_ID))
    for place in internal:
        for label in place.inputs:
            arcs.add((label, place.pid))
        for label in place.outputs:
            arcs.add((place.pid, label))

    return PetriNet(fp.alphabet, places, tuple(sorted(arcs)))


@dataclass(frozen=True)
class Dfg:
    """Directly-follows graph with node, edge, and endpoint frequencies."""

    nodes: Mapping[str, int]
    edges: Mapping[tuple[str, str], int]
    start_labels: Mapping[str, int]
    end_labels: Mapping[str, int]


def dfg(traces: TraceLog) -> Dfg:
    """Count immediate successions, label occurrences, and trace endpoints."""
    if not traces.traces:
        raise EmptyLogError("trace log has no traces")
    nodes: Counter[str] = Counter()
    edges: Counter[tuple[str, str]] = Counter()
    starts: Counter[str] = Counter()
    ends: Counter[str] = Counter()
    for trace in traces.traces:
        if not trace.labels:
            continue
        nodes.update(trace.labels)
        starts[trace.labels[0]] += 1
        ends[trace.labels[-1]] += 1
        for left, right in zip(trace.labels, trace.labels[1:]):
            edges[(left, right)] += 1
    return Dfg(dict(nodes), dict(edges), dict(starts), dict(ends))
