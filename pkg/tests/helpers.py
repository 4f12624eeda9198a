"""Shared builders for tests: in-memory logs, random logs, XES documents."""

from __future__ import annotations

import random
from datetime import datetime, timedelta, timezone

from xel.discovery import LabelInfo, Trace, TraceLog
from xel.model import (
    ActivityDef,
    BusinessObject,
    Case,
    Event,
    MetaModel,
    ObjectClassDef,
    ObjectRef,
    ProcessDef,
    StepDef,
    StepInstance,
    XelLog,
)

UTC = timezone.utc
T0 = datetime(2024, 1, 1, tzinfo=UTC)


def ts(minutes: float) -> datetime:
    return T0 + timedelta(minutes=minutes)


def trace_log(sequences, granularity: str = "activity") -> TraceLog:
    """Wrap raw label sequences as a TraceLog with synthetic case ids."""
    traces = tuple(
        Trace(f"c{i + 1}", tuple(seq)) for i, seq in enumerate(sequences)
    )
    labels = {x for seq in sequences for x in seq}
    index = {label: LabelInfo(label, "activity", label) for label in sorted(labels)}
    return TraceLog(granularity, traces, index)


def tiny_log() -> XelLog:
    """One process, two activities, one case with two events; validates clean."""
    meta = MetaModel(
        (
            ProcessDef(
                "P1",
                "Tiny",
                (
                    ActivityDef("A", "Alpha task", (StepDef("A_s1", "Do alpha", 1),)),
                    ActivityDef("B", "Beta task", ()),
                ),
                (ObjectClassDef("user", "User"),),
            ),
        )
    )
    objects = (BusinessObject("u1", "user", {"name": "Ada"}),)
    case = Case(
        "K1",
        "P1",
        (
            Event(
                "E1",
                "A",
                ts(0),
                ts(5),
                (StepInstance("E1s1", "A_s1", ts(1), (ObjectRef("u1", "performer"),)),),
            ),
            Event("E2", "B", ts(10), ts(12), ()),
        ),
    )
    return XelLog(meta=meta, cases=(case,), objects=objects)


# -- random valid logs --------------------------------------------------------

_NAME_WORDS = [
    "Review", "Register", "Approve", "Pack", "Ship", "Audit", "Check",
    "Quote \"fast\"", "Cost & risk", "<priority>", "Ångström", "Déjà vu",
]


def _name(rng: random.Random) -> str:
    return " ".join(rng.sample(_NAME_WORDS, rng.randint(1, 2)))


def _stamp(rng: random.Random) -> datetime:
    # Millisecond precision, as written by the canonical serializer.
    return T0 + timedelta(
        seconds=rng.randint(0, 10_000_000), milliseconds=rng.randint(0, 999)
    )


def random_log(rng: random.Random) -> XelLog:
    """Generate a structurally valid log with escaping-hostile names."""
    counter = {"n": 0}

    def fresh(prefix: str) -> str:
        counter["n"] += 1
        return f"{prefix}{counter['n']}"

    processes = []
    for _ in range(rng.randint(1, 2)):
        activities = []
        for _ in range(rng.randint(0, 4)):
            steps = tuple(
                StepDef(fresh("st"), _name(rng), ordinal)
                for ordinal in range(1, rng.randint(0, 3) + 1)
            )
            activities.append(ActivityDef(fresh("act"), _name(rng), steps))
        classes = tuple(
            ObjectClassDef(fresh("cls"), _name(rng)) for _ in range(rng.randint(0, 2))
        )
        processes.append(
            ProcessDef(fresh("proc"), _name(rng), tuple(activities), classes)
        )
    meta = MetaModel(tuple(processes))

    all_classes = [cls for proc in processes for cls in proc.object_classes]
    objects = tuple(
        BusinessObject(
            fresh("obj"),
            rng.choice(all_classes).id,
            {f"k{i}": _name(rng) for i in range(rng.randint(0, 2))},
        )
        for _ in range(rng.randint(0, 4))
        if all_classes
    )

    cases = []
    for _ in range(rng.randint(0, 4)):
        process = rng.choice(processes)
        if not process.activities:
            cases.append(Case(fresh("case"), process.id, ()))
            continue
        events = []
        for _ in range(rng.randint(0, 4)):
            activity = rng.choice(process.activities)
            start = _stamp(rng)
            end = start + timedelta(minutes=rng.randint(0, 90))
            span = (end - start).total_seconds()
            picked = rng.sample(activity.steps, rng.randint(0, len(activity.steps)))
            instances = tuple(
                StepInstance(
                    fresh("si"),
                    step.id,
                    start + timedelta(seconds=int(rng.random() * span)),
                    tuple(
                        ObjectRef(rng.choice(objects).id, rng.choice(["performer", "screen", "input"]))
                        for _ in range(rng.randint(0, 2))
                        if objects
                    ),
                )
                for step in picked
            )
            events.append(Event(fresh("ev"), activity.id, start, end, instances))
        cases.append(Case(fresh("case"), process.id, tuple(events)))

    return XelLog(meta=meta, cases=tuple(cases), objects=objects)


def random_sequences(rng: random.Random) -> list[list[str]]:
    """A random trace multiset: alphabet <= 6, <= 50 traces, length <= 8."""
    alphabet = [chr(ord("a") + i) for i in range(rng.randint(1, 6))]
    return [
        [rng.choice(alphabet) for _ in range(rng.randint(1, 8))]
        for _ in range(rng.randint(1, 50))
    ]


# -- XES ----------------------------------------------------------------------

def xes_document(
    traces: list[tuple[str, list[tuple[str, str, str | None]]]]
) -> bytes:
    """Build an XES document from (trace_name, [(event, iso_stamp, resource)]).

    Assembled by string templating so tests depend on no parsing code.
    """
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<log xes.version="1.0" xmlns="http://www.xes-standard.org/">',
        '  <extension name="Concept" prefix="concept" uri="http://www.xes-standard.org/concept.xesext"/>',
        '  <extension name="Time" prefix="time" uri="http://www.xes-standard.org/time.xesext"/>',
        '  <string key="concept:name" value="generated log"/>',
    ]
    for name, events in traces:
        parts.append("  <trace>")
        parts.append(f'    <string key="concept:name" value="{name}"/>')
        for label, stamp, resource in events:
            parts.append("    <event>")
            parts.append(f'      <string key="concept:name" value="{label}"/>')
            parts.append(f'      <date key="time:timestamp" value="{stamp}"/>')
            if resource is not None:
                parts.append(f'      <string key="org:resource" value="{resource}"/>')
            parts.append("    </event>")
        parts.append("  </trace>")
    parts.append("</log>")
    return "\n".join(parts).encode("utf-8")


def random_xes(rng: random.Random, n_traces: int = 20) -> bytes:
    """A generated XES log with spaced activity names and shared resources."""
    activity_pool = [
        "register request", "examine thoroughly", "examine casually",
        "check ticket", "decide", "reinitiate request", "pay compensation",
        "reject request",
    ]
    resource_pool = ["alice", "bob", "carol", None]
    traces = []
    for t in range(1, n_traces + 1):
        events = []
        stamp = T0 + timedelta(days=t)
        for _ in range(rng.randint(2, 8)):
            stamp += timedelta(minutes=rng.randint(1, 120))
            events.append(
                (
                    rng.choice(activity_pool),
                    stamp.strftime("%Y-%m-%dT%H:%M:%S") + "+00:00",
                    rng.choice(resource_pool),
                )
            )
        traces.append((f"t{t}", events))
    return xes_document(traces)


# -- scale --------------------------------------------------------------------

def big_sequential_log(n_cases: int = 1000, events_per_case: int = 10) -> XelLog:
    """10k events over a 12-activity process with one choice and one parallel pair."""
    rng = random.Random(7)
    acts = tuple(ActivityDef(f"a{i}", f"Task {i}", ()) for i in range(1, 13))
    meta = MetaModel((ProcessDef("P1", "Synthetic", acts, ()),))
    sequences = []
    for _ in range(n_cases):
        seq = ["a1", "a2"]
        seq += ["a3", "a4"] if rng.random() < 0.5 else ["a4", "a3"]  # parallel pair
        seq.append("a5" if rng.random() < 0.5 else "a6")  # choice
        seq += ["a7", "a8"]
        seq.append("a9" if rng.random() < 0.5 else "a10")  # choice
        seq += ["a11", "a12"]
        assert len(seq) == events_per_case
        sequences.append(seq)
    cases = []
    for k, seq in enumerate(sequences, start=1):
        events = tuple(
            Event(f"e{k}_{i}", label, ts(k * 100 + i), ts(k * 100 + i), ())
            for i, label in enumerate(seq)
        )
        cases.append(Case(f"c{k}", "P1", events))
    return XelLog(meta=meta, cases=tuple(cases), objects=())
