"""Read-only projections and drill-down joins over a validated log."""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime

from .errors import NotFoundError
from .model import ActivityDef, BusinessObject, Case, Event, StepDef, StepInstance, XelLog
from .validation import require_valid


@dataclass(frozen=True)
class ClassicRow:
    """One row of the flat single-case view consumed by traditional miners."""

    case_id: str
    activity: str
    start: datetime
    end: datetime


def ordered_events(case: Case) -> list[Event]:
    """Events of a case sorted by start time; ties keep document order."""
    return sorted(case.events, key=lambda e: e.start)


def project_classic(log: XelLog) -> list[ClassicRow]:
    """Flatten a log to (case, activity, start, end) rows.

    Steps and business objects are dropped. Rows are grouped by case in
    document order; within a case events are ordered by start time with
    document order breaking ties.
    """
    require_valid(log)
    rows: list[ClassicRow] = []
    for case in log.cases:
        for event in ordered_events(case):
            activity = log.meta.activity_by_id[event.activity_ref]
            rows.append(ClassicRow(case.id, activity.name, event.start, event.end))
    return rows


def steps_of_activity(log: XelLog, activity_id: str) -> list[StepDef]:
    """The step definitions of an activity, sorted by ordinal."""
    activity = log.meta.activity_by_id.get(activity_id)
    if activity is None:
        raise NotFoundError("activity", activity_id)
    return list(activity.steps_by_ordinal)


@dataclass(frozen=True)
class ResolvedObjectRef:
    obj: BusinessObject
    class_name: str
    role: str


@dataclass(frozen=True)
class StepDetail:
    instance: StepInstance
    step: StepDef
    objects: tuple[ResolvedObjectRef, ...]


@dataclass(frozen=True)
class EventDetail:
    case_id: str
    event: Event
    activity: ActivityDef
    steps: tuple[StepDetail, ...]


def detail_of_event(log: XelLog, event_id: str) -> EventDetail:
    """Join one event with its meta definitions and business objects.

    Step instances come back ordered by the ordinal of the step they
    reference; every object reference is resolved to the stored object.
    """
    found = log.event_by_id.get(event_id)
    if found is None:
        raise NotFoundError("event", event_id)
    case, event = found
    activity = log.meta.activity_by_id[event.activity_ref]
    step_defs = {step.id: step for step in activity.steps}

    details = []
    for instance in event.step_instances:
        step = step_defs[instance.step_ref]
        resolved = tuple(
            ResolvedObjectRef(
                obj=log.object_by_id[ref.ref],
                class_name=log.meta.object_class_by_id[log.object_by_id[ref.ref].class_ref].name,
                role=ref.role,
            )
            for ref in instance.object_refs
        )
        details.append(StepDetail(instance, step, resolved))
    details.sort(key=lambda d: d.step.ordinal)
    return EventDetail(case.id, event, activity, tuple(details))
