"""In-memory two-level event log.

The meta level (:class:`MetaModel`) holds shared definitions: processes,
their activities, the steps that make up an activity, and the classes of
business objects that may take part. The instance level holds cases with
events and step instances, plus a single pool of business objects that step
instances reference by id. Nothing on the instance level copies meta data;
everything is connected through ``*_ref`` identifiers.

All types are frozen dataclasses; a :class:`XelLog` is immutable after
construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from datetime import datetime
from functools import cached_property
from typing import TYPE_CHECKING, Iterator

if TYPE_CHECKING:
    from .validation import Finding


@dataclass(frozen=True)
class StepDef:
    """Meta description of one step of an activity.

    ``ordinal`` is the 1-based position of the step within its activity.
    """

    id: str
    name: str
    ordinal: int


@dataclass(frozen=True)
class ActivityDef:
    """Meta description of an activity; zero steps models an atomic task."""

    id: str
    name: str
    steps: tuple[StepDef, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    @cached_property
    def steps_by_ordinal(self) -> tuple[StepDef, ...]:
        return tuple(sorted(self.steps, key=lambda s: s.ordinal))


@dataclass(frozen=True)
class ObjectClassDef:
    """A class of active players, e.g. "User", "Screen", "Invoice"."""

    id: str
    name: str


@dataclass(frozen=True)
class ProcessDef:
    id: str
    name: str
    activities: tuple[ActivityDef, ...] = ()
    object_classes: tuple[ObjectClassDef, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "activities", tuple(self.activities))
        object.__setattr__(self, "object_classes", tuple(self.object_classes))


@dataclass(frozen=True)
class MetaModel:
    """The meta level: every definition the instance level may reference."""

    processes: tuple[ProcessDef, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "processes", tuple(self.processes))

    @cached_property
    def process_by_id(self) -> dict[str, ProcessDef]:
        index: dict[str, ProcessDef] = {}
        for process in self.processes:
            index.setdefault(process.id, process)
        return index

    @cached_property
    def activity_by_id(self) -> dict[str, ActivityDef]:
        index: dict[str, ActivityDef] = {}
        for process in self.processes:
            for activity in process.activities:
                index.setdefault(activity.id, activity)
        return index

    @cached_property
    def activity_owner(self) -> dict[str, str]:
        """Activity id -> id of the process that defines it."""
        index: dict[str, str] = {}
        for process in self.processes:
            for activity in process.activities:
                index.setdefault(activity.id, process.id)
        return index

    @cached_property
    def step_by_id(self) -> dict[str, StepDef]:
        index: dict[str, StepDef] = {}
        for process in self.processes:
            for activity in process.activities:
                for step in activity.steps:
                    index.setdefault(step.id, step)
        return index

    @cached_property
    def step_owner(self) -> dict[str, str]:
        """Step id -> id of the activity that defines it."""
        index: dict[str, str] = {}
        for process in self.processes:
            for activity in process.activities:
                for step in activity.steps:
                    index.setdefault(step.id, activity.id)
        return index

    @cached_property
    def object_class_by_id(self) -> dict[str, ObjectClassDef]:
        index: dict[str, ObjectClassDef] = {}
        for process in self.processes:
            for cls in process.object_classes:
                index.setdefault(cls.id, cls)
        return index


@dataclass(frozen=True)
class ObjectRef:
    """Reference from a step instance to a business object, with a role.

    The role is a free-form string such as "performer" or "screen".
    """

    ref: str
    role: str


@dataclass(frozen=True)
class StepInstance:
    """One concrete execution of a step, inside one event."""

    id: str
    step_ref: str
    timestamp: datetime
    object_refs: tuple[ObjectRef, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "object_refs", tuple(self.object_refs))


@dataclass(frozen=True)
class Event:
    """One execution of an activity within a case.

    Events carry a ``[start, end]`` interval; an instantaneous event has
    ``start == end``. Step instance timestamps are expected to fall inside
    the interval (violations are validation warnings, not errors).
    """

    id: str
    activity_ref: str
    start: datetime
    end: datetime
    step_instances: tuple[StepInstance, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "step_instances", tuple(self.step_instances))


@dataclass(frozen=True)
class Case:
    """One end-to-end process instance; groups events in document order."""

    id: str
    process_ref: str
    events: tuple[Event, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "events", tuple(self.events))


@dataclass(frozen=True)
class BusinessObject:
    """An active player (user, screen, invoice, ...) stored once per log.

    Step instances reference objects by id; objects are never inlined or
    copied, so each one appears exactly once in :attr:`XelLog.objects`.
    """

    id: str
    class_ref: str
    attributes: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "attributes", dict(self.attributes))


@dataclass(frozen=True)
class XelLog:
    """A complete log: meta model, cases, and the business-object pool.

    ``warnings`` carries non-fatal findings attached by the parser; it does
    not take part in equality.
    """

    meta: MetaModel = field(default_factory=MetaModel)
    cases: tuple[Case, ...] = ()
    objects: tuple[BusinessObject, ...] = ()
    warnings: tuple["Finding", ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "cases", tuple(self.cases))
        object.__setattr__(self, "objects", tuple(self.objects))
        object.__setattr__(self, "warnings", tuple(self.warnings))

    @cached_property
    def case_by_id(self) -> dict[str, Case]:
        index: dict[str, Case] = {}
        for case in self.cases:
            index.setdefault(case.id, case)
        return index

    @cached_property
    def event_by_id(self) -> dict[str, tuple[Case, Event]]:
        index: dict[str, tuple[Case, Event]] = {}
        for case in self.cases:
            for event in case.events:
                index.setdefault(event.id, (case, event))
        return index

    @cached_property
    def object_by_id(self) -> dict[str, BusinessObject]:
        index: dict[str, BusinessObject] = {}
        for obj in self.objects:
            index.setdefault(obj.id, obj)
        return index

    def iter_events(self) -> Iterator[tuple[Case, Event]]:
        for case in self.cases:
            for event in case.events:
                yield case, event

    @property
    def total_events(self) -> int:
        return sum(len(case.events) for case in self.cases)

    @property
    def total_step_instances(self) -> int:
        return sum(
            len(event.step_instances) for case in self.cases for event in case.events
        )
