"""Structural validation: id rules, referential closure, time windows.

``validate`` never raises; every finding becomes a report entry with a
stable code, a human-readable message, and the id of the offending element.
Errors mark logs that downstream operations must reject; warnings mark
tolerated oddities (clock skew, empty processes, unused objects).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidLogError
from .model import ActivityDef, XelLog

# Error codes: any of these present means the log is rejected.
DUPLICATE_ID = "DUPLICATE_ID"
INVALID_ID = "INVALID_ID"
BAD_STEP_ORDINALS = "BAD_STEP_ORDINALS"
EVENT_TIME_ORDER = "EVENT_TIME_ORDER"
DANGLING_PROCESS_REF = "DANGLING_PROCESS_REF"
DANGLING_ACTIVITY_REF = "DANGLING_ACTIVITY_REF"
DANGLING_STEP_REF = "DANGLING_STEP_REF"
DANGLING_OBJECT_REF = "DANGLING_OBJECT_REF"
DANGLING_CLASS_REF = "DANGLING_CLASS_REF"
DUPLICATE_STEP_REF = "DUPLICATE_STEP_REF"

# Warning codes: reported but never fatal.
EMPTY_PROCESS = "EMPTY_PROCESS"
STEP_OUTSIDE_EVENT_WINDOW = "STEP_OUTSIDE_EVENT_WINDOW"
UNREFERENCED_OBJECT = "UNREFERENCED_OBJECT"
UNKNOWN_ELEMENT = "UNKNOWN_ELEMENT"
UNKNOWN_ATTRIBUTE = "UNKNOWN_ATTRIBUTE"


@dataclass(frozen=True)
class Finding:
    code: str
    message: str
    element: str

    def __str__(self) -> str:
        return f"{self.code}: {self.message}"


@dataclass
class ValidationReport:
    errors: list[Finding] = field(default_factory=list)
    warnings: list[Finding] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.errors

    def error(self, code: str, message: str, element: str) -> None:
        self.errors.append(Finding(code, message, element))

    def warn(self, code: str, message: str, element: str) -> None:
        self.warnings.append(Finding(code, message, element))


def _check_id(report: ValidationReport, kind: str, identifier: str) -> None:
    if not identifier or any(ch.isspace() for ch in identifier):
        report.error(
            INVALID_ID,
            f"{kind} id {identifier!r} must be non-empty and contain no whitespace",
            identifier,
        )


def _check_ordinals(report: ValidationReport, activity: ActivityDef) -> None:
    # Ordinals must be exactly 1..n, in any order, with no repeats.
    ordinals = sorted(step.ordinal for step in activity.steps)
    if ordinals and ordinals != list(range(1, len(ordinals) + 1)):
        report.error(
            BAD_STEP_ORDINALS,
            f"activity '{activity.id}' step ordinals {ordinals} are not 1..{len(ordinals)}",
            activity.id,
        )


def validate(log: XelLog) -> ValidationReport:
    """Check every structural invariant of a log and report the findings."""
    report = ValidationReport()
    meta = log.meta

    # Meta level: ids are globally unique across processes, activities,
    # steps, and object classes.
    seen_meta: set[str] = set()

    def meta_id(kind: str, identifier: str) -> None:
        _check_id(report, kind, identifier)
        if identifier in seen_meta:
            report.error(DUPLICATE_ID, f"duplicate meta id '{identifier}'", identifier)
        seen_meta.add(identifier)

    for process in meta.processes:
        meta_id("process", process.id)
        if not process.activities:
            report.warn(
                EMPTY_PROCESS, f"process '{process.id}' defines no activities", process.id
            )
        for activity in process.activities:
            meta_id("activity", activity.id)
            _check_ordinals(report, activity)
            for step in activity.steps:
                meta_id("step", step.id)
        for cls in process.object_classes:
            meta_id("object class", cls.id)

    # Business-object pool: unique ids, resolvable classes.
    seen_objects: set[str] = set()
    for obj in log.objects:
        _check_id(report, "object", obj.id)
        if obj.id in seen_objects:
            report.error(DUPLICATE_ID, f"object '{obj.id}' stored more than once", obj.id)
        seen_objects.add(obj.id)
        if obj.class_ref not in meta.object_class_by_id:
            report.error(
                DANGLING_CLASS_REF,
                f"object '{obj.id}' references unknown class '{obj.class_ref}'",
                obj.class_ref,
            )

    # Instance level.
    referenced_objects: set[str] = set()
    seen_cases: set[str] = set()
    seen_events: set[str] = set()
    seen_instances: set[str] = set()

    for case in log.cases:
        _check_id(report, "case", case.id)
        if case.id in seen_cases:
            report.error(DUPLICATE_ID, f"duplicate case id '{case.id}'", case.id)
        seen_cases.add(case.id)

        process = meta.process_by_id.get(case.process_ref)
        if process is None:
            report.error(
                DANGLING_PROCESS_REF,
                f"case '{case.id}' references unknown process '{case.process_ref}'",
                case.process_ref,
            )

        for event in case.events:
            _check_id(report, "event", event.id)
            if event.id in seen_events:
                report.error(DUPLICATE_ID, f"duplicate event id '{event.id}'", event.id)
            seen_events.add(event.id)

            activity = meta.activity_by_id.get(event.activity_ref)
            if activity is None or (
                process is not None and meta.activity_owner.get(event.activity_ref) != process.id
            ):
                report.error(
                    DANGLING_ACTIVITY_REF,
                    f"event '{event.id}' references activity '{event.activity_ref}'"
                    f" not defined by process '{case.process_ref}'",
                    event.activity_ref,
                )
                activity = None

            if event.start > event.end:
                report.error(
                    EVENT_TIME_ORDER,
                    f"event '{event.id}' starts after it ends",
                    event.id,
                )

            event_steps = (
                {step.id for step in activity.steps} if activity is not None else None
            )
            used_steps: set[str] = set()
            for instance in event.step_instances:
                _check_id(report, "step instance", instance.id)
                if instance.id in seen_instances:
                    report.error(
                        DUPLICATE_ID, f"duplicate step instance id '{instance.id}'", instance.id
                    )
                seen_instances.add(instance.id)

                if event_steps is not None:
                    if instance.step_ref not in event_steps:
                        report.error(
                            DANGLING_STEP_REF,
                            f"step instance '{instance.id}' references step"
                            f" '{instance.step_ref}' not defined by activity '{event.activity_ref}'",
                            instance.step_ref,
                        )
                    elif instance.step_ref in used_steps:
                        report.error(
                            DUPLICATE_STEP_REF,
                            f"event '{event.id}' has two instances of step '{instance.step_ref}'",
                            instance.step_ref,
                        )
                    used_steps.add(instance.step_ref)

                if not event.start <= instance.timestamp <= event.end:
                    report.warn(
                        STEP_OUTSIDE_EVENT_WINDOW,
                        f"step instance '{instance.id}' timestamp falls outside"
                        f" event '{event.id}' window",
                        instance.id,
                    )

                for obj_ref in instance.object_refs:
                    referenced_objects.add(obj_ref.ref)
                    if obj_ref.ref not in log.object_by_id:
                        report.error(
                            DANGLING_OBJECT_REF,
                            f"step instance '{instance.id}' references unknown"
                            f" object '{obj_ref.ref}'",
                            obj_ref.ref,
                        )

    for obj in log.objects:
        if obj.id not in referenced_objects:
            report.warn(
                UNREFERENCED_OBJECT,
                f"object '{obj.id}' is never referenced by a step instance",
                obj.id,
            )

    return report


def require_valid(log: XelLog) -> None:
    """Raise :class:`InvalidLogError` unless the log validates cleanly."""
    report = validate(log)
    if not report.ok:
        raise InvalidLogError(report)
