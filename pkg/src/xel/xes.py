"""XES import: lift a flat single-case log into the two-level model.

Lifting rules:

* one synthetic process holds everything;
* each distinct event name becomes an activity with a single synthetic
  step (ordinal 1, same name), so step-granularity operations stay total;
* each trace becomes a case, each event an instantaneous event
  (``start == end == timestamp``) carrying one step instance;
* ``org:resource`` values become business objects of a "Resource" class,
  deduplicated by name and referenced with role "performer".
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from datetime import timezone
from datetime import datetime

from .errors import XelSyntaxError, XesImportError
from .model import (
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

PROCESS_ID = "xes"
RESOURCE_CLASS_ID = "resource"


def _local(tag: str) -> str:
    return tag.rsplit("}", 1)[-1]


def _xes_attributes(elem: ET.Element) -> dict[str, str]:
    """Key/value pairs of the direct attribute children of an XES element."""
    values: dict[str, str] = {}
    for child in elem:
        key = child.get("key")
        value = child.get("value")
        if key is not None and value is not None:
            values.setdefault(key, value)
    return values


def _parse_xes_timestamp(text: str, where: str) -> datetime:
    raw = text.strip()
    candidate = raw[:-1] + "+00:00" if raw.endswith(("Z", "z")) else raw
    try:
        value = datetime.fromisoformat(candidate)
    except ValueError:
        raise XesImportError(f"invalid timestamp {text!r} in {where}") from None
    if value.tzinfo is None:
        # XES exporters sometimes omit the offset; read such stamps as UTC.
        value = value.replace(tzinfo=timezone.utc)
    return value.astimezone(timezone.utc)


def _valid_id(identifier: str) -> bool:
    return bool(identifier) and not any(ch.isspace() for ch in identifier)


def import_xes(data: bytes | str) -> XelLog:
    """Convert an XES document (concept + time extensions) to a log."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    try:
        root = ET.fromstring(data)
    except ET.ParseError as exc:
        line, column = exc.position if exc.position else (None, None)
        raise XelSyntaxError(exc.msg.split(":")[0] if exc.msg else "malformed XML",
                             line, column) from None
    if _local(root.tag) != "log":
        raise XesImportError(f"root element must be <log>, got <{_local(root.tag)}>")

    log_attrs = _xes_attributes(root)
    process_name = log_attrs.get("concept:name", "XES import")

    activities: dict[str, ActivityDef] = {}  # event name -> definition
    resources: dict[str, BusinessObject] = {}  # resource name -> object
    cases: list[Case] = []
    case_ids: set[str] = set()
    event_counter = 0

    for index, trace in enumerate(elem for elem in root if _local(elem.tag) == "trace"):
        trace_attrs = _xes_attributes(trace)
        trace_name = trace_attrs.get("concept:name", "")
        case_id = trace_name if _valid_id(trace_name) and trace_name not in case_ids else f"trace{index + 1}"
        case_ids.add(case_id)

        events = []
        for event_elem in (elem for elem in trace if _local(elem.tag) == "event"):
            attrs = _xes_attributes(event_elem)
            name = attrs.get("concept:name")
            if name is None:
                raise XesImportError(f"event without concept:name in trace '{case_id}'")
            stamp_text = attrs.get("time:timestamp")
            if stamp_text is None:
                raise XesImportError(
                    f"event '{name}' in trace '{case_id}' has no time:timestamp"
                )
            timestamp = _parse_xes_timestamp(stamp_text, f"trace '{case_id}'")

            activity = activities.get(name)
            if activity is None:
                activity_id = f"a{len(activities) + 1}"
                activity = ActivityDef(
                    activity_id, name, (StepDef(f"{activity_id}_s1", name, 1),)
                )
                activities[name] = activity

            refs: tuple[ObjectRef, ...] = ()
            resource = attrs.get("org:resource")
            if resource is not None:
                obj = resources.get(resource)
                if obj is None:
                    obj = BusinessObject(
                        f"r{len(resources) + 1}", RESOURCE_CLASS_ID, {"name": resource}
                    )
                    resources[resource] = obj
                refs = (ObjectRef(obj.id, "performer"),)

            event_counter += 1
            event_id = f"e{event_counter}"
            events.append(
                Event(
                    event_id,
                    activity.id,
                    timestamp,
                    timestamp,
                    (StepInstance(f"{event_id}_s1", activity.steps[0].id, timestamp, refs),),
                )
            )
        cases.append(Case(case_id, PROCESS_ID, tuple(events)))

    object_classes = (
        (ObjectClassDef(RESOURCE_CLASS_ID, "Resource"),) if resources else ()
    )
    process = ProcessDef(
        PROCESS_ID, process_name, tuple(activities.values()), object_classes
    )
    return XelLog(
        meta=MetaModel((process,)),
        cases=tuple(cases),
        objects=tuple(resources.values()),
    )
