"""XEL 1.0 XML reading and writing.

The document layout is fixed:

.. code-block:: xml

    <xel version="1.0">
      <meta>
        <process id name>
          <activity id name>
            <step id name ordinal/>
          </activity>
          <objectClass id name/>
        </process>
      </meta>
      <instances>
        <objects>
          <object id classRef>
            <attr key value/>
          </object>
        </objects>
        <case id processRef>
          <event id activityRef start end>
            <stepInstance id stepRef timestamp>
              <objectRef ref role/>
            </stepInstance>
          </event>
        </case>
      </instances>
    </xel>

Parsing is strict by default: unknown elements or attributes are schema
errors. With ``lenient=True`` they are skipped and reported as warnings on
the returned log. Writing is deterministic byte-for-byte: elements in model
order, attributes in the order shown above, timestamps in UTC with a ``Z``
suffix.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from datetime import datetime, timezone
from xml.sax.saxutils import quoteattr

from .errors import InvalidLogError, XelSchemaError, XelSyntaxError
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
from .validation import UNKNOWN_ATTRIBUTE, UNKNOWN_ELEMENT, Finding, validate

XEL_VERSION = "1.0"


# -- timestamps --------------------------------------------------------------

def parse_timestamp(text: str, path: str = "") -> datetime:
    """Parse an ISO-8601 timestamp and normalize it to UTC.

    Accepts a ``Z`` suffix or a numeric offset; an offset-free timestamp is
    rejected because it cannot round-trip deterministically.
    """
    raw = text.strip()
    candidate = raw[:-1] + "+00:00" if raw.endswith(("Z", "z")) else raw
    try:
        value = datetime.fromisoformat(candidate)
    except ValueError:
        raise XelSchemaError(f"invalid timestamp {text!r}", path) from None
    if value.tzinfo is None:
        raise XelSchemaError(f"timestamp {text!r} has no UTC offset", path)
    return value.astimezone(timezone.utc)


def format_timestamp(value: datetime) -> str:
    """Render a timestamp as ISO-8601 UTC with a ``Z`` suffix.

    Naive datetimes are taken to be UTC. Fractional seconds are written at
    millisecond precision when that is exact, at microsecond precision
    otherwise, so writing never loses what parsing produced.
    """
    if value.tzinfo is None:
        value = value.replace(tzinfo=timezone.utc)
    value = value.astimezone(timezone.utc)
    base = value.strftime("%Y-%m-%dT%H:%M:%S")
    if value.microsecond == 0:
        return base + "Z"
    if value.microsecond % 1000 == 0:
        return f"{base}.{value.microsecond // 1000:03d}Z"
    return f"{base}.{value.microsecond:06d}Z"


# -- parsing -----------------------------------------------------------------

class _Reader:
    """Strict walker over the parsed element tree."""

    def __init__(self, lenient: bool):
        self.lenient = lenient
        self.warnings: list[Finding] = []

    def fail_or_warn(self, code: str, message: str, path: str) -> None:
        if not self.lenient:
            raise XelSchemaError(message, path)
        self.warnings.append(Finding(code, f"{message} (at {path})", path))

    def attrs(self, elem: ET.Element, path: str, required: list[str],
              optional: list[str] = ()) -> dict[str, str]:
        values = {}
        for key in elem.attrib:
            if key not in required and key not in optional:
                self.fail_or_warn(UNKNOWN_ATTRIBUTE, f"unknown attribute {key!r}", path)
        for key in required:
            if key not in elem.attrib:
                raise XelSchemaError(f"missing required attribute {key!r}", path)
            values[key] = elem.attrib[key]
        for key in optional:
            if key in elem.attrib:
                values[key] = elem.attrib[key]
        return values

    def children(self, elem: ET.Element, path: str, allowed: list[str]) -> list[ET.Element]:
        if elem.text and elem.text.strip():
            self.fail_or_warn(UNKNOWN_ELEMENT, "unexpected text content", path)
        kept = []
        for child in elem:
            if child.tail and child.tail.strip():
                self.fail_or_warn(UNKNOWN_ELEMENT, "unexpected text content", path)
            if child.tag not in allowed:
                self.fail_or_warn(UNKNOWN_ELEMENT, f"unknown element <{child.tag}>", path)
                continue
            kept.append(child)
        return kept

    def ordinal(self, text: str, path: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise XelSchemaError(f"ordinal {text!r} is not an integer", path) from None
        if value < 1:
            raise XelSchemaError(f"ordinal must be >= 1, got {value}", path)
        return value


def parse_xel(data: bytes | str, *, lenient: bool = False, check: bool = True) -> XelLog:
    """Parse an XEL document into a :class:`XelLog`.

    With ``check=True`` (the default) the log is validated and any
    error-level finding raises :class:`InvalidLogError`; warnings are
    attached to the returned log. ``check=False`` skips validation so a
    structurally parseable but broken log can still be inspected.
    """
    if isinstance(data, str):
        data = data.encode("utf-8")
    try:
        root = ET.fromstring(data)
    except ET.ParseError as exc:
        line, column = exc.position if exc.position else (None, None)
        raise XelSyntaxError(exc.msg.split(":")[0] if exc.msg else "malformed XML",
                             line, column) from None

    reader = _Reader(lenient)
    if root.tag != "xel":
        raise XelSchemaError(f"root element must be <xel>, got <{root.tag}>", "/")
    root_attrs = reader.attrs(root, "/xel", ["version"])
    if root_attrs["version"] != XEL_VERSION:
        raise XelSchemaError(f"unsupported version {root_attrs['version']!r}", "/xel")

    meta_elem = None
    instances_elem = None
    for child in reader.children(root, "/xel", ["meta", "instances"]):
        if child.tag == "meta":
            if meta_elem is not None:
                raise XelSchemaError("more than one <meta> element", "/xel")
            meta_elem = child
        else:
            if instances_elem is not None:
                raise XelSchemaError("more than one <instances> element", "/xel")
            instances_elem = child
    if meta_elem is None:
        raise XelSchemaError("missing <meta> element", "/xel")
    if instances_elem is None:
        raise XelSchemaError("missing <instances> element", "/xel")

    meta = _read_meta(reader, meta_elem)
    objects, cases = _read_instances(reader, instances_elem)
    log = XelLog(meta=meta, cases=cases, objects=objects, warnings=tuple(reader.warnings))

    if check:
        report = validate(log)
        if not report.ok:
            raise InvalidLogError(report)
        log = XelLog(
            meta=meta,
            cases=cases,
            objects=objects,
            warnings=tuple(reader.warnings) + tuple(report.warnings),
        )
    return log


def _read_meta(reader: _Reader, elem: ET.Element) -> MetaModel:
    processes = []
    for proc_elem in reader.children(elem, "/xel/meta", ["process"]):
        attrs = reader.attrs(proc_elem, "/xel/meta/process", ["id", "name"])
        path = f"/xel/meta/process[{attrs['id']}]"
        activities = []
        classes = []
        for child in reader.children(proc_elem, path, ["activity", "objectClass"]):
            if child.tag == "activity":
                activities.append(_read_activity(reader, child, path))
            else:
                cls_attrs = reader.attrs(child, f"{path}/objectClass", ["id", "name"])
                classes.append(ObjectClassDef(cls_attrs["id"], cls_attrs["name"]))
        processes.append(
            ProcessDef(attrs["id"], attrs["name"], tuple(activities), tuple(classes))
        )
    return MetaModel(tuple(processes))


def _read_activity(reader: _Reader, elem: ET.Element, parent_path: str) -> ActivityDef:
    attrs = reader.attrs(elem, f"{parent_path}/activity", ["id", "name"])
    path = f"{parent_path}/activity[{attrs['id']}]"
    steps = []
    for step_elem in reader.children(elem, path, ["step"]):
        step_attrs = reader.attrs(step_elem, f"{path}/step", ["id", "name", "ordinal"])
        reader.children(step_elem, f"{path}/step[{step_attrs['id']}]", [])
        steps.append(
            StepDef(
                step_attrs["id"],
                step_attrs["name"],
                reader.ordinal(step_attrs["ordinal"], f"{path}/step[{step_attrs['id']}]"),
            )
        )
    return ActivityDef(attrs["id"], attrs["name"], tuple(steps))


def _read_instances(
    reader: _Reader, elem: ET.Element
) -> tuple[tuple[BusinessObject, ...], tuple[Case, ...]]:
    objects: list[BusinessObject] = []
    cases: list[Case] = []
    objects_seen = False
    for child in reader.children(elem, "/xel/instances", ["objects", "case"]):
        if child.tag == "objects":
            if objects_seen:
                raise XelSchemaError("more than one <objects> element", "/xel/instances")
            objects_seen = True
            objects.extend(_read_objects(reader, child))
        else:
            cases.append(_read_case(reader, child))
    return tuple(objects), tuple(cases)


def _read_objects(reader: _Reader, elem: ET.Element) -> list[BusinessObject]:
    objects = []
    for obj_elem in reader.children(elem, "/xel/instances/objects", ["object"]):
        attrs = reader.attrs(obj_elem, "/xel/instances/objects/object", ["id", "classRef"])
        path = f"/xel/instances/objects/object[{attrs['id']}]"
        attributes: dict[str, str] = {}
        for attr_elem in reader.children(obj_elem, path, ["attr"]):
            kv = reader.attrs(attr_elem, f"{path}/attr", ["key", "value"])
            reader.children(attr_elem, f"{path}/attr", [])
            attributes[kv["key"]] = kv["value"]
        objects.append(BusinessObject(attrs["id"], attrs["classRef"], attributes))
    return objects


def _read_case(reader: _Reader, elem: ET.Element) -> Case:
    attrs = reader.attrs(elem, "/xel/instances/case", ["id", "processRef"])
    path = f"/xel/instances/case[{attrs['id']}]"
    events = []
    for event_elem in reader.children(elem, path, ["event"]):
        ev_attrs = reader.attrs(
            event_elem, f"{path}/event", ["id", "activityRef", "start", "end"]
        )
        ev_path = f"{path}/event[{ev_attrs['id']}]"
        instances = []
        for si_elem in reader.children(event_elem, ev_path, ["stepInstance"]):
            si_attrs = reader.attrs(
                si_elem, f"{ev_path}/stepInstance", ["id", "stepRef", "timestamp"]
            )
            si_path = f"{ev_path}/stepInstance[{si_attrs['id']}]"
            refs = []
            for ref_elem in reader.children(si_elem, si_path, ["objectRef"]):
                ref_attrs = reader.attrs(ref_elem, f"{si_path}/objectRef", ["ref", "role"])
                reader.children(ref_elem, f"{si_path}/objectRef", [])
                refs.append(ObjectRef(ref_attrs["ref"], ref_attrs["role"]))
            instances.append(
                StepInstance(
                    si_attrs["id"],
                    si_attrs["stepRef"],
                    parse_timestamp(si_attrs["timestamp"], si_path),
                    tuple(refs),
                )
            )
        events.append(
            Event(
                ev_attrs["id"],
                ev_attrs["activityRef"],
                parse_timestamp(ev_attrs["start"], ev_path),
                parse_timestamp(ev_attrs["end"], ev_path),
                tuple(instances),
            )
        )
    return Case(attrs["id"], attrs["processRef"], tuple(events))


# -- writing -----------------------------------------------------------------

def _tag(name: str, attrs: list[tuple[str, str]], close: bool = False) -> str:
    rendered = " ".join(f"{key}={quoteattr(value)}" for key, value in attrs)
    body = f"{name} {rendered}" if rendered else name
    return f"<{body}/>" if close else f"<{body}>"


def write_xel(log: XelLog) -> bytes:
    """Serialize a valid log to canonical XEL bytes.

    Output is deterministic: the same log always yields identical bytes,
    and ``parse_xel(write_xel(log))`` equals ``log``.
    """
    report = validate(log)
    if not report.ok:
        raise InvalidLogError(report)

    lines: list[str] = ['<?xml version="1.0" encoding="UTF-8"?>']
    lines.append(_tag("xel", [("version", XEL_VERSION)]))
    _write_meta(lines, log.meta)
    _write_instances(lines, log)
    lines.append("</xel>")
    return ("\n".join(lines) + "\n").encode("utf-8")


def _write_meta(lines: list[str], meta: MetaModel) -> None:
    if not meta.processes:
        lines.append("  <meta/>")
        return
    lines.append("  <meta>")
    for process in meta.processes:
        attrs = [("id", process.id), ("name", process.name)]
        if not process.activities and not process.object_classes:
            lines.append(f"    {_tag('process', attrs, close=True)}")
            continue
        lines.append(f"    {_tag('process', attrs)}")
        for activity in process.activities:
            act_attrs = [("id", activity.id), ("name", activity.name)]
            if not activity.steps:
                lines.append(f"      {_tag('activity', act_attrs, close=True)}")
                continue
            lines.append(f"      {_tag('activity', act_attrs)}")
            for step in activity.steps:
                lines.append(
                    "        "
                    + _tag(
                        "step",
                        [("id", step.id), ("name", step.name), ("ordinal", str(step.ordinal))],
                        close=True,
                    )
                )
            lines.append("      </activity>")
        for cls in process.object_classes:
            lines.append(
                f"      {_tag('objectClass', [('id', cls.id), ('name', cls.name)], close=True)}"
            )
        lines.append("    </process>")
    lines.append("  </meta>")


def _write_instances(lines: list[str], log: XelLog) -> None:
    if not log.objects and not log.cases:
        lines.append("  <instances/>")
        return
    lines.append("  <instances>")
    if log.objects:
        lines.append("    <objects>")
        for obj in log.objects:
            attrs = [("id", obj.id), ("classRef", obj.class_ref)]
            if not obj.attributes:
                lines.append(f"      {_tag('object', attrs, close=True)}")
                continue
            lines.append(f"      {_tag('object', attrs)}")
            for key, value in obj.attributes.items():
                lines.append(
                    f"        {_tag('attr', [('key', key), ('value', value)], close=True)}"
                )
            lines.append("      </object>")
        lines.append("    </objects>")
    for case in log.cases:
        case_attrs = [("id", case.id), ("processRef", case.process_ref)]
        if not case.events:
            lines.append(f"    {_tag('case', case_attrs, close=True)}")
            continue
        lines.append(f"    {_tag('case', case_attrs)}")
        for event in case.events:
            _write_event(lines, event)
        lines.append("    </case>")
    lines.append("  </instances>")


def _write_event(lines: list[str], event: Event) -> None:
    attrs = [
        ("id", event.id),
        ("activityRef", event.activity_ref),
        ("start", format_timestamp(event.start)),
        ("end", format_timestamp(event.end)),
    ]
    if not event.step_instances:
        lines.append(f"      {_tag('event', attrs, close=True)}")
        return
    lines.append(f"      {_tag('event', attrs)}")
    for instance in event.step_instances:
        si_attrs = [
            ("id", instance.id),
            ("stepRef", instance.step_ref),
            ("timestamp", format_timestamp(instance.timestamp)),
        ]
        if not instance.object_refs:
            lines.append(f"        {_tag('stepInstance', si_attrs, close=True)}")
            continue
        lines.append(f"        {_tag('stepInstance', si_attrs)}")
        for ref in instance.object_refs:
            lines.append(
                f"          {_tag('objectRef', [('ref', ref.ref), ('role', ref.role)], close=True)}"
            )
        lines.append("        </stepInstance>")
    lines.append("      </event>")
