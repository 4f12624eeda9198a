import random
import xml.etree.ElementTree as ET
from datetime import datetime, timezone

import pytest

from xel.errors import XesImportError
from xel.queries import project_classic
from xel.validation import validate
from xel.xes import import_xes

from helpers import random_xes, xes_document


def simple_xes():
    return xes_document(
        [
            ("case1", [("register", "2024-01-01T10:00:00+00:00", "alice"),
                       ("ship", "2024-01-01T11:00:00+00:00", "bob")]),
            ("case2", [("register", "2024-01-02T10:00:00+00:00", "alice")]),
        ]
    )


def test_lifting_shape():
    log = import_xes(simple_xes())
    assert len(log.meta.processes) == 1
    process = log.meta.processes[0]
    assert process.name == "generated log"
    assert [a.name for a in process.activities] == ["register", "ship"]
    assert all(len(a.steps) == 1 and a.steps[0].ordinal == 1 for a in process.activities)
    assert [c.id for c in log.cases] == ["case1", "case2"]
    assert [len(c.events) for c in log.cases] == [2, 1]
    for event in log.cases[0].events:
        assert event.start == event.end
        assert len(event.step_instances) == 1


def test_imported_log_validates():
    report = validate(import_xes(simple_xes()))
    assert report.errors == []


def test_resource_objects_deduplicated():
    log = import_xes(simple_xes())
    names = [obj.attributes["name"] for obj in log.objects]
    assert sorted(names) == ["alice", "bob"]
    alice = next(obj for obj in log.objects if obj.attributes["name"] == "alice")
    refs = [
        ref
        for case in log.cases
        for event in case.events
        for si in event.step_instances
        for ref in si.object_refs
    ]
    assert sum(1 for ref in refs if ref.ref == alice.id) == 2
    assert all(ref.role == "performer" for ref in refs)
    assert log.meta.processes[0].object_classes[0].name == "Resource"


def test_missing_name_and_timestamp():
    no_name = xes_document([("t1", [("x", "2024-01-01T00:00:00+00:00", None)])]).replace(
        b'<string key="concept:name" value="x"/>', b""
    )
    with pytest.raises(XesImportError) as excinfo:
        import_xes(no_name)
    assert "t1" in str(excinfo.value)

    no_stamp = xes_document([("t1", [("x", "2024-01-01T00:00:00+00:00", None)])]).replace(
        b'<date key="time:timestamp" value="2024-01-01T00:00:00+00:00"/>', b""
    )
    with pytest.raises(XesImportError):
        import_xes(no_stamp)


def test_naive_xes_timestamp_read_as_utc():
    doc = xes_document([("t1", [("x", "2024-01-01T05:00:00", None)])])
    log = import_xes(doc)
    assert log.cases[0].events[0].start == datetime(2024, 1, 1, 5, tzinfo=timezone.utc)


def test_invalid_trace_names_replaced():
    doc = xes_document([("has space", [("x", "2024-01-01T00:00:00+00:00", None)])])
    log = import_xes(doc)
    assert log.cases[0].id == "trace1"


def test_classic_projection_matches_direct_scan():
    data = random_xes(random.Random(11), n_traces=20)
    log = import_xes(data)
    rows = [(r.case_id, r.activity, r.start) for r in project_classic(log)]

    # Independent scan of the same document.
    root = ET.fromstring(data)
    expected = []
    for trace in root:
        if not trace.tag.endswith("trace"):
            continue
        name = next(
            child.get("value")
            for child in trace
            if child.get("key") == "concept:name"
        )
        for event in (child for child in trace if child.tag.endswith("event")):
            attrs = {child.get("key"): child.get("value") for child in event}
            stamp = datetime.fromisoformat(attrs["time:timestamp"]).astimezone(timezone.utc)
            expected.append((name, attrs["concept:name"], stamp))
    assert rows == expected
    assert log.total_events == len(expected)
