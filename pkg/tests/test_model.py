import dataclasses

import pytest

from xel.model import ActivityDef, StepDef

from helpers import tiny_log, ts


def test_collections_are_tuples_even_from_lists():
    activity = ActivityDef("A", "Alpha", [StepDef("s1", "one", 1)])
    assert isinstance(activity.steps, tuple)


def test_frozen():
    log = tiny_log()
    with pytest.raises(dataclasses.FrozenInstanceError):
        log.cases = ()


def test_meta_indexes():
    log = tiny_log()
    meta = log.meta
    assert meta.process_by_id["P1"].name == "Tiny"
    assert meta.activity_by_id["A"].name == "Alpha task"
    assert meta.activity_owner["A"] == "P1"
    assert meta.step_by_id["A_s1"].ordinal == 1
    assert meta.step_owner["A_s1"] == "A"
    assert meta.object_class_by_id["user"].name == "User"


def test_instance_indexes_and_counts():
    log = tiny_log()
    assert log.case_by_id["K1"].process_ref == "P1"
    case, event = log.event_by_id["E2"]
    assert case.id == "K1" and event.activity_ref == "B"
    assert log.object_by_id["u1"].attributes == {"name": "Ada"}
    assert log.total_events == 2
    assert log.total_step_instances == 1
    assert [event.id for _, event in log.iter_events()] == ["E1", "E2"]


def test_steps_by_ordinal_sorts():
    activity = ActivityDef(
        "A", "Alpha", (StepDef("s2", "two", 2), StepDef("s1", "one", 1))
    )
    assert [s.id for s in activity.steps_by_ordinal] == ["s1", "s2"]


def test_warnings_do_not_affect_equality():
    from xel.validation import Finding

    log = tiny_log()
    tagged = dataclasses.replace(log, warnings=(Finding("X", "msg", "e"),))
    assert tagged == log


def test_equality_is_structural():
    assert tiny_log() == tiny_log()
    assert ts(0) == ts(0)
