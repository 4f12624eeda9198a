"""Two-level event log toolkit: parse, validate, discover, replay, serve."""

from .discovery import (
    Dfg,
    Footprint,
    LabelInfo,
    Relation,
    Trace,
    TraceLog,
    alpha_miner,
    build_traces,
    dfg,
    footprint,
)
from .errors import (
    AlphabetTooLargeError,
    EmptyLogError,
    InvalidLogError,
    NotFoundError,
    XelError,
    XelSchemaError,
    XelSyntaxError,
    XesImportError,
)
from .flatten import export_csv
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
from .petri import Place, PetriNet
from .queries import detail_of_event, project_classic, steps_of_activity
from .render import export_dot, net_to_json, route_to_json
from .replay import Deviation, ReplaySummary, Route, replay_all, replay_case
from .validation import Finding, ValidationReport, validate
from .xes import import_xes
from .xml_io import format_timestamp, parse_timestamp, parse_xel, write_xel

__version__ = "0.1.0"

__all__ = [
    "ActivityDef",
    "AlphabetTooLargeError",
    "BusinessObject",
    "Case",
    "Deviation",
    "Dfg",
    "EmptyLogError",
    "Event",
    "Finding",
    "Footprint",
    "InvalidLogError",
    "LabelInfo",
    "MetaModel",
    "NotFoundError",
    "ObjectClassDef",
    "ObjectRef",
    "PetriNet",
    "Place",
    "ProcessDef",
    "Relation",
    "ReplaySummary",
    "Route",
    "StepDef",
    "StepInstance",
    "Trace",
    "TraceLog",
    "ValidationReport",
    "XelError",
    "XelLog",
    "XelSchemaError",
    "XelSyntaxError",
    "XesImportError",
    "alpha_miner",
    "build_traces",
    "detail_of_event",
    "dfg",
    "export_csv",
    "export_dot",
    "footprint",
    "format_timestamp",
    "import_xes",
    "net_to_json",
    "parse_timestamp",
    "parse_xel",
    "project_classic",
    "replay_all",
    "replay_case",
    "route_to_json",
    "steps_of_activity",
    "validate",
    "write_xel",
]
