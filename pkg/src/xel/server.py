"""Read-only HTTP service over one loaded log.

The log is parsed and validated once at startup and never re-read. Mined
models are cached per granularity behind a lock, so at most one miner run
happens per granularity and every request observes the same result. All
error bodies carry ``code`` and ``message``.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from fastapi import FastAPI
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles
from starlette.exceptions import HTTPException as StarletteHTTPException

from .discovery import GRANULARITIES, TraceLog, alpha_miner, build_traces
from .errors import NotFoundError, XelError
from .model import XelLog
from .petri import PetriNet
from .queries import detail_of_event, ordered_events, steps_of_activity
from .render import net_to_json, route_to_json
from .replay import Route, replay_all
from .xml_io import format_timestamp, parse_xel


@dataclass(frozen=True)
class MinedModel:
    traces: TraceLog
    net: PetriNet
    net_json: dict[str, Any]
    routes: dict[str, Route]


class ModelCache:
    """Write-once per-granularity cache of mined models and replays."""

    def __init__(self, log: XelLog):
        self._log = log
        self._lock = threading.Lock()
        self._mined: dict[str, MinedModel] = {}

    def get(self, granularity: str) -> MinedModel:
        with self._lock:
            mined = self._mined.get(granularity)
            if mined is None:
                traces = build_traces(self._log, granularity)
                net = alpha_miner(traces)
                summary = replay_all(net, traces)
                mined = MinedModel(
                    traces,
                    net,
                    net_to_json(net, traces, self._log),
                    {route.case_id: route for route in summary.routes},
                )
                self._mined[granularity] = mined
            return mined


def _error(status: int, code: str, message: str) -> JSONResponse:
    return JSONResponse({"code": code, "message": message}, status_code=status)


def create_app(log: XelLog, ui_dir: str | Path | None = None) -> FastAPI:
    """Build the API application for one immutable log."""
    app = FastAPI(title="xel", docs_url=None, redoc_url=None)
    cache = ModelCache(log)

    @app.exception_handler(NotFoundError)
    async def not_found(request, exc: NotFoundError):
        return _error(404, exc.code, str(exc))

    @app.exception_handler(XelError)
    async def xel_error(request, exc: XelError):
        return _error(400, exc.code, str(exc))

    @app.exception_handler(StarletteHTTPException)
    async def http_error(request, exc: StarletteHTTPException):
        codes = {400: "BAD_REQUEST", 404: "NOT_FOUND", 405: "METHOD_NOT_ALLOWED"}
        message = exc.detail if isinstance(exc.detail, str) else "request failed"
        return _error(exc.status_code, codes.get(exc.status_code, "HTTP_ERROR"), message)

    @app.exception_handler(RequestValidationError)
    async def bad_request(request, exc: RequestValidationError):
        return _error(400, "BAD_REQUEST", str(exc.errors()))

    def checked_granularity(value: str) -> str:
        if value not in GRANULARITIES:
            raise RequestValidationError(
                [{"msg": f"granularity must be one of {GRANULARITIES}, got {value!r}"}]
            )
        return value

    @app.get("/api/summary")
    def summary() -> dict[str, int]:
        return {
            "processes": len(log.meta.processes),
            "cases": len(log.cases),
            "events": log.total_events,
            "steps": log.total_step_instances,
            "objects": len(log.objects),
        }

    @app.get("/api/model")
    def model(granularity: str = "activity") -> Any:
        return cache.get(checked_granularity(granularity)).net_json

    @app.get("/api/activities/{activity_id}/steps")
    def activity_steps(activity_id: str) -> Any:
        steps = steps_of_activity(log, activity_id)
        return [{"id": s.id, "name": s.name, "ordinal": s.ordinal} for s in steps]

    @app.get("/api/events/{event_id}")
    def event_detail(event_id: str) -> Any:
        detail = detail_of_event(log, event_id)
        return {
            "id": detail.event.id,
            "caseId": detail.case_id,
            "activity": {"id": detail.activity.id, "name": detail.activity.name},
            "start": format_timestamp(detail.event.start),
            "end": format_timestamp(detail.event.end),
            "steps": [
                {
                    "id": step.instance.id,
                    "stepId": step.step.id,
                    "stepName": step.step.name,
                    "ordinal": step.step.ordinal,
                    "timestamp": format_timestamp(step.instance.timestamp),
                    "objects": [
                        {
                            "id": ref.obj.id,
                            "classId": ref.obj.class_ref,
                            "className": ref.class_name,
                            "role": ref.role,
                            "attributes": dict(ref.obj.attributes),
                        }
                        for ref in step.objects
                    ],
                }
                for step in detail.steps
            ],
        }

    @app.get("/api/cases")
    def cases() -> Any:
        mined = cache.get("activity")
        return [
            {
                "caseId": case.id,
                "length": len(case.events),
                "complete": mined.routes[case.id].conforms,
            }
            for case in log.cases
        ]

    @app.get("/api/cases/{case_id}/events")
    def case_events(case_id: str) -> Any:
        case = log.case_by_id.get(case_id)
        if case is None:
            raise NotFoundError("case", case_id)
        return [
            {
                "id": event.id,
                "activity": event.activity_ref,
                "start": format_timestamp(event.start),
            }
            for event in ordered_events(case)
        ]

    @app.get("/api/cases/{case_id}/route")
    def case_route(case_id: str, granularity: str = "activity") -> Any:
        mined = cache.get(checked_granularity(granularity))
        route = mined.routes.get(case_id)
        if route is None:
            raise NotFoundError("case", case_id)
        return route_to_json(route)

    if ui_dir is not None:
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def serve(log_path: str | Path, port: int, ui_dir: str | Path | None = None) -> None:
    """Parse and validate a log file, then serve it until interrupted."""
    import uvicorn

    data = Path(log_path).read_bytes()
    log = parse_xel(data)
    app = create_app(log, ui_dir=ui_dir)
    uvicorn.run(app, host="127.0.0.1", port=port)
