import type {
  CaseEventJson,
  CaseSummaryJson,
  EventDetailJson,
  Granularity,
  LogSummaryJson,
  NetJson,
  RouteJson,
  StepDefJson,
} from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
  }
}

/** Thin typed wrapper over the read-only log service. */
export class ApiClient {
  constructor(private readonly base: string = "") {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(this.base + path);
    if (!response.ok) {
      let message = `HTTP ${response.status}`;
      try {
        const body = (await response.json()) as { message?: string; code?: string };
        if (body.message) message = body.message;
      } catch {
        // non-JSON error body; keep the status message
      }
      throw new ApiError(response.status, message);
    }
    return (await response.json()) as T;
  }

  summary(): Promise<LogSummaryJson> {
    return this.get("/api/summary");
  }

  model(granularity: Granularity): Promise<NetJson> {
    return this.get(`/api/model?granularity=${granularity}`);
  }

  activitySteps(activityId: string): Promise<StepDefJson[]> {
    return this.get(`/api/activities/${encodeURIComponent(activityId)}/steps`);
  }

  eventDetail(eventId: string): Promise<EventDetailJson> {
    return this.get(`/api/events/${encodeURIComponent(eventId)}`);
  }

  cases(): Promise<CaseSummaryJson[]> {
    return this.get("/api/cases");
  }

  caseEvents(caseId: string): Promise<CaseEventJson[]> {
    return this.get(`/api/cases/${encodeURIComponent(caseId)}/events`);
  }

  caseRoute(caseId: string, granularity: Granularity): Promise<RouteJson> {
    return this.get(
      `/api/cases/${encodeURIComponent(caseId)}/route?granularity=${granularity}`
    );
  }
}
