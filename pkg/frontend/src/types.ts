// Wire types of the log service API.

export type Granularity = "activity" | "step";

export interface StepDefJson {
  id: string;
  name: string;
  ordinal: number;
}

export interface NetNode {
  id: string;
  kind: "place" | "transition";
  label: string;
  steps?: StepDefJson[];
}

export interface NetArc {
  from: string;
  to: string;
}

export interface NetJson {
  nodes: NetNode[];
  arcs: NetArc[];
  initial: string;
  final: string;
}

export interface DeviationJson {
  position: number;
  label: string;
  kind: "NOT_ENABLED" | "UNKNOWN_LABEL";
}

export interface RouteJson {
  caseId: string;
  fired: string[];
  visitedPlaces: string[];
  deviations: DeviationJson[];
  complete: boolean;
}

export interface CaseSummaryJson {
  caseId: string;
  length: number;
  complete: boolean;
}

export interface CaseEventJson {
  id: string;
  activity: string;
  start: string;
}

export interface LogSummaryJson {
  processes: number;
  cases: number;
  events: number;
  steps: number;
  objects: number;
}

export interface EventObjectJson {
  id: string;
  classId: string;
  className: string;
  role: string;
  attributes: Record<string, string>;
}

export interface EventStepJson {
  id: string;
  stepId: string;
  stepName: string;
  ordinal: number;
  timestamp: string;
  objects: EventObjectJson[];
}

export interface EventDetailJson {
  id: string;
  caseId: string;
  activity: { id: string; name: string };
  start: string;
  end: string;
  steps: EventStepJson[];
}
