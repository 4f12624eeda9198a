import type { ApiClient } from "./api.js";
import type { Granularity, NetJson, RouteJson } from "./types.js";

export interface ViewState {
  granularity: Granularity;
  net: NetJson | null;
  selectedTransition: string | null;
  selectedCase: string | null;
  route: RouteJson | null;
}

/**
 * Holds what is loaded and selected. Every async load is tagged with a
 * sequence number; a response whose tag is no longer current is dropped, so
 * a superseded selection can never overwrite a newer one. Switching
 * granularity resets all selection state.
 */
export class ViewStore {
  state: ViewState = {
    granularity: "activity",
    net: null,
    selectedTransition: null,
    selectedCase: null,
    route: null,
  };

  private seq = 0;

  constructor(
    private readonly api: ApiClient,
    private readonly onChange: (state: ViewState) => void
  ) {}

  private commit(state: ViewState): void {
    this.state = state;
    this.onChange(state);
  }

  async loadModel(granularity: Granularity): Promise<void> {
    const token = ++this.seq;
    const net = await this.api.model(granularity);
    if (token !== this.seq) return; // superseded
    this.commit({
      granularity,
      net,
      selectedTransition: null,
      selectedCase: null,
      route: null,
    });
  }

  async selectCase(caseId: string | null): Promise<void> {
    const token = ++this.seq;
    if (caseId === null) {
      this.commit({ ...this.state, selectedCase: null, route: null });
      return;
    }
    const route = await this.api.caseRoute(caseId, this.state.granularity);
    if (token !== this.seq) return;
    this.commit({ ...this.state, selectedCase: caseId, route });
  }

  /** Toggle-style: selecting the already-selected case deselects it. */
  async toggleCase(caseId: string): Promise<void> {
    await this.selectCase(this.state.selectedCase === caseId ? null : caseId);
  }

  selectTransition(transitionId: string | null): void {
    this.commit({ ...this.state, selectedTransition: transitionId });
  }
}
