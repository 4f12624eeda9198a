import type { ApiClient } from "./api.js";
import type {
  CaseSummaryJson,
  EventDetailJson,
  Granularity,
  NetNode,
} from "./types.js";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

/**
 * Side panel for a clicked transition: the task's step definitions in
 * ordinal order, plus (when a case is selected at activity granularity) the
 * concrete step instances of that case with their business objects.
 */
export class StepsPanel {
  private token = 0;

  constructor(private readonly root: HTMLElement, private readonly api: ApiClient) {
    this.clear();
  }

  clear(): void {
    this.token++;
    this.root.textContent = "";
    this.root.appendChild(el("p", "hint", "Click a transition to see its task steps."));
  }

  showPlace(placeId: string): void {
    this.token++;
    this.root.textContent = "";
    this.root.appendChild(el("h2", undefined, "Place"));
    this.root.appendChild(el("p", "mono", placeId));
  }

  async showTransition(
    node: NetNode,
    granularity: Granularity,
    selectedCase: string | null
  ): Promise<void> {
    const token = ++this.token;
    this.root.textContent = "";
    this.root.appendChild(el("h2", undefined, node.label || node.id));

    const steps = node.steps ?? [];
    if (granularity === "activity" && steps.length === 0) {
      this.root.appendChild(el("p", "hint", "Atomic task: no recorded steps."));
    } else if (steps.length > 0) {
      const list = el("ol", "steps");
      for (const step of [...steps].sort((a, b) => a.ordinal - b.ordinal)) {
        const item = el("li", "step-def", step.name);
        item.dataset.stepId = step.id;
        list.appendChild(item);
      }
      this.root.appendChild(list);
    }

    if (granularity !== "activity") {
      this.root.appendChild(
        el("p", "hint", "Switch to activity granularity for instance drill-down.")
      );
      return;
    }
    if (selectedCase === null) {
      this.root.appendChild(
        el("p", "hint", "Select a case to see who executed these steps.")
      );
      return;
    }

    const loading = el("p", "hint", `Loading instances of case ${selectedCase}…`);
    this.root.appendChild(loading);
    try {
      const events = await this.api.caseEvents(selectedCase);
      const mine = events.filter((event) => event.activity === node.id);
      const details: EventDetailJson[] = [];
      for (const event of mine) {
        details.push(await this.api.eventDetail(event.id));
      }
      if (token !== this.token) return; // selection changed meanwhile
      loading.remove();
      if (details.length === 0) {
        this.root.appendChild(
          el("p", "hint", `Case ${selectedCase} never executed this task.`)
        );
        return;
      }
      for (const detail of details) {
        this.root.appendChild(this.renderInstance(detail));
      }
    } catch (error) {
      if (token !== this.token) return;
      loading.remove();
      const box = el("div", "panel-error");
      box.appendChild(el("p", undefined, `Could not load instance data: ${String(error)}`));
      const retry = el("button", "retry", "Retry");
      retry.addEventListener("click", () => {
        void this.showTransition(node, granularity, selectedCase);
      });
      box.appendChild(retry);
      this.root.appendChild(box);
    }
  }

  private renderInstance(detail: EventDetailJson): HTMLElement {
    const box = el("div", "instance");
    box.appendChild(
      el("h3", undefined, `Event ${detail.id} (${detail.start} → ${detail.end})`)
    );
    const list = el("ul", "instance-steps");
    for (const step of detail.steps) {
      const item = el("li", "step-instance");
      item.appendChild(el("span", "step-name", `${step.ordinal}. ${step.stepName}`));
      item.appendChild(el("span", "step-time", ` @ ${step.timestamp}`));
      if (step.objects.length > 0) {
        const objects = el("ul", "objects");
        for (const obj of step.objects) {
          const display =
            obj.attributes["name"] ?? obj.attributes["title"] ?? obj.id;
          objects.appendChild(
            el("li", "object", `${obj.className} ${display} as ${obj.role}`)
          );
        }
        item.appendChild(objects);
      }
      list.appendChild(item);
    }
    box.appendChild(list);
    return box;
  }
}

/** Clickable case list; clicking the selected case again deselects it. */
export class CasesPanel {
  constructor(
    private readonly root: HTMLElement,
    private readonly onToggle: (caseId: string) => void
  ) {}

  render(cases: CaseSummaryJson[], selected: string | null): void {
    this.root.textContent = "";
    this.root.appendChild(el("h2", undefined, "Cases"));
    const list = el("ul", "cases");
    for (const summary of cases) {
      const item = el("li", "case-row");
      item.dataset.caseId = summary.caseId;
      if (summary.caseId === selected) item.classList.add("selected");
      const badge = summary.complete ? "fits" : "deviates";
      item.textContent = `${summary.caseId} · ${summary.length} events · ${badge}`;
      item.addEventListener("click", () => this.onToggle(summary.caseId));
      list.appendChild(item);
    }
    this.root.appendChild(list);
  }
}

export function showBanner(root: HTMLElement, message: string): void {
  const banner = el("div", "banner error", message);
  root.prepend(banner);
}

export function showToast(root: HTMLElement, message: string): void {
  const toast = el("div", "toast", message);
  root.appendChild(toast);
  setTimeout(() => toast.remove(), 4000);
}
