import { ApiClient, ApiError } from "./api.js";
import { layoutNet } from "./layout.js";
import { CasesPanel, StepsPanel, showBanner, showToast } from "./panels.js";
import { applyHighlight, renderNet } from "./render.js";
import { ViewStore } from "./state.js";
import type { ViewState } from "./state.js";
import type { CaseSummaryJson, Granularity } from "./types.js";

export interface App {
  store: ViewStore;
  root: HTMLElement;
  svg: SVGSVGElement;
  /** resolves once the initial model and case list are on screen */
  ready: Promise<void>;
}

/** Build the viewer inside `root` and start loading from the API. */
export function initApp(root: HTMLElement, api: ApiClient): App {
  root.innerHTML = `
    <header class="topbar">
      <h1>xel viewer</h1>
      <label class="granularity">granularity
        <select id="granularity">
          <option value="activity">activity</option>
          <option value="step">step</option>
        </select>
      </label>
      <span id="summary" class="summary"></span>
    </header>
    <main class="layout">
      <section class="net-pane"><svg id="net" role="img"></svg></section>
      <aside class="side">
        <div id="steps-panel" class="panel"></div>
        <div id="cases-panel" class="panel"></div>
      </aside>
    </main>
  `;

  const svg = root.querySelector<SVGSVGElement>("#net")!;
  const summaryEl = root.querySelector<HTMLElement>("#summary")!;
  const granularitySelect = root.querySelector<HTMLSelectElement>("#granularity")!;
  const stepsPanel = new StepsPanel(root.querySelector<HTMLElement>("#steps-panel")!, api);

  let cases: CaseSummaryJson[] = [];
  let renderedNet: ViewState["net"] = null;

  const casesPanel = new CasesPanel(root.querySelector<HTMLElement>("#cases-panel")!, (caseId) => {
    store.toggleCase(caseId).catch((error) => {
      if (error instanceof ApiError && error.status === 404) {
        showToast(root, `case not found: ${error.message}`);
        return; // selection state unchanged
      }
      showBanner(root, String(error));
    });
  });

  const store = new ViewStore(api, (state) => {
    if (state.net !== renderedNet && state.net !== null) {
      renderedNet = state.net;
      try {
        const layout = layoutNet(state.net);
        renderNet(svg, state.net, layout, {
          onNodeClick: (id, kind) => {
            if (kind === "transition") {
              store.selectTransition(id);
              const node = store.state.net?.nodes.find((n) => n.id === id);
              if (node) {
                void stepsPanel.showTransition(
                  node,
                  store.state.granularity,
                  store.state.selectedCase
                );
              }
            } else {
              stepsPanel.showPlace(id);
            }
          },
        });
      } catch (error) {
        showBanner(root, `cannot render model: ${String(error)}`);
        return;
      }
      stepsPanel.clear();
    }
    applyHighlight(svg, state.route);
    casesPanel.render(cases, state.selectedCase);
    // keep the steps panel's instance section in sync with case selection
    if (state.selectedTransition !== null) {
      const node = state.net?.nodes.find((n) => n.id === state.selectedTransition);
      if (node) {
        void stepsPanel.showTransition(node, state.granularity, state.selectedCase);
      }
    }
  });

  granularitySelect.addEventListener("change", () => {
    const granularity = granularitySelect.value as Granularity;
    store.loadModel(granularity).catch((error) => showBanner(root, String(error)));
  });

  const ready = (async () => {
    try {
      const summary = await api.summary();
      summaryEl.textContent =
        `${summary.processes} process(es) · ${summary.cases} cases · ` +
        `${summary.events} events · ${summary.steps} step instances · ` +
        `${summary.objects} objects`;
      cases = await api.cases();
      await store.loadModel("activity");
    } catch (error) {
      showBanner(root, `failed to load log: ${String(error)}`);
      throw error;
    }
  })();

  return { store, root, svg, ready };
}
