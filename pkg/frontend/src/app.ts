import type { ApiClient } from "./api";
import { debounce } from "./debounce";
import { SearchStore } from "./store";
import type { ApiResult, Department } from "./types";

const DEBOUNCE_MS = 300;

/**
 * The search console: input + facet row + result cards.
 *
 * Renders from the store on every change. Each card always shows the four
 * mandatory contact fields (name, phone, email, position title); the
 * "why?" toggle reveals matched concepts, the score breakdown (factor and
 * peer count included), and a profile block fetched from the employee
 * endpoint.
 */
export class App {
  private store: SearchStore;
  private departments: Department[] = [];
  private expanded = new Set<string>();
  private profiles = new Map<string, string>(); // employee_id -> rendered profile text

  constructor(
    private root: HTMLElement,
    private api: ApiClient,
  ) {
    this.store = new SearchStore(api);
    this.root.innerHTML = this.shell();
    this.bind();
    this.store.subscribe(() => this.render());
    this.render();
    void this.loadDepartments();
  }

  private shell(): string {
    return `
      <div class="console">
        <h1>Employee search</h1>
        <div class="error-banner" hidden>
          <span class="error-text"></span>
          <button type="button" class="retry">Retry</button>
        </div>
        <form class="search-form">
          <input class="query-input" type="text" autocomplete="off"
                 placeholder="Ask who is responsible for something..." />
          <button type="submit" class="submit" disabled>Search</button>
        </form>
        <nav class="facets"></nav>
        <div class="hints" hidden></div>
        <ul class="results"></ul>
        <p class="status"></p>
      </div>`;
  }

  private bind(): void {
    const input = this.q<HTMLInputElement>(".query-input");
    const debouncedSubmit = debounce(() => void this.store.submit(), DEBOUNCE_MS);
    input.addEventListener("input", () => {
      this.store.setQuery(input.value);
      if (this.store.canSubmit()) debouncedSubmit();
    });
    this.q<HTMLFormElement>(".search-form").addEventListener("submit", (event) => {
      event.preventDefault();
      void this.store.submit();
    });
    this.q<HTMLButtonElement>(".retry").addEventListener("click", () => {
      void this.store.submit();
    });
  }

  private async loadDepartments(): Promise<void> {
    try {
      this.departments = await this.api.departments();
    } catch {
      this.departments = []; // facet row degrades to "All"; search still works
    }
    this.renderFacets();
  }

  private renderFacets(): void {
    const nav = this.q<HTMLElement>(".facets");
    nav.innerHTML = "";
    const options: Array<[string | null, string]> = [
      [null, "All"],
      ...this.departments.map((d): [string | null, string] => [d.id, d.name]),
    ];
    for (const [id, label] of options) {
      const chip = document.createElement("button");
      chip.type = "button";
      chip.className = "facet";
      chip.dataset.dept = id ?? "";
      chip.textContent = label;
      if (this.store.state.selectedDepartment === id) chip.classList.add("selected");
      chip.addEventListener("click", () => this.store.setDepartment(id));
      nav.appendChild(chip);
    }
  }

  private render(): void {
    const state = this.store.state;
    this.q<HTMLButtonElement>(".submit").disabled = !this.store.canSubmit();

    const banner = this.q<HTMLElement>(".error-banner");
    banner.hidden = state.errorBanner === null;
    this.q<HTMLElement>(".error-text").textContent = state.errorBanner ?? "";

    this.renderFacets();

    const hints = this.q<HTMLElement>(".hints");
    const unknown = state.results?.unknown_terms ?? [];
    hints.hidden = unknown.length === 0;
    hints.innerHTML = "";
    if (unknown.length > 0) {
      hints.append("Not understood: ");
      for (const term of unknown) {
        const chip = document.createElement("span");
        chip.className = "hint-chip";
        chip.textContent = term;
        hints.appendChild(chip);
      }
    }

    const list = this.q<HTMLUListElement>(".results");
    list.innerHTML = "";
    for (const result of state.results?.results ?? []) {
      list.appendChild(this.card(result));
    }

    const status = this.q<HTMLElement>(".status");
    if (state.loading) {
      status.textContent = "Searching...";
    } else if (state.results) {
      const n = state.results.results.length;
      status.textContent = n === 0 ? "No one matched." : `${n} result${n === 1 ? "" : "s"}`;
    } else {
      status.textContent = "";
    }
  }

  private card(result: ApiResult): HTMLLIElement {
    const li = document.createElement("li");
    li.className = "card";
    li.dataset.employeeId = result.employee_id;

    const main = document.createElement("div");
    main.className = "card-main";
    main.appendChild(this.field("full-name", result.full_name));
    main.appendChild(this.field("position-title", result.position_title));
    main.appendChild(this.field("phone", result.phone));
    main.appendChild(this.field("email", result.email));
    main.appendChild(this.field("score", result.score.toFixed(4)));

    const toggle = document.createElement("button");
    toggle.type = "button";
    toggle.className = "explain-toggle";
    toggle.textContent = this.expanded.has(result.employee_id) ? "Hide" : "Why?";
    toggle.addEventListener("click", () => this.toggleExplain(result.employee_id));
    main.appendChild(toggle);
    li.appendChild(main);

    const explain = document.createElement("div");
    explain.className = "card-explain";
    explain.hidden = !this.expanded.has(result.employee_id);
    const concepts = document.createElement("ul");
    concepts.className = "matched-concepts";
    for (const concept of result.matched_concepts) {
      const item = document.createElement("li");
      item.textContent = concept;
      concepts.appendChild(item);
    }
    explain.appendChild(concepts);
    const breakdown = document.createElement("p");
    breakdown.className = "breakdown";
    breakdown.textContent = result.explanation;
    explain.appendChild(breakdown);
    const profile = document.createElement("p");
    profile.className = "profile";
    profile.textContent = this.profiles.get(result.employee_id) ?? "";
    explain.appendChild(profile);
    li.appendChild(explain);
    return li;
  }

  private field(cls: string, text: string): HTMLSpanElement {
    const span = document.createElement("span");
    span.className = cls;
    span.textContent = text;
    return span;
  }

  private toggleExplain(employeeId: string): void {
    if (this.expanded.has(employeeId)) {
      this.expanded.delete(employeeId);
    } else {
      this.expanded.add(employeeId);
      if (!this.profiles.has(employeeId)) {
        void this.loadProfile(employeeId);
      }
    }
    this.render();
  }

  private async loadProfile(employeeId: string): Promise<void> {
    try {
      const card = await this.api.employee(employeeId);
      this.profiles.set(
        employeeId,
        `Directory entry: ${card.full_name}, ${card.position_title} (${card.department}), ${card.phone}, ${card.email}`,
      );
    } catch {
      this.profiles.set(employeeId, "Directory entry unavailable.");
    }
    this.render();
  }

  private q<T extends Element>(selector: string): T {
    const el = this.root.querySelector<T>(selector);
    if (!el) throw new Error(`missing element: ${selector}`);
    return el;
  }
}
