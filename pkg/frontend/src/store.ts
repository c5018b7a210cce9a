import type { ApiClient } from "./api";
import type { ApiSearchResponse } from "./types";

export interface UiState {
  queryText: string;
  selectedDepartment: string | null; // null = "all"
  k: number;
  results: ApiSearchResponse | null;
  loading: boolean;
  errorBanner: string | null;
}

type Listener = () => void;

/**
 * Search state with an out-of-order-response guard.
 *
 * Every issued request gets a monotonically increasing sequence number; a
 * response is applied only if it is newer than the one currently shown, so
 * a slow early request can never overwrite a faster later one. On failure
 * the previous results stay on screen and only the banner changes.
 */
export class SearchStore {
  state: UiState = {
    queryText: "",
    selectedDepartment: null,
    k: 10,
    results: null,
    loading: false,
    errorBanner: null,
  };

  private issuedSeq = 0;
  private appliedSeq = 0;
  private listeners: Listener[] = [];

  constructor(private api: ApiClient) {}

  subscribe(listener: Listener): void {
    this.listeners.push(listener);
  }

  private emit(): void {
    for (const listener of this.listeners) listener();
  }

  setQuery(text: string): void {
    this.state.queryText = text;
    this.emit();
  }

  canSubmit(): boolean {
    return this.state.queryText.trim().length > 0;
  }

  /** Facet selection re-issues the current query; with a blank query it only repaints. */
  setDepartment(dept: string | null): void {
    this.state.selectedDepartment = dept;
    this.emit();
    if (this.canSubmit()) {
      void this.submit();
    }
  }

  async submit(): Promise<void> {
    if (!this.canSubmit()) return;
    const seq = ++this.issuedSeq;
    this.state.loading = true;
    this.emit();
    try {
      const response = await this.api.search(
        this.state.queryText.trim(),
        this.state.selectedDepartment,
        this.state.k,
      );
      if (seq > this.appliedSeq) {
        this.appliedSeq = seq;
        this.state.results = response;
        this.state.errorBanner = null;
      }
    } catch (err) {
      if (seq === this.issuedSeq) {
        this.state.errorBanner = err instanceof Error ? err.message : String(err);
      }
    } finally {
      if (seq === this.issuedSeq) {
        this.state.loading = false;
      }
      this.emit();
    }
  }
}
