import type { ApiSearchResponse, Department, EmployeeCard } from "./types";

/** Thin typed client over the documented backend endpoints. */
export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  async search(q: string, dept: string | null, k: number): Promise<ApiSearchResponse> {
    const params = new URLSearchParams({ q, k: String(k) });
    if (dept) params.set("dept", dept);
    const res = await this.fetchFn(`${this.baseUrl}/api/search?${params.toString()}`);
    if (!res.ok) throw new Error(`search failed with HTTP ${res.status}`);
    return (await res.json()) as ApiSearchResponse;
  }

  async departments(): Promise<Department[]> {
    const res = await this.fetchFn(`${this.baseUrl}/api/departments`);
    if (!res.ok) throw new Error(`department listing failed with HTTP ${res.status}`);
    return (await res.json()) as Department[];
  }

  async employee(id: string): Promise<EmployeeCard> {
    const res = await this.fetchFn(`${this.baseUrl}/api/employees/${encodeURIComponent(id)}`);
    if (!res.ok) throw new Error(`employee lookup failed with HTTP ${res.status}`);
    return (await res.json()) as EmployeeCard;
  }
}
