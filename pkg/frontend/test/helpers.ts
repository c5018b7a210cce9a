import type { ApiResult, ApiSearchResponse, Department } from "../src/types";

export const DEPARTMENTS: Department[] = [
  { id: "finance", name: "Finance" },
  { id: "sales", name: "Sales" },
  { id: "support", name: "Customer Support" },
  { id: "engineering", name: "Engineering" },
  { id: "hr", name: "Human Resources" },
];

export const E7: ApiResult = {
  employee_id: "e7",
  full_name: "Jonas Keller",
  phone: "+1-555-0107",
  email: "jonas.keller@acme.example",
  position_title: "Accounts Payable Lead",
  department: "finance",
  score: 1.08,
  matched_concepts: ["approve", "invoice", "payment"],
  explanation:
    "matched approve, invoice, payment; case c1 (factor 0.9, peers 3): " +
    "similarity 1.0000 x confidence 1.0800 x dept 1.00 = 1.0800",
};

export const E9: ApiResult = {
  employee_id: "e9",
  full_name: "Petar Dimitrov",
  phone: "+1-555-0109",
  email: "petar.dimitrov@acme.example",
  position_title: "Billing Clerk",
  department: "finance",
  score: 0.4,
  matched_concepts: ["invoice"],
  explanation:
    "matched invoice; case c2 (factor 1, peers 0): " +
    "similarity 0.4000 x confidence 1.0000 x dept 1.00 = 0.4000",
};

export function searchResponse(results: ApiResult[], requestId = "r1"): ApiSearchResponse {
  return { request_id: requestId, results, unknown_terms: [], diagnostics: [] };
}

export function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json; charset=utf-8" },
  });
}

export interface Deferred<T> {
  promise: Promise<T>;
  resolve: (value: T) => void;
  reject: (reason: unknown) => void;
}

export function deferred<T>(): Deferred<T> {
  let resolve!: (value: T) => void;
  let reject!: (reason: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

/** Records every request URL and routes it through user-provided handlers. */
export class FetchMock {
  calls: string[] = [];
  private routes: Array<{ match: (url: string) => boolean; respond: (url: string) => Promise<Response> }> = [];

  on(match: (url: string) => boolean, respond: (url: string) => Promise<Response>): void {
    this.routes.push({ match, respond });
  }

  fetch = (input: RequestInfo | URL): Promise<Response> => {
    const url = String(input);
    this.calls.push(url);
    for (const route of this.routes) {
      if (route.match(url)) return route.respond(url);
    }
    return Promise.reject(new Error(`unhandled fetch: ${url}`));
  };

  searchCalls(): string[] {
    return this.calls.filter((url) => url.includes("/api/search"));
  }
}

/** Standard mock: departments resolve immediately, searches via the given handler. */
export function consoleFetchMock(onSearch: (url: string) => Promise<Response>): FetchMock {
  const mock = new FetchMock();
  mock.on(
    (url) => url.includes("/api/departments"),
    () => Promise.resolve(jsonResponse(DEPARTMENTS)),
  );
  mock.on((url) => url.includes("/api/search"), onSearch);
  return mock;
}

export function flush(): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, 0));
}
