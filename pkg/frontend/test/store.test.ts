import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";
import { SearchStore } from "../src/store";
import { E7, E9, consoleFetchMock, deferred, flush, jsonResponse, searchResponse } from "./helpers";

describe("SearchStore", () => {
  it("fires no request for a blank query", async () => {
    const mock = consoleFetchMock(() => Promise.resolve(jsonResponse(searchResponse([E7]))));
    const store = new SearchStore(new ApiClient("", mock.fetch));
    store.setQuery("   ");
    await store.submit();
    expect(store.canSubmit()).toBe(false);
    expect(mock.searchCalls()).toHaveLength(0);
  });

  it("applies the latest response and discards stale ones", async () => {
    const slow = deferred<Response>();
    const fast = deferred<Response>();
    const pending = [slow, fast];
    const mock = consoleFetchMock(() => pending.shift()!.promise);
    const store = new SearchStore(new ApiClient("", mock.fetch));

    store.setQuery("invoice");
    const first = store.submit(); // will resolve last
    store.setQuery("billing clerk");
    const second = store.submit();

    fast.resolve(jsonResponse(searchResponse([E9], "req-b")));
    await second;
    expect(store.state.results?.request_id).toBe("req-b");

    slow.resolve(jsonResponse(searchResponse([E7], "req-a")));
    await first;
    // the late response for the older request must not win
    expect(store.state.results?.request_id).toBe("req-b");
    expect(store.state.results?.results[0].employee_id).toBe("e9");
    expect(store.state.loading).toBe(false);
  });

  it("keeps previous results and raises the banner on failure", async () => {
    let fail = false;
    const mock = consoleFetchMock(() =>
      fail ? Promise.reject(new Error("backend down")) : Promise.resolve(jsonResponse(searchResponse([E7]))),
    );
    const store = new SearchStore(new ApiClient("", mock.fetch));
    store.setQuery("invoice");
    await store.submit();
    expect(store.state.results?.results[0].employee_id).toBe("e7");

    fail = true;
    await store.submit();
    expect(store.state.errorBanner).toContain("backend down");
    expect(store.state.results?.results[0].employee_id).toBe("e7"); // never a blank screen
  });

  it("re-issues the current query when the facet changes, but not on blank", async () => {
    const mock = consoleFetchMock(() => Promise.resolve(jsonResponse(searchResponse([E7]))));
    const store = new SearchStore(new ApiClient("", mock.fetch));

    store.setDepartment("finance");
    await flush();
    expect(mock.searchCalls()).toHaveLength(0); // blank query: facet change alone is silent

    store.setQuery("invoice");
    await store.submit();
    store.setDepartment("sales");
    await flush();
    const calls = mock.searchCalls();
    expect(calls).toHaveLength(2);
    expect(calls[1]).toContain("dept=sales");
  });

  it("clears a stale error banner when a newer request succeeds", async () => {
    let fail = true;
    const mock = consoleFetchMock(() =>
      fail ? Promise.reject(new Error("boom")) : Promise.resolve(jsonResponse(searchResponse([E7]))),
    );
    const store = new SearchStore(new ApiClient("", mock.fetch));
    store.setQuery("invoice");
    await store.submit();
    expect(store.state.errorBanner).toContain("boom");

    fail = false;
    await store.submit();
    expect(store.state.errorBanner).toBeNull();
  });
});
