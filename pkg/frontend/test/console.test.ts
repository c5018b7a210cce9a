import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api";
import { App } from "../src/app";
import {
  E7,
  E9,
  FetchMock,
  consoleFetchMock,
  deferred,
  flush,
  jsonResponse,
  searchResponse,
} from "./helpers";

function mount(mock: FetchMock): HTMLElement {
  document.body.innerHTML = '<div id="app"></div>';
  const root = document.getElementById("app")!;
  new App(root, new ApiClient("", mock.fetch));
  return root;
}

function type(root: HTMLElement, text: string): void {
  const input = root.querySelector<HTMLInputElement>(".query-input")!;
  input.value = text;
  input.dispatchEvent(new Event("input", { bubbles: true }));
}

function submit(root: HTMLElement): void {
  const form = root.querySelector<HTMLFormElement>(".search-form")!;
  form.dispatchEvent(new Event("submit", { bubbles: true, cancelable: true }));
}

afterEach(() => {
  vi.useRealTimers();
  document.body.innerHTML = "";
});

describe("search console", () => {
  it("renders every mandatory contact field on every card", async () => {
    const mock = consoleFetchMock(() => Promise.resolve(jsonResponse(searchResponse([E7, E9]))));
    const root = mount(mock);
    type(root, "who approves invoices");
    submit(root);
    await flush();

    const cards = [...root.querySelectorAll(".card")];
    expect(cards).toHaveLength(2);
    for (const card of cards) {
      for (const cls of [".full-name", ".phone", ".email", ".position-title"]) {
        const field = card.querySelector(cls);
        expect(field?.textContent ?? "").not.toBe("");
      }
    }
    expect(cards[0].querySelector(".full-name")?.textContent).toBe("Jonas Keller");
  });

  it("submit is disabled for blank input and no request fires", async () => {
    const mock = consoleFetchMock(() => Promise.resolve(jsonResponse(searchResponse([E7]))));
    const root = mount(mock);
    type(root, "   ");
    submit(root);
    await flush();
    expect(root.querySelector<HTMLButtonElement>(".submit")!.disabled).toBe(true);
    expect(mock.searchCalls()).toHaveLength(0);
  });

  it("department facet alters the issued request parameters", async () => {
    const mock = consoleFetchMock(() => Promise.resolve(jsonResponse(searchResponse([E7]))));
    const root = mount(mock);
    await flush(); // facet row loads
    type(root, "invoice");
    submit(root);
    await flush();

    const finance = [...root.querySelectorAll<HTMLButtonElement>(".facet")].find(
      (chip) => chip.dataset.dept === "finance",
    )!;
    finance.click();
    await flush();

    const calls = mock.searchCalls();
    expect(calls.at(-1)).toContain("dept=finance");
    expect(calls.at(-1)).toContain("q=invoice");
    expect(
      root.querySelector<HTMLButtonElement>('.facet[data-dept="finance"]')!.classList.contains("selected"),
    ).toBe(true);

    const all = root.querySelector<HTMLButtonElement>('.facet[data-dept=""]')!;
    all.click();
    await flush();
    expect(mock.searchCalls().at(-1)).not.toContain("dept=");
  });

  it("stale responses never overwrite newer results", async () => {
    const slow = deferred<Response>();
    const fast = deferred<Response>();
    const pending = [slow, fast];
    const mock = consoleFetchMock(() => pending.shift()!.promise);
    const root = mount(mock);

    type(root, "invoice");
    submit(root);
    type(root, "billing clerk");
    submit(root);

    fast.resolve(jsonResponse(searchResponse([E9], "req-b")));
    await flush();
    expect(root.querySelector(".full-name")?.textContent).toBe("Petar Dimitrov");

    slow.resolve(jsonResponse(searchResponse([E7], "req-a")));
    await flush();
    expect(root.querySelector(".full-name")?.textContent).toBe("Petar Dimitrov");
    expect([...root.querySelectorAll(".card")]).toHaveLength(1);
  });

  it("failure shows the banner and preserves the previous cards", async () => {
    let fail = false;
    const mock = consoleFetchMock(() =>
      fail ? Promise.reject(new Error("backend down")) : Promise.resolve(jsonResponse(searchResponse([E7]))),
    );
    const root = mount(mock);
    type(root, "invoice");
    submit(root);
    await flush();
    expect(root.querySelectorAll(".card")).toHaveLength(1);

    fail = true;
    submit(root);
    await flush();
    const banner = root.querySelector<HTMLElement>(".error-banner")!;
    expect(banner.hidden).toBe(false);
    expect(banner.textContent).toContain("backend down");
    expect(root.querySelectorAll(".card")).toHaveLength(1); // never a blank screen
  });

  it("search-as-you-type is debounced to one request", async () => {
    vi.useFakeTimers();
    const mock = consoleFetchMock(() => Promise.resolve(jsonResponse(searchResponse([E7]))));
    const root = mount(mock);
    type(root, "i");
    type(root, "in");
    type(root, "inv");
    await vi.advanceTimersByTimeAsync(299);
    expect(mock.searchCalls()).toHaveLength(0);
    await vi.advanceTimersByTimeAsync(1);
    expect(mock.searchCalls()).toHaveLength(1);
    expect(mock.searchCalls()[0]).toContain("q=inv");
  });

  it("expanding a card reveals concepts, the breakdown, and the directory entry", async () => {
    const mock = consoleFetchMock(() => Promise.resolve(jsonResponse(searchResponse([E7]))));
    mock.on(
      (url) => url.includes("/api/employees/e7"),
      () =>
        Promise.resolve(
          jsonResponse({
            id: "e7",
            full_name: E7.full_name,
            phone: E7.phone,
            email: E7.email,
            position_title: E7.position_title,
            department: "finance",
          }),
        ),
    );
    const root = mount(mock);
    type(root, "who approves invoices");
    submit(root);
    await flush();

    expect(root.querySelector<HTMLElement>(".card-explain")!.hidden).toBe(true);
    root.querySelector<HTMLButtonElement>(".explain-toggle")!.click();
    await flush();

    const explain = root.querySelector<HTMLElement>(".card-explain")!;
    expect(explain.hidden).toBe(false);
    expect([...explain.querySelectorAll(".matched-concepts li")].map((li) => li.textContent)).toEqual([
      "approve",
      "invoice",
      "payment",
    ]);
    expect(explain.querySelector(".breakdown")?.textContent).toContain("factor 0.9, peers 3");
    expect(explain.querySelector(".profile")?.textContent).toContain("Jonas Keller");
    expect(mock.calls.some((url) => url.includes("/api/employees/e7"))).toBe(true);

    root.querySelector<HTMLButtonElement>(".explain-toggle")!.click();
    await flush();
    expect(root.querySelector<HTMLElement>(".card-explain")!.hidden).toBe(true);
    expect(root.querySelector(".full-name")?.textContent).toBe("Jonas Keller"); // card fields untouched
  });

  it("unknown terms render as hint chips", async () => {
    const mock = consoleFetchMock(() =>
      Promise.resolve(
        jsonResponse({ request_id: "r", results: [], unknown_terms: ["zzz"], diagnostics: ["no concepts mapped"] }),
      ),
    );
    const root = mount(mock);
    type(root, "zzz");
    submit(root);
    await flush();
    const hints = root.querySelector<HTMLElement>(".hints")!;
    expect(hints.hidden).toBe(false);
    expect(hints.textContent).toContain("zzz");
    expect(root.querySelectorAll(".card")).toHaveLength(0);
  });
});
