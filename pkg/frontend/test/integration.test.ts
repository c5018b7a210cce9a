import { describe, expect, it } from "vitest";

import { ApiClient } from "../src/api";

// Opt-in end-to-end pass against a live backend serving the fixture KB:
//   python3 -m ontosearch serve --kb fixtures/acme-kb.json --port 8765
//   ONTOSEARCH_BACKEND_URL=http://127.0.0.1:8765 npm test
const BASE = process.env.ONTOSEARCH_BACKEND_URL;

describe.skipIf(!BASE)("live backend", () => {
  const api = new ApiClient(BASE ?? "");

  it("returns the accounts-payable lead for the invoice-approval question", async () => {
    const body = await api.search("who approves invoices", null, 5);
    expect(body.results[0].employee_id).toBe("e7");
    expect(body.results[0].full_name).toBe("Jonas Keller");
    for (const result of body.results) {
      expect(result.full_name).not.toBe("");
      expect(result.phone).not.toBe("");
      expect(result.email).not.toBe("");
      expect(result.position_title).not.toBe("");
    }
  });

  it("lists the five departments for the facet row", async () => {
    const departments = await api.departments();
    expect(departments).toHaveLength(5);
  });

  it("serves individual employee cards", async () => {
    const card = await api.employee("e7");
    expect(card.full_name).toBe("Jonas Keller");
  });
});
