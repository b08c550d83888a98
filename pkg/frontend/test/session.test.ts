import { describe, expect, it } from "vitest";

import { RequestGate } from "../src/session.js";

describe("RequestGate", () => {
  it("sends immediately when idle", () => {
    const gate = new RequestGate();
    const seq = gate.begin("bo");
    expect(seq).not.toBeNull();
    expect(gate.busy).toBe(true);
    expect(gate.shouldRender(seq as number)).toBe(true);
  });

  it("queues while a request is in flight", () => {
    const gate = new RequestGate();
    gate.begin("b");
    expect(gate.begin("bo")).toBeNull();
    expect(gate.busy).toBe(true);
  });

  it("marks earlier sequence numbers stale", () => {
    const gate = new RequestGate();
    const first = gate.begin("b") as number;
    gate.begin("bo");
    expect(gate.shouldRender(first)).toBe(false);
  });

  it("settle hands back the queued text once", () => {
    const gate = new RequestGate();
    const first = gate.begin("b") as number;
    gate.begin("bo");
    expect(gate.settle(first)).toBe("bo");
    expect(gate.busy).toBe(false);
    expect(gate.settle(first)).toBeNull();
  });

  it("keeps only the newest queued text", () => {
    const gate = new RequestGate();
    const first = gate.begin("b") as number;
    gate.begin("bo");
    gate.begin("bo ");
    gate.begin("bo b");
    expect(gate.settle(first)).toBe("bo b");
  });

  it("renders the resent queued request", () => {
    const gate = new RequestGate();
    const first = gate.begin("b") as number;
    gate.begin("bo");
    const queued = gate.settle(first) as string;
    const second = gate.begin(queued) as number;
    expect(second).not.toBeNull();
    expect(gate.shouldRender(second)).toBe(true);
    expect(gate.shouldRender(first)).toBe(false);
  });
});
