import { describe, expect, it } from "vitest";

import { CanvasSession } from "../src/session.js";

function drag(session: CanvasSession, samples: [number, number][]) {
  session.pointerDown(...samples[0]);
  for (const [x, y] of samples.slice(1)) session.pointerMove(x, y);
  return session.pointerUp();
}

describe("stroke capture", () => {
  it("keeps a drag as one stroke", () => {
    const session = new CanvasSession();
    const samples: [number, number][] = [];
    for (let x = 0; x <= 100; x += 2) samples.push([x, 50]);
    expect(drag(session, samples)).toBe("kept");
    expect(session.strokes).toHaveLength(1);
    expect(session.strokes[0].points).toEqual(samples);
  });

  it("discards a click without drag", () => {
    const session = new CanvasSession();
    session.pointerDown(10, 10);
    expect(session.pointerUp()).toBe("discarded");
    expect(session.strokes).toHaveLength(0);
  });

  it("discards a drag that never leaves the pixel", () => {
    const session = new CanvasSession();
    session.pointerDown(10.2, 10.8);
    session.pointerMove(10.9, 10.1);
    expect(session.pointerUp()).toBe("discarded");
  });

  it("pointer-up without pointer-down is a no-op", () => {
    const session = new CanvasSession();
    expect(session.pointerUp()).toBe("idle");
  });

  it("drops consecutive duplicate samples", () => {
    const session = new CanvasSession();
    drag(session, [[0, 0], [0, 0], [1, 0], [1, 0], [2, 0]]);
    expect(session.strokes[0].points).toEqual([[0, 0], [1, 0], [2, 0]]);
  });

  it("floors fractional coordinates to integer pixels", () => {
    const session = new CanvasSession();
    drag(session, [[0.9, 0.2], [1.7, 0.4], [2.3, 0.9]]);
    expect(session.strokes[0].points).toEqual([[0, 0], [1, 0], [2, 0]]);
  });

  it("three separate drags give three strokes with increasing ids", () => {
    const session = new CanvasSession();
    drag(session, [[0, 0], [5, 0]]);
    drag(session, [[0, 10], [5, 10]]);
    drag(session, [[0, 20], [5, 20]]);
    expect(session.strokes.map((s) => s.id)).toEqual([1, 2, 3]);
  });

  it("payload is exactly the captured samples in order", () => {
    const session = new CanvasSession();
    const samples: [number, number][] = [[3, 4], [4, 4], [5, 5], [6, 7]];
    drag(session, samples);
    const payload = session.payload();
    expect(payload).toEqual({ strokes: [{ id: 1, points: samples }] });
    // mutation of the payload must not touch the session
    payload.strokes[0].points.push([99, 99]);
    expect(session.strokes[0].points).toHaveLength(4);
  });

  it("clear removes strokes and active stroke", () => {
    const session = new CanvasSession();
    drag(session, [[0, 0], [5, 0]]);
    session.pointerDown(1, 1);
    session.clear();
    expect(session.isEmpty()).toBe(true);
    expect(session.active).toBeNull();
    expect(session.pointerUp()).toBe("idle");
  });

  it("clear on an empty session is a no-op", () => {
    const session = new CanvasSession();
    session.clear();
    expect(session.isEmpty()).toBe(true);
  });
});
