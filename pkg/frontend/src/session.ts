// Stroke capture state machine for the input pane.
//
// A stroke opens on pointer-down, extends on pointer-move, closes on
// pointer-up. Samples are floored to integer canvas pixels (the service
// only accepts integers) and consecutive duplicates are dropped at capture
// time, so the Detect payload is exactly what was drawn.

import type { RecognizePayload, StrokePayload } from "./types.js";

export type StrokeEnd = "kept" | "discarded" | "idle";

export class CanvasSession {
  strokes: StrokePayload[] = [];
  active: [number, number][] | null = null;
  private nextId = 1;

  pointerDown(x: number, y: number): void {
    this.active = [[Math.floor(x), Math.floor(y)]];
  }

  pointerMove(x: number, y: number): void {
    if (!this.active) return;
    const sample: [number, number] = [Math.floor(x), Math.floor(y)];
    const last = this.active[this.active.length - 1];
    if (sample[0] !== last[0] || sample[1] !== last[1]) {
      this.active.push(sample);
    }
  }

  /** Close the active stroke; strokes with < 2 distinct points are discarded. */
  pointerUp(): StrokeEnd {
    if (!this.active) return "idle";
    const points = this.active;
    this.active = null;
    if (points.length < 2) return "discarded";
    this.strokes.push({ id: this.nextId++, points });
    return "kept";
  }

  clear(): void {
    this.strokes = [];
    this.active = null;
    this.nextId = 1;
  }

  isEmpty(): boolean {
    return this.strokes.length === 0;
  }

  /** The exact deduplicated samples, in capture order. */
  payload(): RecognizePayload {
    return { strokes: this.strokes.map((s) => ({ id: s.id, points: s.points.slice() })) };
  }
}
