// DOM wiring: three panes (input, output, information), Detect and Clear.

import { fetchDomains, recognizeStrokes, ServiceError } from "./api.js";
import { drawCommands, infoEntries, renderInput, renderOutput } from "./render.js";
import { CanvasSession } from "./session.js";
import type { RecognizeResponse } from "./types.js";

const BASE_URL = "";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

function setupCanvas(canvas: HTMLCanvasElement): CanvasRenderingContext2D {
  const rect = canvas.getBoundingClientRect();
  canvas.width = rect.width;
  canvas.height = rect.height;
  const ctx = canvas.getContext("2d");
  if (!ctx) throw new Error("canvas 2d context unavailable");
  return ctx;
}

window.addEventListener("DOMContentLoaded", () => {
  const inputCanvas = byId<HTMLCanvasElement>("input-pane");
  const outputCanvas = byId<HTMLCanvasElement>("output-pane");
  const infoPane = byId<HTMLDivElement>("info-pane");
  const detectButton = byId<HTMLButtonElement>("detect");
  const clearButton = byId<HTMLButtonElement>("clear");
  const banner = byId<HTMLDivElement>("banner");
  const domainsLine = byId<HTMLDivElement>("domains-line");

  const inputCtx = setupCanvas(inputCanvas);
  const outputCtx = setupCanvas(outputCanvas);

  const session = new CanvasSession();
  let lastResponse: RecognizeResponse | null = null;
  let pending = false;

  function notice(message: string, isError = false): void {
    banner.textContent = message;
    banner.className = isError ? "banner error" : "banner";
    banner.hidden = message === "";
  }

  function repaintInput(): void {
    drawCommands(inputCtx, inputCanvas.width, inputCanvas.height, renderInput(session.strokes, session.active));
  }

  function repaintOutput(): void {
    const commands = lastResponse ? renderOutput(lastResponse) : [];
    drawCommands(outputCtx, outputCanvas.width, outputCanvas.height, commands);
  }

  function repaintInfo(): void {
    infoPane.replaceChildren();
    if (!lastResponse) return;
    for (const entry of infoEntries(lastResponse)) {
      const block = document.createElement("div");
      block.className = "info-entry";
      const head = document.createElement("div");
      head.textContent = `Stroke ${entry.strokeId} - Domain: ${entry.domain}  Figure: ${entry.figure}`;
      block.appendChild(head);
      for (const prop of entry.properties) {
        const line = document.createElement("div");
        line.className = "info-prop";
        line.textContent = prop;
        block.appendChild(line);
      }
      infoPane.appendChild(block);
    }
  }

  function canvasPoint(event: PointerEvent): [number, number] {
    const rect = inputCanvas.getBoundingClientRect();
    return [event.clientX - rect.left, event.clientY - rect.top];
  }

  inputCanvas.addEventListener("pointerdown", (event) => {
    inputCanvas.setPointerCapture(event.pointerId);
    const [x, y] = canvasPoint(event);
    session.pointerDown(x, y);
    notice("");
    repaintInput();
  });

  inputCanvas.addEventListener("pointermove", (event) => {
    if (!session.active) return;
    const [x, y] = canvasPoint(event);
    session.pointerMove(x, y);
    repaintInput();
  });

  function finishStroke(): void {
    const outcome = session.pointerUp();
    if (outcome === "discarded") {
      notice("Stroke too short, discarded (click and drag to draw).");
    }
    repaintInput();
  }

  inputCanvas.addEventListener("pointerup", finishStroke);
  inputCanvas.addEventListener("pointercancel", finishStroke);

  detectButton.addEventListener("click", async () => {
    if (pending || session.isEmpty()) return;
    pending = true;
    detectButton.disabled = true;
    notice("");
    try {
      lastResponse = await recognizeStrokes(BASE_URL, session.payload());
      repaintOutput();
      repaintInfo();
    } catch (err) {
      const message = err instanceof ServiceError ? err.message : String(err);
      notice(message, true);
    } finally {
      pending = false;
      detectButton.disabled = false;
    }
  });

  clearButton.addEventListener("click", () => {
    session.clear();
    lastResponse = null;
    notice("");
    repaintInput();
    repaintOutput();
    repaintInfo();
  });

  fetchDomains(BASE_URL)
    .then((listing) => {
      domainsLine.textContent =
        "Domains: " + listing.domains.map((d) => `${d.name} (${d.shapes.join(", ")})`).join("; ");
    })
    .catch(() => {
      domainsLine.textContent = "Domains: unavailable";
    });
});
