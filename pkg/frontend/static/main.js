// DOM wiring: three panes (input, output, information), Detect and Clear.
import { fetchDomains, recognizeStrokes, ServiceError } from "./api.js";
import { drawCommands, infoEntries, renderInput, renderOutput } from "./render.js";
import { CanvasSession } from "./session.js";
const BASE_URL = "";
function byId(id) {
    const el = document.getElementById(id);
    if (!el)
        throw new Error(`missing element #${id}`);
    return el;
}
function setupCanvas(canvas) {
    const rect = canvas.getBoundingClientRect();
    canvas.width = rect.width;
    canvas.height = rect.height;
    const ctx = canvas.getContext("2d");
    if (!ctx)
        throw new Error("canvas 2d context unavailable");
    return ctx;
}
window.addEventListener("DOMContentLoaded", () => {
    const inputCanvas = byId("input-pane");
    const outputCanvas = byId("output-pane");
    const infoPane = byId("info-pane");
    const detectButton = byId("detect");
    const clearButton = byId("clear");
    const banner = byId("banner");
    const domainsLine = byId("domains-line");
    const inputCtx = setupCanvas(inputCanvas);
    const outputCtx = setupCanvas(outputCanvas);
    const session = new CanvasSession();
    let lastResponse = null;
    let pending = false;
    function notice(message, isError = false) {
        banner.textContent = message;
        banner.className = isError ? "banner error" : "banner";
        banner.hidden = message === "";
    }
    function repaintInput() {
        drawCommands(inputCtx, inputCanvas.width, inputCanvas.height, renderInput(session.strokes, session.active));
    }
    function repaintOutput() {
        const commands = lastResponse ? renderOutput(lastResponse) : [];
        drawCommands(outputCtx, outputCanvas.width, outputCanvas.height, commands);
    }
    function repaintInfo() {
        infoPane.replaceChildren();
        if (!lastResponse)
            return;
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
    function canvasPoint(event) {
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
        if (!session.active)
            return;
        const [x, y] = canvasPoint(event);
        session.pointerMove(x, y);
        repaintInput();
    });
    function finishStroke() {
        const outcome = session.pointerUp();
        if (outcome === "discarded") {
            notice("Stroke too short, discarded (click and drag to draw).");
        }
        repaintInput();
    }
    inputCanvas.addEventListener("pointerup", finishStroke);
    inputCanvas.addEventListener("pointercancel", finishStroke);
    detectButton.addEventListener("click", async () => {
        if (pending || session.isEmpty())
            return;
        pending = true;
        detectButton.disabled = true;
        notice("");
        try {
            lastResponse = await recognizeStrokes(BASE_URL, session.payload());
            repaintOutput();
            repaintInfo();
        }
        catch (err) {
            const message = err instanceof ServiceError ? err.message : String(err);
            notice(message, true);
        }
        finally {
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
//# sourceMappingURL=main.js.map