// Pure pane content builders plus a thin canvas adapter.
//
// The input pane shows the raw strokes (and the stroke being drawn); the
// output pane shows only beautified results, vertex-for-vertex as the
// service returned them; the information pane lists domain/figure plus the
// reported properties per stroke. Unrecognized strokes contribute nothing
// to the output pane and show "Undefined" for both fields.
const INPUT_STYLE = { color: "#444444", width: 2 };
const ACTIVE_STYLE = { color: "#888888", width: 2 };
const OUTPUT_STYLE = { color: "#0b61d8", width: 2.5 };
export function renderInput(strokes, active) {
    const commands = strokes.map((s) => ({
        points: s.points,
        closed: false,
        ...INPUT_STYLE,
    }));
    if (active && active.length > 1) {
        commands.push({ points: active, closed: false, ...ACTIVE_STYLE });
    }
    return commands;
}
export function renderOutput(response) {
    const commands = [];
    for (const result of response.results) {
        if (!result.beautified)
            continue;
        commands.push({
            points: result.beautified.vertices,
            closed: result.beautified.closed,
            ...OUTPUT_STYLE,
        });
    }
    return commands;
}
function formatValues(values) {
    return values.map((v) => (Number.isInteger(v) ? String(v) : v.toFixed(1))).join(", ");
}
export function infoEntries(response) {
    return response.results.map((result) => ({
        strokeId: result.stroke_id,
        domain: result.domain,
        figure: result.shape,
        properties: Object.entries(result.properties).map(([name, values]) => `${name}: ${formatValues(values)}`),
    }));
}
export function drawCommands(ctx, width, height, commands) {
    ctx.clearRect(0, 0, width, height);
    for (const command of commands) {
        if (command.points.length < 2)
            continue;
        ctx.beginPath();
        ctx.moveTo(command.points[0][0], command.points[0][1]);
        for (const [x, y] of command.points.slice(1)) {
            ctx.lineTo(x, y);
        }
        if (command.closed)
            ctx.closePath();
        ctx.strokeStyle = command.color;
        ctx.lineWidth = command.width;
        ctx.lineJoin = "round";
        ctx.lineCap = "round";
        ctx.stroke();
    }
}
//# sourceMappingURL=render.js.map