// Client for the recognition service.
export class ServiceError extends Error {
    constructor(message, status) {
        super(message);
        this.status = status;
    }
}
async function asJson(response) {
    if (!response.ok) {
        let detail = response.statusText;
        try {
            const body = (await response.json());
            if (body.error)
                detail = body.error;
        }
        catch {
            // keep the status text
        }
        throw new ServiceError(`service error: ${detail}`, response.status);
    }
    return (await response.json());
}
export async function recognizeStrokes(baseUrl, payload) {
    let response;
    try {
        response = await fetch(`${baseUrl}/recognize`, {
            method: "POST",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify(payload),
        });
    }
    catch (err) {
        throw new ServiceError(`service unreachable: ${String(err)}`);
    }
    return asJson(response);
}
export async function fetchDomains(baseUrl) {
    let response;
    try {
        response = await fetch(`${baseUrl}/domains`);
    }
    catch (err) {
        throw new ServiceError(`service unreachable: ${String(err)}`);
    }
    return asJson(response);
}
//# sourceMappingURL=api.js.map