// Client for the recognition service.

import type { DomainListing, RecognizePayload, RecognizeResponse } from "./types.js";

export class ServiceError extends Error {
  constructor(message: string, readonly status?: number) {
    super(message);
  }
}

async function asJson<T>(response: Response): Promise<T> {
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { error?: string };
      if (body.error) detail = body.error;
    } catch {
      // keep the status text
    }
    throw new ServiceError(`service error: ${detail}`, response.status);
  }
  return (await response.json()) as T;
}

export async function recognizeStrokes(
  baseUrl: string,
  payload: RecognizePayload,
): Promise<RecognizeResponse> {
  let response: Response;
  try {
    response = await fetch(`${baseUrl}/recognize`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
  } catch (err) {
    throw new ServiceError(`service unreachable: ${String(err)}`);
  }
  return asJson<RecognizeResponse>(response);
}

export async function fetchDomains(baseUrl: string): Promise<DomainListing> {
  let response: Response;
  try {
    response = await fetch(`${baseUrl}/domains`);
  } catch (err) {
    throw new ServiceError(`service unreachable: ${String(err)}`);
  }
  return asJson<DomainListing>(response);
}
