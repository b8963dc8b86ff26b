// Wire types of the recognition service.

export interface StrokePayload {
  id: number;
  points: [number, number][];
}

export interface RecognizePayload {
  strokes: StrokePayload[];
}

export interface BeautifiedShape {
  vertices: [number, number][];
  closed: boolean;
}

export interface StrokeResult {
  stroke_id: number;
  domain: string;
  shape: string;
  properties: Record<string, number[]>;
  beautified?: BeautifiedShape;
  segments: { raw: number[][]; merged: number[][] };
}

export interface RecognizeResponse {
  results: StrokeResult[];
}

export interface DomainListing {
  domains: { name: string; shapes: string[] }[];
}
