// Thin client for the translation service JSON API.

import { getApiBase } from "./config";

export type Mechanism =
  | "DICT_SURFACE"
  | "DICT_LEMMA_CONJUGATED"
  | "ORTHO_FALLBACK"
  | "PHRASE_RULE"
  | "PUNCT_PASSTHROUGH";

export interface TraceEntry {
  source: string;
  mechanism: Mechanism;
  output: string[];
}

export interface TranslateResponse {
  output: string;
  trace: TraceEntry[];
}

export interface ContributionRequest {
  source_lang: string;
  target_lang: string;
  source_text: string;
  machine_output: string;
  corrected_text: string;
  client_note?: string;
}

export interface ExportResponse {
  source_lines: string[];
  corrected_lines: string[];
  count: number;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function postJson<T>(path: string, body: unknown): Promise<T> {
  const response = await fetch(`${getApiBase()}${path}`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  const payload = await response.json().catch(() => ({}));
  if (!response.ok) {
    const detail = (payload as { error?: string }).error ?? response.statusText;
    throw new ApiError(response.status, detail);
  }
  return payload as T;
}

export function translateText(text: string): Promise<TranslateResponse> {
  return postJson<TranslateResponse>("/translate", { text, src: "spa", tgt: "lad" });
}

export function contribute(request: ContributionRequest): Promise<{ id: number }> {
  return postJson<{ id: number }>("/contribute", request);
}

export async function exportContributions(): Promise<ExportResponse> {
  const response = await fetch(`${getApiBase()}/contributions/export`);
  if (!response.ok) {
    throw new ApiError(response.status, response.statusText);
  }
  return (await response.json()) as ExportResponse;
}
