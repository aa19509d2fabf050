// Per-token mechanism highlighting: maps trace entries to renderable
// (text, cssClass) pieces. Pure data transformation; main.ts turns these
// into spans.

import { Mechanism, TraceEntry } from "./api";

const MECHANISM_CLASSES: Record<Mechanism, string> = {
  DICT_SURFACE: "tok-dict",
  DICT_LEMMA_CONJUGATED: "tok-conjugated",
  ORTHO_FALLBACK: "tok-fallback",
  PHRASE_RULE: "tok-phrase",
  PUNCT_PASSTHROUGH: "tok-punct",
};

export const MECHANISM_LABELS: Record<Mechanism, string> = {
  DICT_SURFACE: "dictionary",
  DICT_LEMMA_CONJUGATED: "conjugated from lemma",
  ORTHO_FALLBACK: "respelled (not in dictionary)",
  PHRASE_RULE: "phrase correction",
  PUNCT_PASSTHROUGH: "punctuation",
};

export interface HighlightPiece {
  text: string;
  cssClass: string;
  title: string;
}

export function mechanismClass(mechanism: Mechanism): string {
  return MECHANISM_CLASSES[mechanism] ?? "tok-other";
}

/** Flatten a trace into highlight pieces whose concatenated text (joined
 *  with spaces between word tokens) reads like the output sentence. */
export function highlightPieces(trace: TraceEntry[]): HighlightPiece[] {
  const pieces: HighlightPiece[] = [];
  for (const entry of trace) {
    for (const token of entry.output) {
      pieces.push({
        text: token,
        cssClass: mechanismClass(entry.mechanism),
        title: `${entry.source} · ${MECHANISM_LABELS[entry.mechanism]}`,
      });
    }
  }
  return pieces;
}
