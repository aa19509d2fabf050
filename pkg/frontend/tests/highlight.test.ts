import { describe, expect, it } from "vitest";

import { TraceEntry } from "../src/api";
import { highlightPieces, mechanismClass } from "../src/highlight";

const TRACE: TraceEntry[] = [
  { source: "Tengo", mechanism: "PHRASE_RULE", output: ["Devo", "de"] },
  { source: "que", mechanism: "PHRASE_RULE", output: [] },
  { source: "cocinar", mechanism: "DICT_SURFACE", output: ["gizar"] },
  { source: "zapato", mechanism: "ORTHO_FALLBACK", output: ["zapato"] },
  { source: ".", mechanism: "PUNCT_PASSTHROUGH", output: ["."] },
];

describe("highlightPieces", () => {
  it("emits one piece per output token, in order", () => {
    const pieces = highlightPieces(TRACE);
    expect(pieces.map((p) => p.text)).toEqual(["Devo", "de", "gizar", "zapato", "."]);
  });

  it("assigns a css class per mechanism", () => {
    const pieces = highlightPieces(TRACE);
    expect(pieces[0].cssClass).toBe("tok-phrase");
    expect(pieces[2].cssClass).toBe("tok-dict");
    expect(pieces[3].cssClass).toBe("tok-fallback");
    expect(pieces[4].cssClass).toBe("tok-punct");
  });

  it("titles carry the source token", () => {
    const pieces = highlightPieces(TRACE);
    expect(pieces[0].title).toContain("Tengo");
  });

  it("maps every mechanism", () => {
    for (const mechanism of [
      "DICT_SURFACE",
      "DICT_LEMMA_CONJUGATED",
      "ORTHO_FALLBACK",
      "PHRASE_RULE",
      "PUNCT_PASSTHROUGH",
    ] as const) {
      expect(mechanismClass(mechanism)).toMatch(/^tok-/);
    }
  });
});
