"""The end-to-end Spanish -> Judeo-Spanish transfer pipeline.

Fixed order: analyze, fuse present perfects, per-token transfer, phrase
corrections, detokenize. Per-token transfer precedence:

1. surface dictionary hit (re-pluralized when the source was plural and the
   mapping is singular);
2. verb with a dictionary hit on its lemma: conjugate the mapped lemma with
   the source features; non-verbs retry the dictionary on their singular
   lemma and copy the plural;
3. orthographic respelling of the surface.

Inverted punctuation is dropped from the output; everything else passes
through. Capitalized source tokens capitalize the first character of their
output. Translation is pure given immutable rule data, so results are
deterministic and thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence

from ladinomt.analysis import (
    AnalyzedToken,
    Pos,
    Tense,
    analyze,
    detect_present_perfect,
    is_plural_noun,
    is_punct,
    singular_alternatives,
    tokenize,
)
from ladinomt.lexicon import Lexicon, PhraseRules
from ladinomt.morphogen import ConjugationTable, conjugate, pluralize_noun
from ladinomt.orthography import OrthoRuleSet, respell

_DROPPED_PUNCT = {"¿", "¡"}
_OPENING_PUNCT = {"«", "(", "[", "“", "‘"}


class Mechanism(Enum):
    DICT_SURFACE = "DICT_SURFACE"
    DICT_LEMMA_CONJUGATED = "DICT_LEMMA_CONJUGATED"
    ORTHO_FALLBACK = "ORTHO_FALLBACK"
    PHRASE_RULE = "PHRASE_RULE"
    PUNCT_PASSTHROUGH = "PUNCT_PASSTHROUGH"


@dataclass
class TraceEntry:
    source: str
    mechanism: Mechanism
    output: list[str]


@dataclass
class TranslationResult:
    output: str
    token_trace: list[TraceEntry] = field(default_factory=list)
    error: Optional[str] = None


def detokenize(tokens: Iterable[str]) -> str:
    """Join tokens, attaching punctuation to the preceding token."""
    pieces: list[str] = []
    glue_next = False
    for tok in tokens:
        closing = is_punct(tok) and tok not in _OPENING_PUNCT
        if pieces and (closing or glue_next):
            pieces[-1] += tok
        else:
            pieces.append(tok)
        glue_next = is_punct(tok) and tok in _OPENING_PUNCT
    return " ".join(pieces)


def _capitalize(tokens: list[str]) -> list[str]:
    if tokens and tokens[0]:
        tokens[0] = tokens[0][0].upper() + tokens[0][1:]
    return tokens


def _looks_plural(form: str) -> bool:
    return form.lower().endswith("s")


def _transfer_token(
    tok: AnalyzedToken,
    lex: Lexicon,
    table: ConjugationTable,
    ortho: OrthoRuleSet,
) -> TraceEntry:
    if tok.pos is Pos.PUNCT:
        output = [] if tok.surface in _DROPPED_PUNCT else [tok.surface]
        return TraceEntry(tok.surface, Mechanism.PUNCT_PASSTHROUGH, output)

    source_capitalized = tok.capitalized

    surface_hit = lex.lookup(tok.normalized)
    if surface_hit is not None:
        output = surface_hit.split()
        if is_plural_noun(tok) and not _looks_plural(output[-1]):
            output[-1] = pluralize_noun(output[-1])
        if source_capitalized:
            _capitalize(output)
        return TraceEntry(tok.surface, Mechanism.DICT_SURFACE, output)

    if tok.pos is Pos.VERB and tok.features is not None:
        lemma_hit = lex.lookup(tok.lemma)
        if lemma_hit is not None:
            target = lemma_hit.split()
            single_infinitive = len(target) == 1 and target[0].endswith(("ar", "er", "ir"))
            if tok.features.tense is not Tense.INFINITIVE and single_infinitive:
                output = [conjugate(target[0], tok.features, table, ortho)]
            else:
                # multi-word or non-infinitive mapping: use the value as-is
                output = target
            if source_capitalized:
                _capitalize(output)
            return TraceEntry(tok.surface, Mechanism.DICT_LEMMA_CONJUGATED, output)
    elif tok.lemma != tok.normalized:
        for candidate in singular_alternatives(tok):
            lemma_hit = lex.lookup(candidate)
            if lemma_hit is not None:
                output = lemma_hit.split()
                if not _looks_plural(output[-1]):
                    output[-1] = pluralize_noun(output[-1])
                if source_capitalized:
                    _capitalize(output)
                return TraceEntry(tok.surface, Mechanism.DICT_LEMMA_CONJUGATED, output)

    if tok.parts is not None:
        output = [respell(part, ortho) for part in tok.parts]
    else:
        output = [respell(tok.surface, ortho)]
    return TraceEntry(tok.surface, Mechanism.ORTHO_FALLBACK, output)


def _apply_phrase_pass(entries: list[TraceEntry], phrases: PhraseRules) -> None:
    """Rewrite phrase-rule matches across the trace, in place.

    Matches may span several trace entries; the replacement lands on the
    first entry of the span and the remaining entries empty out, so each
    source token still appears exactly once and concatenation order holds.
    """
    if not len(phrases):
        return
    flat: list[tuple[int, str]] = [
        (idx, token) for idx, entry in enumerate(entries) for token in entry.output
    ]
    ordered = phrases.sorted_by_length()
    new_flat: list[tuple[int, str]] = []
    any_match = False
    i = 0
    while i < len(flat):
        matched = None
        for rule in ordered:
            span = len(rule.pattern)
            window = flat[i : i + span]
            if len(window) == span and tuple(t.lower() for _, t in window) == rule.pattern:
                matched = rule
                break
        if matched is None:
            new_flat.append(flat[i])
            i += 1
            continue
        any_match = True
        replacement = list(matched.replacement)
        if flat[i][1][:1].isupper():
            replacement = _capitalize(replacement)
        owner = flat[i][0]
        span_owners = {idx for idx, _ in flat[i : i + len(matched.pattern)]}
        for idx in span_owners:
            entries[idx].mechanism = Mechanism.PHRASE_RULE
            entries[idx].output = []
        new_flat.extend((owner, t) for t in replacement)
        i += len(matched.pattern)
    if not any_match:
        return
    touched = {idx for idx, _ in new_flat}
    for idx in touched:
        entries[idx].output = [t for owner, t in new_flat if owner == idx]


def translate(
    text: str,
    lex: Lexicon,
    phrases: PhraseRules,
    table: ConjugationTable,
    ortho: OrthoRuleSet,
) -> TranslationResult:
    """Translate one Spanish text into Judeo-Spanish with a per-token trace."""
    tokens = detect_present_perfect(analyze(tokenize(text), lex))
    entries = [_transfer_token(tok, lex, table, ortho) for tok in tokens]
    _apply_phrase_pass(entries, phrases)
    output = detokenize(t for entry in entries for t in entry.output)
    return TranslationResult(output, entries)


def translate_batch(
    lines: Sequence[str],
    lex: Lexicon,
    phrases: PhraseRules,
    table: ConjugationTable,
    ortho: OrthoRuleSet,
) -> list[TranslationResult]:
    """Translate lines independently; a failing line records its error."""
    results = []
    for line in lines:
        try:
            results.append(translate(line, lex, phrases, table, ortho))
        except Exception as exc:  # per-line isolation, batch always completes
            results.append(TranslationResult("", [], error=str(exc)))
    return results
