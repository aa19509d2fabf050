"""The Spanish -> Judeo-Spanish word dictionary and phrase corrections.

Dictionary files are plain text, one spanish<TAB>ladino pair per line; the
Ladino side may contain spaces (multi-word equivalents). Keys are matched
lowercase and accent-folded. Phrase rules map multi-word Ladino-side
patterns to idiomatic replacements and run after word-level transfer.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import IO, Optional, Union

from ladinomt.resources import data_path

logger = logging.getLogger(__name__)

_ACCENT_FOLD = str.maketrans("áéíóúüÁÉÍÓÚÜ", "aeiouuAEIOUU")

Source = Union[str, Path, IO[bytes]]


class LexiconFormatError(ValueError):
    """A dictionary or phrase file line is malformed."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def fold_key(form: str) -> str:
    """Normalize a Spanish form into its lookup key."""
    return form.lower().translate(_ACCENT_FOLD)


def _read_text(source: Source) -> str:
    if hasattr(source, "read"):
        raw = source.read()
        if isinstance(raw, bytes):
            try:
                return raw.decode("utf-8")
            except UnicodeDecodeError as exc:
                raise LexiconFormatError(0, f"invalid UTF-8: {exc}") from exc
        return raw
    return Path(source).read_text(encoding="utf-8")


@dataclass(frozen=True)
class Lexicon:
    """Immutable Spanish -> Ladino word map."""

    word_map: dict[str, str]

    @property
    def entry_count(self) -> int:
        return len(self.word_map)

    def lookup(self, form: str) -> Optional[str]:
        return self.word_map.get(fold_key(form))


def load_lexicon(source: Source) -> Lexicon:
    """Load a dictionary file; duplicate keys override with a warning."""
    word_map: dict[str, str] = {}
    text = _read_text(source)
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split("\t")
        if len(fields) != 2:
            raise LexiconFormatError(
                lineno, f"expected spanish<TAB>ladino, got {len(fields)} field(s)"
            )
        spanish, ladino = fields[0].strip(), fields[1].strip()
        if not spanish or " " in spanish:
            raise LexiconFormatError(lineno, "key must be a non-empty single token")
        if not ladino:
            raise LexiconFormatError(lineno, "empty Ladino side")
        key = fold_key(spanish)
        if key in word_map:
            logger.warning(
                "lexicon line %d: duplicate key %r overrides earlier entry", lineno, key
            )
        word_map[key] = ladino
    return Lexicon(word_map)


def lookup(lex: Lexicon, form: str) -> Optional[str]:
    """Exact-match lookup on the lowercase accent-folded key."""
    return lex.lookup(form)


@dataclass(frozen=True)
class PhraseRule:
    pattern: tuple[str, ...]
    replacement: tuple[str, ...]


@dataclass(frozen=True)
class PhraseRules:
    """Multi-word corrections, matched longest-first, scanned left to right."""

    rules: tuple[PhraseRule, ...]

    def __len__(self) -> int:
        return len(self.rules)

    def sorted_by_length(self) -> list[PhraseRule]:
        return sorted(self.rules, key=lambda r: len(r.pattern), reverse=True)


def load_phrase_rules(source: Source) -> PhraseRules:
    rules = []
    text = _read_text(source)
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split("\t")
        if len(fields) != 2:
            raise LexiconFormatError(
                lineno, f"expected pattern<TAB>replacement, got {len(fields)} field(s)"
            )
        pattern = tuple(fields[0].split())
        replacement = tuple(fields[1].split())
        if len(pattern) < 2:
            raise LexiconFormatError(lineno, "phrase pattern needs at least 2 tokens")
        if not replacement:
            raise LexiconFormatError(lineno, "empty replacement")
        rules.append(PhraseRule(pattern, replacement))
    return PhraseRules(tuple(rules))


def apply_phrase_rules(tokens: list[str], rules: PhraseRules) -> list[str]:
    """Replace phrase-pattern occurrences in a Ladino token sequence.

    Matching is case-insensitive; at each position the longest pattern wins
    and the scan continues past the replacement (no overlaps). A replacement
    keeps the capitalization of the first matched token, so sentence-initial
    matches come out capitalized.
    """
    ordered = rules.sorted_by_length()
    out: list[str] = []
    i = 0
    while i < len(tokens):
        matched = None
        for rule in ordered:
            span = len(rule.pattern)
            window = tokens[i : i + span]
            if len(window) == span and tuple(t.lower() for t in window) == rule.pattern:
                matched = rule
                break
        if matched is None:
            out.append(tokens[i])
            i += 1
            continue
        replacement = list(matched.replacement)
        if tokens[i][:1].isupper() and replacement:
            replacement[0] = replacement[0][:1].upper() + replacement[0][1:]
        out.extend(replacement)
        i += len(matched.pattern)
    return out


def default_lexicon() -> Lexicon:
    """The shipped mini-lexicon (covers the golden-test vocabulary)."""
    return load_lexicon(data_path("mini_lexicon.tsv"))


def default_phrase_rules() -> PhraseRules:
    return load_phrase_rules(data_path("phrase_rules.tsv"))
