"""Tokenization and shallow morphological analysis of Spanish input.

A deterministic stand-in for a statistical tagger: a closed-class word list,
dictionary-informed lookups and a verb-suffix table give each token a coarse
POS, a lemma, and (for verbs) tense/person/number. Precedence on ambiguity
is fixed: word-list entry > dictionary surface hit > verb-suffix match >
noun fallback. Accented endings are inspected before any accent folding
because the accent carries tense (habló vs hablo).

All functions are pure; the shipped word list and suffix table are loaded
once and never mutated, so everything here is safe to call from any thread.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from pathlib import Path
from typing import IO, Optional, Sequence, Union

from ladinomt.lexicon import Lexicon, fold_key
from ladinomt.resources import data_path


class Pos(Enum):
    VERB = "VERB"
    NOUN = "NOUN"
    ADJ = "ADJ"
    DET = "DET"
    PRON = "PRON"
    ADP = "ADP"
    ADV = "ADV"
    CONJ = "CONJ"
    PUNCT = "PUNCT"
    NUM = "NUM"
    OTHER = "OTHER"


class Tense(Enum):
    PRESENT = "PRESENT"
    PRETERITE = "PRETERITE"
    IMPERFECT = "IMPERFECT"
    FUTURE = "FUTURE"
    CONDITIONAL = "CONDITIONAL"
    PARTICIPLE = "PARTICIPLE"
    INFINITIVE = "INFINITIVE"
    GERUND = "GERUND"
    PRESENT_PERFECT = "PRESENT_PERFECT"


class Person(Enum):
    P1 = "P1"
    P2 = "P2"
    P3 = "P3"


class Number(Enum):
    SG = "SG"
    PL = "PL"


_FINITE = {Tense.PRESENT, Tense.PRETERITE, Tense.IMPERFECT, Tense.FUTURE,
           Tense.CONDITIONAL, Tense.PRESENT_PERFECT}

_NONFINITE = {Tense.PARTICIPLE, Tense.INFINITIVE, Tense.GERUND}


@dataclass(frozen=True)
class VerbFeatures:
    tense: Tense
    person: Optional[Person] = None
    number: Optional[Number] = None

    def __post_init__(self):
        if self.tense in _NONFINITE and (self.person or self.number):
            raise ValueError(f"{self.tense.value} forms carry no person/number")


@dataclass(frozen=True)
class AnalyzedToken:
    """One analyzed token; the unit flowing through the pipeline.

    A fused present-perfect unit (produced by detect_present_perfect) spans
    two source tokens: `parts` keeps the original surfaces and `surface`
    joins them with a space. Tokens coming straight out of analyze() always
    have parts == None and a whitespace-free surface.
    """

    surface: str
    normalized: str
    pos: Pos
    lemma: str
    features: Optional[VerbFeatures] = None
    parts: Optional[tuple[str, ...]] = None

    @property
    def capitalized(self) -> bool:
        return self.surface[:1].isupper()


_TOKEN_RE = re.compile(r"\d+(?:[.,]\d+)+|\w+(?:['\-]\w+)*|[^\w\s]")

_NUM_RE = re.compile(r"\d+(?:[.,]\d+)*")

_VOWELS = "aeiouáéíóú"


def tokenize(text: str) -> list[str]:
    """Split text into word and punctuation tokens.

    Punctuation marks (including the inverted ones and guillemets) become
    separate single-character tokens; decimal numbers and hyphenated or
    apostrophized words stay whole. Empty input gives an empty list.
    """
    return _TOKEN_RE.findall(text)


def is_punct(token: str) -> bool:
    return bool(token) and all(not ch.isalnum() and not ch.isspace() for ch in token)


# --- shipped analyzer data ---------------------------------------------------

@dataclass(frozen=True)
class WordListEntry:
    pos: Pos
    lemma: Optional[str] = None
    features: Optional[VerbFeatures] = None


@dataclass(frozen=True)
class SuffixRule:
    suffix: str
    tense: Tense
    person: Optional[Person]
    number: Optional[Number]
    mode: str  # stem | infinitive | self


def _parse_wordlist(text: str) -> dict[str, WordListEntry]:
    entries: dict[str, WordListEntry] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split("\t")
        if len(fields) not in (2, 3):
            raise ValueError(f"wordlist line {lineno}: expected 2 or 3 fields")
        form = fields[0].lower()
        pos = Pos(fields[1])
        if form in entries:
            continue  # first entry per form wins
        if pos is Pos.VERB:
            if len(fields) != 3:
                raise ValueError(f"wordlist line {lineno}: VERB entry needs features")
            lemma, tense, person, number = (f.strip() for f in fields[2].split(","))
            features = VerbFeatures(
                Tense(tense),
                Person(person) if person != "-" else None,
                Number(number) if number != "-" else None,
            )
            entries[form] = WordListEntry(pos, lemma, features)
        else:
            entries[form] = WordListEntry(pos)
    return entries


def _parse_suffixes(text: str) -> list[SuffixRule]:
    rules = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split("\t")
        if len(fields) != 5:
            raise ValueError(f"suffix table line {lineno}: expected 5 fields")
        suffix, tense, person, number, mode = fields
        if mode not in ("stem", "infinitive", "self"):
            raise ValueError(f"suffix table line {lineno}: bad mode {mode!r}")
        rules.append(
            SuffixRule(
                suffix,
                Tense(tense),
                Person(person) if person != "-" else None,
                Number(number) if number != "-" else None,
                mode,
            )
        )
    # longest suffix first; file order breaks ties
    return sorted(rules, key=lambda r: -len(r.suffix))


@lru_cache(maxsize=1)
def default_wordlist() -> dict[str, WordListEntry]:
    return _parse_wordlist(data_path("wordlist.tsv").read_text(encoding="utf-8"))


@lru_cache(maxsize=1)
def default_suffix_rules() -> tuple[SuffixRule, ...]:
    return tuple(_parse_suffixes(data_path("verb_suffixes.tsv").read_text(encoding="utf-8")))


def load_wordlist(source: Union[str, Path, IO[bytes]]) -> dict[str, WordListEntry]:
    if hasattr(source, "read"):
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    else:
        text = Path(source).read_text(encoding="utf-8")
    return _parse_wordlist(text)


# --- analysis ----------------------------------------------------------------

def _strip_plural(form: str) -> str:
    """Conservative plural stripping: vowel+s drops -s, consonant+es drops -es."""
    if len(form) > 2 and form.endswith("es") and form[-3] not in _VOWELS:
        return form[:-2]
    if len(form) > 1 and form.endswith("s") and form[-2] in _VOWELS:
        return form[:-1]
    if len(form) > 1 and form.endswith("s"):
        return form[:-1]
    return form


def _verb_lemma_candidates(normalized: str, rule: SuffixRule) -> list[str]:
    base = normalized[: -len(rule.suffix)]
    if rule.mode == "self":
        return [normalized]
    if rule.mode == "infinitive":
        return [base] if base.endswith(("ar", "er", "ir")) else []
    return [base + "ar", base + "er", base + "ir"]


def _try_verb(
    normalized: str,
    known: "KnownLemmas",
    suffix_rules: Sequence[SuffixRule],
    finite_ok: bool = True,
) -> Optional[tuple[str, VerbFeatures]]:
    for rule in suffix_rules:
        if len(rule.suffix) >= len(normalized) or not normalized.endswith(rule.suffix):
            continue
        if not finite_ok and rule.tense in _FINITE:
            continue
        for candidate in _verb_lemma_candidates(normalized, rule):
            if candidate in known:
                return candidate, VerbFeatures(rule.tense, rule.person, rule.number)
    return None


class KnownLemmas:
    """Membership test for verb lemmas: lexicon keys plus word-list lemmas."""

    def __init__(self, lexicon: Lexicon, wordlist: dict[str, WordListEntry]):
        self._lexicon = lexicon
        self._extra = {
            fold_key(e.lemma) for e in wordlist.values() if e.lemma is not None
        }

    def __contains__(self, lemma: str) -> bool:
        key = fold_key(lemma)
        return key in self._extra or self._lexicon.lookup(key) is not None


def analyze(
    tokens: Sequence[str],
    lexicon: Lexicon,
    wordlist: Optional[dict[str, WordListEntry]] = None,
    suffix_rules: Optional[Sequence[SuffixRule]] = None,
) -> list[AnalyzedToken]:
    """Assign POS, lemma and verb features to each raw token, in order.

    Every token gets an analysis; unknown words fall back to NOUN with a
    plural-stripped lemma. A token whose surface is itself a dictionary key
    suppresses finite verb readings (the dictionary will translate it
    directly), while infinitives keep their VERB reading.
    """
    if wordlist is None:
        wordlist = default_wordlist()
    if suffix_rules is None:
        suffix_rules = default_suffix_rules()
    known = KnownLemmas(lexicon, wordlist)

    out = []
    for surface in tokens:
        normalized = surface.lower()
        if is_punct(surface):
            out.append(AnalyzedToken(surface, normalized, Pos.PUNCT, surface))
            continue
        if _NUM_RE.fullmatch(surface):
            out.append(AnalyzedToken(surface, normalized, Pos.NUM, normalized))
            continue
        listed = wordlist.get(normalized)
        if listed is not None:
            out.append(
                AnalyzedToken(
                    surface,
                    normalized,
                    listed.pos,
                    listed.lemma or normalized,
                    listed.features,
                )
            )
            continue
        finite_ok = lexicon.lookup(normalized) is None
        verb = _try_verb(normalized, known, suffix_rules, finite_ok)
        if verb is not None:
            lemma, features = verb
            out.append(AnalyzedToken(surface, normalized, Pos.VERB, lemma, features))
            continue
        out.append(AnalyzedToken(surface, normalized, Pos.NOUN, _strip_plural(normalized)))
    return out


_AUX_HABER = {
    "he": (Person.P1, Number.SG),
    "has": (Person.P2, Number.SG),
    "ha": (Person.P3, Number.SG),
    "hemos": (Person.P1, Number.PL),
    "habéis": (Person.P2, Number.PL),
    "habeis": (Person.P2, Number.PL),
    "han": (Person.P3, Number.PL),
}


def detect_present_perfect(tokens: Sequence[AnalyzedToken]) -> list[AnalyzedToken]:
    """Fuse haber + participle pairs into single preterite verb units.

    Spanish present perfect maps to the simple past, so "has leido" becomes
    one token with the participle's lemma, tense PRETERITE and the
    auxiliary's person/number. An auxiliary without a following participle
    passes through untouched. Idempotent: fused units never re-fuse.
    """
    out: list[AnalyzedToken] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        aux = _AUX_HABER.get(tok.normalized) if tok.parts is None else None
        if aux is not None and i + 1 < len(tokens):
            nxt = tokens[i + 1]
            if (
                nxt.pos is Pos.VERB
                and nxt.features is not None
                and nxt.features.tense is Tense.PARTICIPLE
            ):
                person, number = aux
                out.append(
                    AnalyzedToken(
                        surface=f"{tok.surface} {nxt.surface}",
                        normalized=f"{tok.normalized} {nxt.normalized}",
                        pos=Pos.VERB,
                        lemma=nxt.lemma,
                        features=VerbFeatures(Tense.PRETERITE, person, number),
                        parts=(tok.surface, nxt.surface),
                    )
                )
                i += 2
                continue
        out.append(tok)
        i += 1
    return out


def is_plural_noun(token: AnalyzedToken) -> bool:
    """True when a non-verb token looks like a stripped plural."""
    if token.pos is Pos.VERB or token.lemma == token.normalized:
        return False
    return token.normalized in (token.lemma + "s", token.lemma + "es")


def singular_alternatives(token: AnalyzedToken) -> list[str]:
    """Lemma candidates to retry in the dictionary for a plural noun."""
    alts = [token.lemma]
    n = token.normalized
    if n.endswith("es") and n[:-2] not in alts:
        alts.append(n[:-2])
    if n.endswith("s") and n[:-1] not in alts:
        alts.append(n[:-1])
    return alts
