"""Judeo-Spanish morphological generation.

Conjugates a Ladino verb lemma according to the features carried over from
the Spanish source token, using regular paradigm endings plus an
irregular-form override table (both shipped as editable data files). Every
generated form is passed through the orthography rules so the conjugator
never has to duplicate spelling adjustments. Nouns only copy number: a
plural source pluralizes the mapped Ladino form.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import IO, Optional, Union

from ladinomt.analysis import Number, Person, Tense, VerbFeatures
from ladinomt.orthography import OrthoRuleSet, respell
from ladinomt.resources import data_path

VERB_CLASSES = ("AR", "ER", "IR")

#: Tenses with a fully populated regular grid.
IMPLEMENTED_TENSES = (Tense.PRESENT, Tense.PRETERITE, Tense.IMPERFECT, Tense.FUTURE)

_VOWELS = "aeiou"


class ConjugationError(ValueError):
    pass


GridKey = tuple[str, Tense, Optional[Person], Optional[Number]]


@dataclass(frozen=True)
class ConjugationTable:
    """Regular endings by (class, tense, person, number) plus irregulars."""

    regular: dict[GridKey, str]
    irregular: dict[tuple[str, Tense, Optional[Person], Optional[Number]], str]

    def __post_init__(self):
        missing = [
            (cls, tense.value, person.value, number.value)
            for cls in VERB_CLASSES
            for tense in IMPLEMENTED_TENSES
            for person in Person
            for number in Number
            if (cls, tense, person, number) not in self.regular
        ]
        if missing:
            raise ConjugationError(f"paradigm table incomplete, missing cells: {missing}")


def _read_text(source: Union[str, Path, IO[bytes]]) -> str:
    if hasattr(source, "read"):
        raw = source.read()
        return raw.decode("utf-8") if isinstance(raw, bytes) else raw
    return Path(source).read_text(encoding="utf-8")


def load_table(
    paradigm_source: Union[str, Path, IO[bytes]],
    irregular_source: Union[str, Path, IO[bytes], None] = None,
) -> ConjugationTable:
    regular: dict[GridKey, str] = {}
    for lineno, line in enumerate(_read_text(paradigm_source).splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = stripped.split("\t")
        if len(fields) != 5:
            raise ConjugationError(f"paradigm line {lineno}: expected 5 fields")
        cls, tense, person, number, ending = fields
        if cls not in VERB_CLASSES:
            raise ConjugationError(f"paradigm line {lineno}: unknown class {cls!r}")
        key = (
            cls,
            Tense(tense),
            Person(person) if person != "-" else None,
            Number(number) if number != "-" else None,
        )
        regular[key] = ending

    irregular: dict[tuple[str, Tense, Optional[Person], Optional[Number]], str] = {}
    if irregular_source is not None:
        for lineno, line in enumerate(_read_text(irregular_source).splitlines(), start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            fields = stripped.split("\t")
            if len(fields) != 5:
                raise ConjugationError(f"irregulars line {lineno}: expected 5 fields")
            lemma, tense, person, number, form = fields
            key = (
                lemma,
                Tense(tense),
                Person(person) if person != "-" else None,
                Number(number) if number != "-" else None,
            )
            irregular[key] = form
    return ConjugationTable(regular, irregular)


def default_table() -> ConjugationTable:
    return load_table(data_path("conjugation.tsv"), data_path("irregular_forms.tsv"))


def verb_class(lemma: str) -> str:
    suffix = lemma[-2:].lower()
    if len(lemma) > 2 and suffix in ("ar", "er", "ir"):
        return suffix.upper()
    raise ConjugationError(f"not an infinitive (expected -ar/-er/-ir): {lemma!r}")


def conjugate(
    lemma: str,
    features: VerbFeatures,
    table: ConjugationTable,
    ortho: OrthoRuleSet,
) -> str:
    """Inflect a Ladino lemma for the given features.

    Irregular overrides win outright. Regular forms are stem + ending
    (future endings attach to the whole infinitive), then respelled so that
    stem-final consonant adjustments happen in exactly one place. The
    infinitive comes back unchanged; PRESENT_PERFECT must have been folded
    into PRETERITE upstream, and tenses outside the implemented grid are an
    error rather than a silent fallback.
    """
    cls = verb_class(lemma)
    tense = features.tense

    if tense is Tense.INFINITIVE:
        return lemma
    if tense is Tense.PRESENT_PERFECT:
        raise ConjugationError(
            "PRESENT_PERFECT must be converted to PRETERITE before conjugation"
        )

    override = table.irregular.get((lemma, tense, features.person, features.number))
    if override is not None:
        return override

    if tense in (Tense.PARTICIPLE, Tense.GERUND):
        key: GridKey = (cls, tense, None, None)
        stem = lemma[:-2]
    elif tense in IMPLEMENTED_TENSES:
        if features.person is None or features.number is None:
            raise ConjugationError(f"{tense.value} requires person and number")
        key = (cls, tense, features.person, features.number)
        stem = lemma if tense is Tense.FUTURE else lemma[:-2]
    else:
        raise ConjugationError(f"tense {tense.value} is outside the implemented grid")

    ending = table.regular.get(key)
    if ending is None:
        raise ConjugationError(f"no paradigm cell for {key}")
    return respell(stem + ending, ortho)


def pluralize_noun(form: str) -> str:
    """Append the Ladino plural suffix: -s after a vowel, -es otherwise."""
    if not form:
        return form
    return form + ("s" if form[-1].lower() in _VOWELS else "es")
