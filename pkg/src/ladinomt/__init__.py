"""Rule-based Spanish to Judeo-Spanish (Ladino) translation toolkit.

Shallow-transfer translation engine plus the corpus machinery around it:
sentence segmentation, synthetic parallel-data augmentation, BLEU
evaluation, a CLI, and an HTTP service that collects human-corrected
translations as future parallel data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ladinomt import lexicon as _lexicon
from ladinomt import morphogen as _morphogen
from ladinomt import orthography as _orthography
from ladinomt.lexicon import Lexicon, PhraseRules
from ladinomt.morphogen import ConjugationTable
from ladinomt.orthography import OrthoRuleSet
from ladinomt.translator import TranslationResult, translate, translate_batch

__version__ = "0.1.0"


@dataclass(frozen=True)
class TranslationEngine:
    """All rule data bundled, with convenience translate wrappers."""

    lexicon: Lexicon
    phrases: PhraseRules
    table: ConjugationTable
    ortho: OrthoRuleSet

    def translate(self, text: str) -> TranslationResult:
        return translate(text, self.lexicon, self.phrases, self.table, self.ortho)

    def translate_batch(self, lines: Sequence[str]) -> list[TranslationResult]:
        return translate_batch(lines, self.lexicon, self.phrases, self.table, self.ortho)


def default_engine() -> TranslationEngine:
    """Engine backed by the shipped rule data files."""
    return TranslationEngine(
        lexicon=_lexicon.default_lexicon(),
        phrases=_lexicon.default_phrase_rules(),
        table=_morphogen.default_table(),
        ortho=_orthography.default_rules(),
    )
