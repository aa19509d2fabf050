"""Spanish -> Judeo-Spanish orthographic transduction.

Words the dictionary does not cover are respelled into Ladino romanization
by an ordered list of context-aware rules; the conjugator reuses the same
rules to keep generated forms in valid spelling. The rule inventory lives in
data/ortho_rules.tsv and can be edited without touching code.

The sweep engine comes in two interchangeable builds: a compiled extension
(ladinomt._kernel) and a pure-Python fallback (ladinomt._kernel_py). The
compiled one is preferred when importable; set LADINOMT_PURE_PYTHON=1 to
force the fallback. benchmarks/bench_respell.py compares the two.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Iterable, Union

from ladinomt import _kernel_py
from ladinomt.resources import data_path

if os.environ.get("LADINOMT_PURE_PYTHON"):
    _engine = _kernel_py
else:
    try:
        from ladinomt import _kernel as _engine  # type: ignore[no-redef]
    except ImportError:
        _engine = _kernel_py

#: Which sweep engine is active: "cython" or "python".
KERNEL = "cython" if _engine.__name__.endswith("._kernel") else "python"

_CONTEXT_CODES = {
    "word-initial": _kernel_py.CTX_WORD_INITIAL,
    "word-final": _kernel_py.CTX_WORD_FINAL,
    "before-vowel:AOU": _kernel_py.CTX_BEFORE_AOU,
    "before-vowel:EI": _kernel_py.CTX_BEFORE_EI,
    "intervocalic": _kernel_py.CTX_INTERVOCALIC,
    "standalone-word": _kernel_py.CTX_STANDALONE,
}


class OrthoRuleError(ValueError):
    """A rule file line could not be parsed."""


@dataclass(frozen=True)
class OrthoRule:
    pattern: str
    replacement: str
    context: str | None = None


@dataclass(frozen=True)
class OrthoRuleSet:
    """Ordered respelling rules plus their engine-ready compiled form."""

    rules: tuple[OrthoRule, ...]
    _compiled: list[tuple[str, str, int]] = field(repr=False, default_factory=list)

    @classmethod
    def from_rules(cls, rules: Iterable[OrthoRule]) -> "OrthoRuleSet":
        rules = tuple(rules)
        compiled = [
            (r.pattern, r.replacement, _CONTEXT_CODES[r.context] if r.context else 0)
            for r in rules
        ]
        return cls(rules, compiled)


def parse_rules(text: str) -> OrthoRuleSet:
    """Parse the tab-separated rule format (# comments, blank lines ok)."""
    rules = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = line.rstrip("\n").split("\t")
        if len(fields) not in (2, 3):
            raise OrthoRuleError(f"line {lineno}: expected 2 or 3 tab-separated fields")
        pattern = fields[0]
        replacement = fields[1]
        context = fields[2].strip() if len(fields) == 3 and fields[2].strip() else None
        if not pattern:
            raise OrthoRuleError(f"line {lineno}: empty pattern")
        if context is not None and context not in _CONTEXT_CODES:
            raise OrthoRuleError(f"line {lineno}: unknown context flag {context!r}")
        rules.append(OrthoRule(pattern, replacement, context))
    return OrthoRuleSet.from_rules(rules)


def load_rules(source: Union[str, Path, IO[bytes]]) -> OrthoRuleSet:
    if hasattr(source, "read"):
        raw = source.read()
        text = raw.decode("utf-8") if isinstance(raw, bytes) else raw
    else:
        text = Path(source).read_text(encoding="utf-8")
    return parse_rules(text)


def default_rules() -> OrthoRuleSet:
    """The shipped rule set (see data/ortho_rules.tsv)."""
    return load_rules(data_path("ortho_rules.tsv"))


def respell(word: str, rules: OrthoRuleSet) -> str:
    """Transduce one Spanish-spelled token into Ladino orthography.

    Rules run on the lowercase form; the case of the first character is
    restored afterwards. If the rules annihilate the word entirely (e.g. a
    bare "h"), the input is returned unchanged rather than an empty string.
    """
    if not word:
        return word
    lowered = word.lower()
    respelled = _engine.apply_rules(lowered, rules._compiled)
    if not respelled:
        return word
    if word[0].isupper():
        respelled = respelled[0].upper() + respelled[1:]
    return respelled
