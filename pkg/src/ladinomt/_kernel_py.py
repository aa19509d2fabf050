"""Pure-Python respelling engine.

Reference implementation of the rule-application loop; ladinomt._kernel is
the compiled twin with identical semantics. ladinomt.orthography picks one
at import time.

A rule is (pattern, replacement, context_code). Each rule is swept
left-to-right over the word, non-overlapping, and re-swept until it stops
changing the word; only then does the next rule run. Context conditions are
evaluated against the word as it stood at the start of the current sweep.
"""

from __future__ import annotations

CTX_NONE = 0
CTX_WORD_INITIAL = 1
CTX_WORD_FINAL = 2
CTX_BEFORE_AOU = 3
CTX_BEFORE_EI = 4
CTX_INTERVOCALIC = 5
CTX_STANDALONE = 6

# Sweep and growth caps, guards pathological rule files (e.g. "a" -> "aa").
MAX_SWEEPS = 32
MAX_WORD_LENGTH = 4096

_VOWELS = "aeiouáéíóúü"
_VOWELS_AOU = "aouáóú"
_VOWELS_EI = "eiéí"


def _context_ok(word: str, start: int, end: int, ctx: int) -> bool:
    if ctx == CTX_NONE:
        return True
    if ctx == CTX_WORD_INITIAL:
        return start == 0
    if ctx == CTX_WORD_FINAL:
        return end == len(word)
    if ctx == CTX_BEFORE_AOU:
        return end < len(word) and word[end] in _VOWELS_AOU
    if ctx == CTX_BEFORE_EI:
        return end < len(word) and word[end] in _VOWELS_EI
    if ctx == CTX_INTERVOCALIC:
        return (
            start > 0
            and end < len(word)
            and word[start - 1] in _VOWELS
            and word[end] in _VOWELS
        )
    if ctx == CTX_STANDALONE:
        return start == 0 and end == len(word)
    raise ValueError(f"unknown context code: {ctx}")


def _sweep(word: str, pattern: str, replacement: str, ctx: int) -> str:
    m = len(pattern)
    if m == 0 or m > len(word):
        return word
    out: list[str] = []
    i = 0
    n = len(word)
    while i < n:
        if word[i : i + m] == pattern and _context_ok(word, i, i + m, ctx):
            out.append(replacement)
            i += m
        else:
            out.append(word[i])
            i += 1
    return "".join(out)


def apply_rules(word: str, rules: list[tuple[str, str, int]]) -> str:
    """Apply compiled respelling rules to a single lowercase word."""
    for pattern, replacement, ctx in rules:
        if ctx == CTX_NONE:
            # context-free rules: str.replace has the same sweep semantics
            for _ in range(MAX_SWEEPS):
                if len(word) > MAX_WORD_LENGTH:
                    break
                swept = word.replace(pattern, replacement)
                if swept == word:
                    break
                word = swept
        else:
            for _ in range(MAX_SWEEPS):
                if len(word) > MAX_WORD_LENGTH:
                    break
                swept = _sweep(word, pattern, replacement, ctx)
                if swept == word:
                    break
                word = swept
    return word
