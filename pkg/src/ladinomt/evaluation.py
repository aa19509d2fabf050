"""BLEU scoring under the lowercased Moses-tokenized protocol.

corpus_bleu lowercases hypothesis and reference, tokenizes both with a
Moses-style tokenizer, accumulates clipped 1..4-gram counts corpus-wide and
applies the standard brevity penalty. Unsmoothed by default; a floor
smoother is available behind a flag.

The tokenizer reimplements the subset of the Moses script this toolkit
needs: punctuation splitting, comma and apostrophe handling, multi-dot
protection, and non-breaking prefixes. Intra-word hyphens stay intact.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from ladinomt.resources import data_path

MAX_NGRAM_ORDER = 4

# everything except word chars, whitespace and . ' ` , - gets spaced out
_SPLIT_PUNCT_RE = re.compile(r"([^\w\s.'`,\-])")
_COMMA_BEFORE_RE = re.compile(r"([^\d]),")
_COMMA_AFTER_RE = re.compile(r",([^\d])")
_MULTIDOT_RE = re.compile(r"\.(\.+)")
_ACRONYM_RE = re.compile(r"^(?:[^\W\d_]\.)+[^\W\d_]?$")


class EvaluationError(ValueError):
    pass


@lru_cache(maxsize=1)
def _nonbreaking_prefixes() -> frozenset[str]:
    prefixes = set()
    for line in data_path("nonbreaking_prefixes.txt").read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            prefixes.add(line)
    return frozenset(prefixes)


def _split_final_period(word: str, next_word: Optional[str]) -> list[str]:
    if len(word) < 2 or not word.endswith(".") or word.endswith(".."):
        return [word]
    pre = word[:-1]
    if "." in pre and _ACRONYM_RE.match(word):
        return [word]  # acronym like U.S.
    if pre in _nonbreaking_prefixes():
        return [word]
    if next_word is not None and next_word[:1].islower():
        return [word]  # mid-sentence abbreviation heuristic
    return [pre, "."]


def moses_tokenize(line: str) -> list[str]:
    """Tokenize one line the way the Moses tokenizer would."""
    if not line.strip():
        return []
    text = _MULTIDOT_RE.sub(lambda m: " DOTMULTI" + m.group(1), line)
    text = _SPLIT_PUNCT_RE.sub(r" \1 ", text)
    text = _COMMA_BEFORE_RE.sub(r"\1 , ", text)
    text = _COMMA_AFTER_RE.sub(r" , \1", text)
    text = text.rstrip()
    if text.endswith(","):
        text = text[:-1] + " ,"
    text = text.replace("'", " ' ").replace("`", " ` ")
    words = text.split()
    tokens: list[str] = []
    for i, word in enumerate(words):
        nxt = words[i + 1] if i + 1 < len(words) else None
        tokens.extend(_split_final_period(word, nxt))
    return [t.replace("DOTMULTI", ".") for t in tokens]


@dataclass(frozen=True)
class BleuScore:
    score: float
    ngram_precisions: tuple[float, float, float, float]
    brevity_penalty: float
    hyp_length: int
    ref_length: int

    def format(self) -> str:
        p = "/".join(f"{x * 100:.1f}" for x in self.ngram_precisions)
        return (
            f"BLEU = {self.score:.2f} ({p}, BP={self.brevity_penalty:.3f}, "
            f"hyp_len={self.hyp_length}, ref_len={self.ref_length})"
        )


def _ngram_counts(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def corpus_bleu(
    hypotheses: Sequence[str],
    references: Sequence[str],
    lowercase: bool = True,
    smooth_floor: Optional[float] = None,
) -> BleuScore:
    """Corpus-level 4-gram BLEU with brevity penalty, 0-100 scale.

    Orders with no n-grams anywhere in the corpus (very short inputs) are
    left out of the geometric mean and reported as precision 1.0, so a
    perfect one-word corpus still scores 100. With smooth_floor set, zero
    match counts are replaced by that value instead of zeroing the score.
    """
    if len(hypotheses) != len(references):
        raise EvaluationError(
            f"line count mismatch: {len(hypotheses)} hypotheses vs "
            f"{len(references)} references"
        )
    if not hypotheses:
        raise EvaluationError("empty corpus")
    if all(not r.strip() for r in references):
        raise EvaluationError("all references are empty")

    correct = [0] * MAX_NGRAM_ORDER
    total = [0] * MAX_NGRAM_ORDER
    hyp_len = 0
    ref_len = 0
    for hyp, ref in zip(hypotheses, references):
        if lowercase:
            hyp, ref = hyp.lower(), ref.lower()
        hyp_tokens = moses_tokenize(hyp)
        ref_tokens = moses_tokenize(ref)
        hyp_len += len(hyp_tokens)
        ref_len += len(ref_tokens)
        for n in range(1, MAX_NGRAM_ORDER + 1):
            hyp_counts = _ngram_counts(hyp_tokens, n)
            ref_counts = _ngram_counts(ref_tokens, n)
            total[n - 1] += max(len(hyp_tokens) - n + 1, 0)
            correct[n - 1] += sum(
                min(count, ref_counts[gram]) for gram, count in hyp_counts.items()
            )

    precisions = []
    log_sum = 0.0
    effective_orders = 0
    zero_precision = False
    for n in range(MAX_NGRAM_ORDER):
        if total[n] == 0:
            precisions.append(1.0)
            continue
        matches = correct[n]
        if matches == 0 and smooth_floor is not None:
            matches = smooth_floor
        p = matches / total[n]
        precisions.append(p)
        effective_orders += 1
        if p == 0.0:
            zero_precision = True
        else:
            log_sum += math.log(p)

    if hyp_len < ref_len:
        bp = math.exp(1.0 - ref_len / max(hyp_len, 1))
    else:
        bp = 1.0

    if zero_precision or hyp_len == 0:
        score = 0.0
    else:
        mean = log_sum / effective_orders if effective_orders else 0.0
        score = 100.0 * bp * math.exp(mean)
    return BleuScore(score, tuple(precisions), bp, hyp_len, ref_len)
