"""Parallel-corpus engineering around the rule-based translator.

Moses format (two plain-text files aligned line by line) is the interchange
format throughout; file names follow the `name.src-tgt.lang` convention.
Provides sentence segmentation, synthetic-data augmentation (translating
the Spanish side of an existing bitext into Ladino), merging with exact
deduplication, dev/test splitting, token statistics and a resumable,
cached corpus fetcher with injectable transport.
"""

from __future__ import annotations

import hashlib
import os
import random
import re
import shutil
import urllib.error
import urllib.parse
import urllib.request
import zipfile
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Callable, Optional, Sequence

from ladinomt.evaluation import moses_tokenize
from ladinomt.resources import data_path
from ladinomt.translator import TranslationResult

CACHE_ENV_VAR = "LADINOMT_CACHE_DIR"

#: translate_batch-shaped callable: lines in, results out, order preserved.
BatchTranslator = Callable[[Sequence[str]], Sequence[TranslationResult]]

#: transport(url, dest, resume_from) appends the byte range [resume_from:] of
#: url to dest; tests inject counting stubs here.
Transport = Callable[[str, Path, int], None]


class CorpusError(ValueError):
    pass


class AlignmentError(CorpusError):
    pass


class FetchError(CorpusError):
    """Network-level failure; retrying may succeed."""


@dataclass(frozen=True)
class ParallelCorpus:
    src_lang: str
    tgt_lang: str
    pairs: tuple[tuple[str, str], ...]
    name: str = ""

    def __post_init__(self):
        for i, (src, tgt) in enumerate(self.pairs):
            if "\n" in src or "\n" in tgt:
                raise CorpusError(f"pair {i}: lines must not contain newlines")

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def src_lines(self) -> list[str]:
        return [src for src, _ in self.pairs]

    @property
    def tgt_lines(self) -> list[str]:
        return [tgt for _, tgt in self.pairs]


@dataclass(frozen=True)
class CorpusStats:
    sentence_count: int
    token_count: int

    def __add__(self, other: "CorpusStats") -> "CorpusStats":
        return CorpusStats(
            self.sentence_count + other.sentence_count,
            self.token_count + other.token_count,
        )


# --- sentence segmentation ---------------------------------------------------

_TERMINATORS = ".!?"
_CLOSERS = "\"'”’»›)]"
_OPENERS = "¿¡«‹(['\"“‘"

_WS_RE = re.compile(r"\s+")


@lru_cache(maxsize=1)
def _abbreviations() -> frozenset[str]:
    abbrevs = set()
    for line in data_path("abbreviations.txt").read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            abbrevs.add(line.lower())
    return frozenset(abbrevs)


def segment_sentences(text: str) -> list[str]:
    """Split text into sentences on terminal punctuation.

    A boundary is a run of . ! ? (plus any closing quotes) followed by
    whitespace and an uppercase letter or digit; known abbreviations like
    Sr. never split. Joining the output with single spaces reproduces the
    whitespace-normalized input.
    """
    normalized = _WS_RE.sub(" ", text).strip()
    if not normalized:
        return []
    sentences = []
    start = 0
    i = 0
    n = len(normalized)
    while i < n:
        ch = normalized[i]
        if ch not in _TERMINATORS:
            i += 1
            continue
        end = i
        while end < n and normalized[end] in _TERMINATORS:
            end += 1
        while end < n and normalized[end] in _CLOSERS:
            end += 1
        if end >= n or normalized[end] != " ":
            i = end
            continue
        j = end + 1
        while j < n and normalized[j] in _OPENERS:
            j += 1
        follower = normalized[j] if j < n else ""
        if not (follower.isupper() or follower.isdigit()):
            i = end
            continue
        if ch == "." and end - i == 1:
            word_start = normalized.rfind(" ", 0, i) + 1
            word = normalized[word_start:end]
            if word.lower() in _abbreviations():
                i = end
                continue
        sentences.append(normalized[start:end])
        start = end + 1
        i = end + 1
    if start < n:
        sentences.append(normalized[start:])
    return sentences


# --- statistics ---------------------------------------------------------------

def stats(lines: Sequence[str]) -> CorpusStats:
    """Line count plus Moses-tokenized token count."""
    return CorpusStats(
        sentence_count=len(lines),
        token_count=sum(len(moses_tokenize(line)) for line in lines),
    )


# --- augmentation -------------------------------------------------------------

def augment(
    spa_side: Sequence[str],
    other_side: Sequence[str],
    translator: BatchTranslator,
    other_lang: str = "eng",
    name: str = "synthetic",
) -> tuple[ParallelCorpus, ParallelCorpus]:
    """Create synthetic bitexts by translating the Spanish side to Ladino.

    Returns (other-Ladino, Spanish-Ladino) corpora, both aligned with the
    input line for line.
    """
    if len(spa_side) != len(other_side):
        raise AlignmentError(
            f"line count mismatch: spa has {len(spa_side)} lines, "
            f"{other_lang} has {len(other_side)}"
        )
    ladino = [r.output for r in translator(spa_side)]
    other_lad = ParallelCorpus(
        other_lang, "lad", tuple(zip(other_side, ladino)), name=f"{name}.{other_lang}-lad"
    )
    spa_lad = ParallelCorpus(
        "spa", "lad", tuple(zip(spa_side, ladino)), name=f"{name}.spa-lad"
    )
    return other_lad, spa_lad


def merge_spanish_sides(corpora: Sequence[ParallelCorpus]) -> ParallelCorpus:
    """Concatenate Spanish-Ladino corpora, dropping exact duplicate pairs."""
    for corpus in corpora:
        if (corpus.src_lang, corpus.tgt_lang) != ("spa", "lad"):
            raise CorpusError(
                f"expected spa-lad corpus, got {corpus.src_lang}-{corpus.tgt_lang} "
                f"({corpus.name or 'unnamed'})"
            )
    seen = set()
    merged = []
    for corpus in corpora:
        for pair in corpus.pairs:
            if pair not in seen:
                seen.add(pair)
                merged.append(pair)
    return ParallelCorpus("spa", "lad", tuple(merged), name="merged.spa-lad")


# --- dev/test splitting --------------------------------------------------------

def split_devtest(
    corpus: ParallelCorpus, test_size: int, seed: int
) -> tuple[ParallelCorpus, ParallelCorpus]:
    """Deterministic seeded split into (test, dev); original order kept."""
    if test_size > len(corpus):
        raise CorpusError(
            f"test_size {test_size} exceeds corpus size {len(corpus)}"
        )
    indices = list(range(len(corpus)))
    random.Random(seed).shuffle(indices)
    test_idx = sorted(indices[:test_size])
    dev_idx = sorted(indices[test_size:])
    test = ParallelCorpus(
        corpus.src_lang,
        corpus.tgt_lang,
        tuple(corpus.pairs[i] for i in test_idx),
        name=f"{corpus.name or 'corpus'}-test",
    )
    dev = ParallelCorpus(
        corpus.src_lang,
        corpus.tgt_lang,
        tuple(corpus.pairs[i] for i in dev_idx),
        name=f"{corpus.name or 'corpus'}-dev",
    )
    return test, dev


# --- Moses-format file I/O ------------------------------------------------------

def read_lines(path: Path) -> list[str]:
    text = path.read_text(encoding="utf-8-sig")
    if not text:
        return []
    return text.splitlines()


def write_lines(path: Path, lines: Sequence[str]) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line + "\n")


def load_moses_pair(
    src_path: Path, tgt_path: Path, src_lang: str, tgt_lang: str, name: str = ""
) -> ParallelCorpus:
    src_lines = read_lines(src_path)
    tgt_lines = read_lines(tgt_path)
    if len(src_lines) != len(tgt_lines):
        raise AlignmentError(
            f"line count mismatch: {src_path} has {len(src_lines)} lines, "
            f"{tgt_path} has {len(tgt_lines)}"
        )
    return ParallelCorpus(
        src_lang, tgt_lang, tuple(zip(src_lines, tgt_lines)), name=name
    )


def write_moses_pair(corpus: ParallelCorpus, out_prefix: Path) -> tuple[Path, Path]:
    """Write `prefix.src-tgt.src` / `prefix.src-tgt.tgt`."""
    pair = f"{corpus.src_lang}-{corpus.tgt_lang}"
    src_path = Path(f"{out_prefix}.{pair}.{corpus.src_lang}")
    tgt_path = Path(f"{out_prefix}.{pair}.{corpus.tgt_lang}")
    write_lines(src_path, corpus.src_lines)
    write_lines(tgt_path, corpus.tgt_lines)
    return src_path, tgt_path


# --- fetching ---------------------------------------------------------------

_SIDE_FILE_RE = re.compile(r"^(?P<stem>.+)\.(?P<src>[A-Za-z]+)-(?P<tgt>[A-Za-z]+)\.(?P<ext>[A-Za-z]+)$")


def default_transport(url: str, dest: Path, resume_from: int = 0) -> None:
    """Fetch url into dest, appending from resume_from (http(s) and file)."""
    parsed = urllib.parse.urlparse(url)
    try:
        if parsed.scheme in ("", "file"):
            source = Path(urllib.request.url2pathname(parsed.path)) if parsed.scheme else Path(url)
            with open(source, "rb") as src, open(dest, "ab") as out:
                src.seek(resume_from)
                shutil.copyfileobj(src, out)
            return
        request = urllib.request.Request(url)
        if resume_from:
            request.add_header("Range", f"bytes={resume_from}-")
        with urllib.request.urlopen(request) as resp, open(dest, "ab") as out:
            shutil.copyfileobj(resp, out)
    except (OSError, urllib.error.URLError) as exc:
        raise FetchError(f"fetch failed for {url}: {exc}") from exc


def cache_dir(destination: Optional[Path] = None) -> Path:
    if destination is not None:
        return Path(destination)
    return Path(os.environ.get(CACHE_ENV_VAR, Path.home() / ".cache" / "ladinomt"))


def _fetch_file(url: str, dest: Path, transport: Transport) -> None:
    marker = dest.with_suffix(dest.suffix + ".ok")
    if marker.exists() and dest.exists():
        return
    dest.parent.mkdir(parents=True, exist_ok=True)
    resume_from = dest.stat().st_size if dest.exists() else 0
    transport(url, dest, resume_from)
    marker.touch()


def fetch_corpus(
    url: str,
    destination: Optional[Path] = None,
    transport: Optional[Transport] = None,
    head: Optional[int] = None,
) -> ParallelCorpus:
    """Download, cache and load a Moses-format corpus.

    Two layouts are accepted: a .zip archive holding exactly two aligned
    text members, or a side file named `stem.src-tgt.lang` whose partner
    side is derived by swapping the final extension. Downloads resume from
    partial files and are cached under the destination directory (or
    LADINOMT_CACHE_DIR) keyed by url hash; `head` keeps only the first N
    pairs (public corpora are often subsampled to round sizes).
    """
    transport = transport or default_transport
    base = cache_dir(destination)
    key = hashlib.sha256(url.encode("utf-8")).hexdigest()[:16]
    basename = Path(urllib.parse.urlparse(url).path).name or "corpus"

    if basename.endswith(".zip"):
        archive = base / f"{key}-{basename}"
        _fetch_file(url, archive, transport)
        with zipfile.ZipFile(archive) as zf:
            members = sorted(m for m in zf.namelist() if not m.endswith("/"))
            if len(members) != 2:
                raise CorpusError(
                    f"archive must hold exactly 2 files, found {len(members)}"
                )
            src_member, tgt_member = members
            side_match = _SIDE_FILE_RE.match(Path(src_member).name)
            src_lang = side_match.group("src") if side_match else "src"
            tgt_lang = side_match.group("tgt") if side_match else "tgt"
            src_lines = zf.read(src_member).decode("utf-8").splitlines()
            tgt_lines = zf.read(tgt_member).decode("utf-8").splitlines()
        if len(src_lines) != len(tgt_lines):
            raise AlignmentError(
                f"line count mismatch: {src_member} has {len(src_lines)} lines, "
                f"{tgt_member} has {len(tgt_lines)}"
            )
        pairs = tuple(zip(src_lines, tgt_lines))
        if head is not None:
            pairs = pairs[:head]
        return ParallelCorpus(src_lang, tgt_lang, pairs, name=Path(basename).stem)

    match = _SIDE_FILE_RE.match(basename)
    if match is None:
        raise CorpusError(
            "url must point to a .zip archive or a `stem.src-tgt.lang` side file"
        )
    stem, src_lang, tgt_lang, ext = match.group("stem", "src", "tgt", "ext")
    if ext not in (src_lang, tgt_lang):
        raise CorpusError(
            f"side-file extension {ext!r} matches neither language ({src_lang}, {tgt_lang})"
        )
    other_ext = tgt_lang if ext == src_lang else src_lang
    other_url = url[: -len(ext)] + other_ext

    this_dest = base / f"{key}-{basename}"
    other_dest = base / f"{key}-{stem}.{src_lang}-{tgt_lang}.{other_ext}"
    _fetch_file(url, this_dest, transport)
    _fetch_file(other_url, other_dest, transport)

    src_dest = this_dest if ext == src_lang else other_dest
    tgt_dest = other_dest if ext == src_lang else this_dest
    corpus = load_moses_pair(src_dest, tgt_dest, src_lang, tgt_lang, name=stem)
    if head is not None:
        corpus = ParallelCorpus(src_lang, tgt_lang, corpus.pairs[:head], name=stem)
    return corpus
