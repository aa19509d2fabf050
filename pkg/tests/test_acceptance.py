"""Acceptance criteria, one test per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see one PASS line per
criterion. Every tolerance is pinned here; nothing is deferred.
"""

import hashlib
import math
import random
import subprocess
import sys
import threading
import time

import pytest
from fastapi.testclient import TestClient

from ladinomt.analysis import Number, Person, Tense, VerbFeatures
from ladinomt.corpus import augment, merge_spanish_sides, segment_sentences, split_devtest
from ladinomt.evaluation import corpus_bleu
from ladinomt.lexicon import apply_phrase_rules
from ladinomt.morphogen import IMPLEMENTED_TENSES, VERB_CLASSES, conjugate
from ladinomt.orthography import respell
from ladinomt.service import ContributionStore, create_app
from tests.conftest import GOLDEN_PAIRS
from tests.test_evaluation import oracle_bleu
from tests.test_orthography import has_forbidden_graphemes


def ok(line: str) -> None:
    print(f"PASS {line}")


def test_golden_suite_byte_for_byte(engine):
    started = time.perf_counter()
    for source, expected in GOLDEN_PAIRS:
        got = engine.translate(source).output
        assert got == expected, f"{source!r}: {got!r} != {expected!r}"
    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"golden suite took {elapsed:.3f}s (budget 1s)"
    ok(f"[PRIMARY] golden translation suite: 5/5 byte-for-byte in {elapsed * 1000:.0f} ms")


def test_conjugation_anchors(conjugation_table, ortho_rules):
    gizi = conjugate("gizar", VerbFeatures(Tense.PRETERITE, Person.P1, Number.SG),
                     conjugation_table, ortho_rules)
    meldates = conjugate("meldar", VerbFeatures(Tense.PRETERITE, Person.P2, Number.SG),
                         conjugation_table, ortho_rules)
    assert gizi == "gizi"
    assert meldates == "meldates"
    ok("[PRIMARY] conjugation anchors: gizar->gizi, meldar->meldates (exact)")


def test_phrase_correction_anchors(engine, phrase_rules):
    assert apply_phrase_rules(["tengo", "ke", "gizar"], phrase_rules) == ["devo", "de", "gizar"]
    assert apply_phrase_rules(["ay", "ke", "pagar"], phrase_rules) == ["kale", "pagar"]
    # sentence-initial capitalization through the full pipeline
    assert engine.translate("Hay que pagar.").output == "Kale pagar."
    ok("[PRIMARY] phrase anchors: tengo ke->devo de, ay ke->kale, initial 'Kale'")


def test_bleu_protocol():
    goldens = [expected for _, expected in GOLDEN_PAIRS]

    identity = corpus_bleu(goldens, goldens)
    assert identity.score == pytest.approx(100.0, abs=1e-9)

    hand = corpus_bleu(["a b c d"], ["a b c d e"])
    assert hand.ngram_precisions == (1.0, 1.0, 1.0, 1.0)
    assert hand.brevity_penalty == pytest.approx(math.exp(-0.25), abs=1e-12)
    assert hand.score == pytest.approx(77.88, abs=0.01)

    rng = random.Random(31337)
    vocab = ["ola", "kaza", "vino", "pan", "kero", "ke", "i", "el", "meldar", "bueno"]
    for _ in range(20):
        hyp = [" ".join(rng.choice(vocab) for _ in range(rng.randint(4, 12)))
               for _ in range(rng.randint(1, 6))]
        ref = [" ".join(rng.choice(vocab) for _ in range(rng.randint(4, 12)))
               for _ in range(len(hyp))]
        got = corpus_bleu(hyp, ref).score
        want = oracle_bleu([h.split() for h in hyp], [r.split() for r in ref])
        assert got == pytest.approx(want, abs=1e-9)

    # protocol invariants
    ref = [g.upper() for g in goldens]
    assert corpus_bleu([g.upper() for g in goldens], ref).score == pytest.approx(
        corpus_bleu(goldens, ref).score, abs=1e-9)
    perm = [4, 2, 0, 3, 1]
    assert corpus_bleu(goldens, ref).score == pytest.approx(
        corpus_bleu([goldens[i] for i in perm], [ref[i] for i in perm]).score, abs=1e-9)
    ok("[PRIMARY] BLEU protocol: identity=100, BP case=77.88±0.01, "
       "oracle agreement 1e-9 on 20 corpora, case+permutation invariant")


def _fixture_1000(rng):
    nouns = ["gato", "libro", "casa", "amigo", "vino", "pan"]
    lines = []
    for i in range(1000):
        if i % 7 == 0:
            lines.append(GOLDEN_PAIRS[i % len(GOLDEN_PAIRS)][0])
        else:
            lines.append(f"Tengo dos {rng.choice(nouns)}s y un {rng.choice(nouns)}.")
    return lines


def test_augmentation_structure(engine, tmp_path):
    from ladinomt.corpus import write_moses_pair

    rng = random.Random(271828)
    spa = _fixture_1000(rng)
    eng = [f"english line {i}" for i in range(1000)]
    # alignment sentinels at the ends and the middle
    for idx in (0, 499, 999):
        spa[idx] = f"Tengo dos gatos. sentinela{idx}"
        eng[idx] = f"sentinel {idx}"

    started = time.perf_counter()
    digests = []
    for run in range(2):
        other_lad, spa_lad = augment(spa, eng, engine.translate_batch, other_lang="eng")
        assert len(other_lad) == len(spa_lad) == 1000
        files = write_moses_pair(other_lad, tmp_path / f"run{run}") + write_moses_pair(
            spa_lad, tmp_path / f"run{run}")
        assert len(files) == 4
        for path in files:
            assert len(path.read_text(encoding="utf-8").splitlines()) == 1000
        for idx in (0, 499, 999):
            assert other_lad.pairs[idx][0] == f"sentinel {idx}"
            assert f"sentinela{idx}" in other_lad.pairs[idx][1].lower()
            assert spa_lad.pairs[idx][0] == f"Tengo dos gatos. sentinela{idx}"
        digests.append([hashlib.sha256(p.read_bytes()).hexdigest() for p in files])

        merged = merge_spanish_sides([spa_lad, spa_lad])
        assert merged.pairs == tuple(dict.fromkeys(spa_lad.pairs))
    elapsed = time.perf_counter() - started
    assert digests[0] == digests[1], "double-run hash mismatch"
    assert elapsed < 10.0, f"augmentation run took {elapsed:.2f}s (budget 10s)"
    ok(f"[PRIMARY] augmentation: 1000-line x4 outputs aligned, sentinels intact, "
       f"dedup exact, deterministic, {elapsed:.2f}s < 10s")


def test_property_suites(engine, conjugation_table, ortho_rules):
    # orthography idempotence + charset over >= 10,000 random Spanish-like words
    rng = random.Random(987654321)
    alphabet = "abcdefghijklmnñopqrstuvwxyzáéíóúü"
    vowels = "aeiouáéíóúü"
    checked = 0
    while checked < 10_000:
        word = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 14)))
        if not any(ch in vowels for ch in word):
            continue
        out = respell(word, ortho_rules)
        assert out and not any(ch.isspace() for ch in out)
        assert not has_forbidden_graphemes(out), (word, out)
        assert respell(out, ortho_rules) == out, (word, out)
        checked += 1

    # conjugation grid exhaustiveness over all implemented cells
    cells = 0
    for cls in VERB_CLASSES:
        lemma = "tom" + cls.lower()
        for tense in IMPLEMENTED_TENSES:
            for person in Person:
                for number in Number:
                    ending = conjugation_table.regular[(cls, tense, person, number)]
                    stem = lemma if tense is Tense.FUTURE else "tom"
                    got = conjugate(lemma, VerbFeatures(tense, person, number),
                                    conjugation_table, ortho_rules)
                    assert got == stem + ending
                    cells += 1
    assert cells == len(VERB_CLASSES) * len(IMPLEMENTED_TENSES) * 6

    # segmentation never loses non-whitespace characters
    rng2 = random.Random(5150)
    fragments = [s for s, _ in GOLDEN_PAIRS] + [
        "El Sr. Levi llegó.", "¿Cómo estás?", "Bien...", "Pagó 3,5 euros.",
    ]
    for _ in range(200):
        text = " ".join(rng2.choice(fragments) for _ in range(rng2.randint(0, 8)))
        joined = "".join(segment_sentences(text))
        assert sorted(joined.replace(" ", "")) == sorted("".join(text.split()))

    # split partition + seed determinism
    from ladinomt.corpus import ParallelCorpus

    corpus = ParallelCorpus("spa", "lad",
                            tuple((f"s{i}", f"t{i}") for i in range(500)), name="fx")
    t1, d1 = split_devtest(corpus, 100, seed=42)
    t2, d2 = split_devtest(corpus, 100, seed=42)
    assert (t1.pairs, d1.pairs) == (t2.pairs, d2.pairs)
    assert sorted(t1.pairs + d1.pairs) == sorted(corpus.pairs)
    assert set(t1.pairs).isdisjoint(d1.pairs)
    t3, _ = split_devtest(corpus, 100, seed=43)
    assert t3.pairs != t1.pairs
    ok(f"[PRIMARY] property suites: orthography x{checked}, conjugation grid x{cells}, "
       "segmentation preservation, split determinism")


def test_service_criteria(engine, tmp_path):
    store = ContributionStore(tmp_path / "contributions.jsonl")
    app = create_app(engine=engine, store=store)

    # Table-3 parity: HTTP response == CLI stdout, byte for byte
    source_file = tmp_path / "golden.spa"
    source_file.write_text("".join(s + "\n" for s, _ in GOLDEN_PAIRS), encoding="utf-8")
    proc = subprocess.run(
        [sys.executable, "-m", "ladinomt.cli", "translate", "--input", str(source_file)],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    cli_lines = proc.stdout.splitlines()
    with TestClient(app) as client:
        http_lines = [
            client.post("/translate", json={"text": s}).json()["output"]
            for s, _ in GOLDEN_PAIRS
        ]
    assert http_lines == cli_lines == [e for _, e in GOLDEN_PAIRS]

    # 50 concurrent contributions -> 50 intact records, aligned export
    errors = []
    checksum_before = hashlib.sha256(store.path.read_bytes()).hexdigest() \
        if store.path.exists() else None
    size_before = store.path.stat().st_size if store.path.exists() else 0

    def contribute(i):
        try:
            with TestClient(app) as client:
                resp = client.post("/contribute", json={
                    "source_lang": "spa",
                    "target_lang": "lad",
                    "source_text": f"fuente {i}",
                    "machine_output": "salida",
                    "corrected_text": f"korreksion {i}",
                })
                assert resp.status_code == 200
        except Exception as exc:
            errors.append(exc)

    threads = [threading.Thread(target=contribute, args=(i,)) for i in range(50)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors
    records = store.records()
    assert len(records) == 50
    assert len({r.id for r in records}) == 50

    with TestClient(app) as client:
        export = client.get("/contributions/export").json()
    assert export["count"] == 50
    assert len(export["source_lines"]) == len(export["corrected_lines"]) == 50
    exported_sources = set(export["source_lines"])
    assert exported_sources == {f"fuente {i}" for i in range(50)}

    # append-only: the pre-existing byte prefix is untouched by later appends
    if checksum_before is not None:
        data = store.path.read_bytes()
        assert hashlib.sha256(data[:size_before]).hexdigest() == checksum_before
    mid_size = store.path.stat().st_size
    mid_checksum = hashlib.sha256(store.path.read_bytes()).hexdigest()
    store.append("spa", "lad", "otra fuente", "", "otra korreksion")
    data = store.path.read_bytes()
    assert hashlib.sha256(data[:mid_size]).hexdigest() == mid_checksum
    ok("[PRIMARY] service: CLI/HTTP parity 5/5, 50 concurrent contributions intact, "
       "export aligned 50/50, append-only prefix checksums stable")
