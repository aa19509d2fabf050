#!/usr/bin/env python3
"""Benchmark the compiled respelling kernel against the pure-Python fallback.

The rule sweep runs once per out-of-vocabulary token and once per conjugated
form, so it dominates large augmentation jobs. Usage:

    python3 benchmarks/bench_respell.py [--words N] [--rounds R]
"""

import argparse
import random
import time

from ladinomt import _kernel_py, default_engine
from ladinomt.orthography import default_rules

try:
    from ladinomt import _kernel
except ImportError:
    _kernel = None


def make_words(n: int, seed: int = 13) -> list[str]:
    rng = random.Random(seed)
    alphabet = "abcdefghijklmnñopqrstuvwxyzáéíóúü"
    vowels = "aeiouáéíóúü"
    words = []
    while len(words) < n:
        word = "".join(rng.choice(alphabet) for _ in range(rng.randint(3, 12)))
        if any(ch in vowels for ch in word):
            words.append(word)
    return words


def bench_engine(apply_rules, words, rules, rounds: int) -> float:
    best = float("inf")
    for _ in range(rounds):
        started = time.perf_counter()
        for word in words:
            apply_rules(word, rules)
        best = min(best, time.perf_counter() - started)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--words", type=int, default=50_000)
    parser.add_argument("--rounds", type=int, default=3)
    args = parser.parse_args()

    words = make_words(args.words)
    rules = default_rules()._compiled

    py_time = bench_engine(_kernel_py.apply_rules, words, rules, args.rounds)
    print(f"pure python : {args.words / py_time:>12,.0f} words/s  ({py_time:.3f}s)")

    if _kernel is None:
        print("compiled    : extension not built (pip install -e . rebuilds it)")
    else:
        cy_time = bench_engine(_kernel.apply_rules, words, rules, args.rounds)
        print(f"compiled    : {args.words / cy_time:>12,.0f} words/s  ({cy_time:.3f}s)")
        print(f"speedup     : {py_time / cy_time:.2f}x")

    # end-to-end context: full pipeline throughput on a mixed workload
    engine = default_engine()
    lines = [
        "Tengo que cocinar para mañana.",
        "Bebo café turco después del almuerzo.",
        "Los zapatos quedaron guardados en el armario.",
    ] * 300
    started = time.perf_counter()
    engine.translate_batch(lines)
    elapsed = time.perf_counter() - started
    print(f"translate   : {len(lines) / elapsed:>12,.0f} lines/s  (pipeline, mixed OOV)")


if __name__ == "__main__":
    main()
