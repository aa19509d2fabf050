"""Command-line interface.

Subcommands: translate, augment, stats, segment, eval, split, serve. Rule
data paths default to the shipped fixtures so the tool works out of the
box; full-size dictionaries are drop-in replacements. All text I/O is
UTF-8 with LF line endings; an input BOM is tolerated and stripped.

Exit codes: 0 success, 1 data/processing error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from ladinomt import TranslationEngine, __version__
from ladinomt import corpus as corpus_mod
from ladinomt import lexicon as lexicon_mod
from ladinomt import morphogen as morphogen_mod
from ladinomt import orthography as orthography_mod
from ladinomt.evaluation import EvaluationError, corpus_bleu
from ladinomt.resources import data_path


class CliError(Exception):
    """Data or processing failure; maps to exit code 1."""


def _read_lines(path: str) -> list[str]:
    try:
        return corpus_mod.read_lines(Path(path))
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}") from exc


def _load_rule_data(kind: str, path: str, loader, *extra):
    try:
        return loader(path, *extra)
    except (ValueError, OSError) as exc:
        raise CliError(f"{kind} {path}: {exc}") from exc


def _build_engine(args: argparse.Namespace) -> TranslationEngine:
    return TranslationEngine(
        lexicon=_load_rule_data("lexicon", args.lexicon, lexicon_mod.load_lexicon),
        phrases=_load_rule_data("phrase rules", args.phrases, lexicon_mod.load_phrase_rules),
        table=_load_rule_data("conjugation table", args.conjugation,
                              morphogen_mod.load_table, args.irregulars),
        ortho=_load_rule_data("orthography rules", args.ortho_rules,
                              orthography_mod.load_rules),
    )


def _add_rule_data_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--lexicon", default=str(data_path("mini_lexicon.tsv")),
                        help="Spanish-Ladino dictionary file")
    parser.add_argument("--phrases", default=str(data_path("phrase_rules.tsv")),
                        help="phrase-correction file")
    parser.add_argument("--ortho-rules", default=str(data_path("ortho_rules.tsv")),
                        help="orthography rule file")
    parser.add_argument("--conjugation", default=str(data_path("conjugation.tsv")),
                        help="regular paradigm file")
    parser.add_argument("--irregulars", default=str(data_path("irregular_forms.tsv")),
                        help="irregular verb form file")


def cmd_translate(args: argparse.Namespace) -> int:
    engine = _build_engine(args)
    lines = [args.text] if args.text is not None else _read_lines(args.input)
    for result in engine.translate_batch(lines):
        if result.error:
            raise CliError(f"translation failed: {result.error}")
        print(result.output)
        if args.trace:
            for entry in result.token_trace:
                print(
                    f"  {entry.source}\t{entry.mechanism.value}\t{' '.join(entry.output)}",
                    file=sys.stderr,
                )
    return 0


def cmd_augment(args: argparse.Namespace) -> int:
    engine = _build_engine(args)
    spa_lines = _read_lines(args.spa)
    other_lines = _read_lines(args.other)
    try:
        other_lad, spa_lad = corpus_mod.augment(
            spa_lines, other_lines, engine.translate_batch, other_lang=args.other_lang
        )
    except corpus_mod.AlignmentError as exc:
        raise CliError(str(exc)) from exc
    prefix = Path(args.out_prefix)
    for corpus in (other_lad, spa_lad):
        src_path, tgt_path = corpus_mod.write_moses_pair(corpus, prefix)
        pair_stats = corpus_mod.stats(corpus.tgt_lines)
        print(f"pair={corpus.src_lang}-{corpus.tgt_lang}")
        print(f"files={src_path},{tgt_path}")
        print(f"sentences={pair_stats.sentence_count}")
        print(f"ladino_tokens={pair_stats.token_count}")
    return 0


def cmd_stats(args: argparse.Namespace) -> int:
    total = corpus_mod.CorpusStats(0, 0)
    rows = []
    for path in args.files:
        s = corpus_mod.stats(_read_lines(path))
        rows.append((path, s))
        total = total + s
    width = max(len(p) for p, _ in rows)
    print(f"{'file':<{width}}  {'sentences':>10}  {'tokens':>10}")
    for path, s in rows:
        print(f"{path:<{width}}  {s.sentence_count:>10}  {s.token_count:>10}")
    for path, s in rows:
        print(f"file={path} sentences={s.sentence_count} tokens={s.token_count}")
    print(f"total sentences={total.sentence_count} tokens={total.token_count}")
    return 0


def cmd_segment(args: argparse.Namespace) -> int:
    text = "\n".join(_read_lines(args.file))
    for sentence in corpus_mod.segment_sentences(text):
        print(sentence)
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        score = corpus_bleu(
            _read_lines(args.hyp), _read_lines(args.ref), lowercase=args.lowercase
        )
    except EvaluationError as exc:
        raise CliError(str(exc)) from exc
    print(score.format())
    return 0


def cmd_split(args: argparse.Namespace) -> int:
    try:
        corpus = corpus_mod.load_moses_pair(
            Path(args.src), Path(args.tgt), args.src_lang, args.tgt_lang,
            name=args.out_prefix,
        )
        test, dev = corpus_mod.split_devtest(corpus, args.test_size, args.seed)
    except corpus_mod.CorpusError as exc:
        raise CliError(str(exc)) from exc
    for part, suffix in ((test, "test"), (dev, "dev")):
        src_path, tgt_path = corpus_mod.write_moses_pair(
            part, Path(f"{args.out_prefix}-{suffix}")
        )
        print(f"{suffix}={src_path},{tgt_path} pairs={len(part)}")
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from ladinomt.service import ContributionStore, create_app

    engine = _build_engine(args)
    app = create_app(
        engine=engine,
        store=ContributionStore(Path(args.store)),
        max_text_length=args.max_chars,
        cors_origin=args.cors_origin,
    )
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ladinomt",
        description="Rule-based Spanish to Judeo-Spanish translation toolkit.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sub(name: str, help_text: str, rule_data: bool = False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--version", action="version", version=f"ladinomt {__version__}")
        if rule_data:
            _add_rule_data_args(p)
        return p

    p = add_sub("translate", "translate Spanish text to Judeo-Spanish", rule_data=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--text", help="translate a single string")
    group.add_argument("--input", help="translate a file, one line at a time")
    p.add_argument("--trace", action="store_true",
                   help="print per-token mechanism annotations to stderr")
    p.set_defaults(func=cmd_translate)

    p = add_sub("augment", "build synthetic parallel data from a bitext", rule_data=True)
    p.add_argument("--spa", required=True, help="Spanish side of the input bitext")
    p.add_argument("--other", required=True, help="other-language side")
    p.add_argument("--other-lang", required=True, help="language code of --other")
    p.add_argument("--out-prefix", required=True, help="output file prefix")
    p.set_defaults(func=cmd_augment)

    p = add_sub("stats", "sentence and token counts for text files")
    p.add_argument("files", nargs="+", help="text files, one sentence per line")
    p.set_defaults(func=cmd_stats)

    p = add_sub("segment", "split raw text into sentences")
    p.add_argument("file", help="input text file")
    p.set_defaults(func=cmd_segment)

    p = add_sub("eval", "corpus BLEU of a hypothesis file against a reference")
    p.add_argument("--hyp", required=True, help="hypothesis file")
    p.add_argument("--ref", required=True, help="reference file")
    p.add_argument("--lowercase", action=argparse.BooleanOptionalAction, default=True,
                   help="lowercase both sides (protocol default)")
    p.set_defaults(func=cmd_eval)

    p = add_sub("split", "seeded dev/test split of a Moses-format corpus")
    p.add_argument("--src", required=True, help="source-side file")
    p.add_argument("--tgt", required=True, help="target-side file")
    p.add_argument("--src-lang", default="spa")
    p.add_argument("--tgt-lang", default="lad")
    p.add_argument("--test-size", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(func=cmd_split)

    p = add_sub("serve", "run the translation/contribution HTTP service", rule_data=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--store", default="contributions.jsonl",
                   help="append-only contribution store path")
    p.add_argument("--max-chars", type=int, default=10_000)
    p.add_argument("--cors-origin", default="*")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1


if __name__ == "__main__":
    sys.exit(main())
