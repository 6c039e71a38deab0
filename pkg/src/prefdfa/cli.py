"""Command-line interface.

Exit status: 0 on success, 1 on a domain error (label conflict, preference
cycle, oversize oracle instance, ...), 2 on usage errors including
unparseable input files.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .automata import (
    compare_words,
    dumps_pdfa,
    equivalent,
    is_consistent,
    load_pdfa,
    to_dot,
)
from .characteristic import is_characteristic
from .errors import FormatError, PrefdfaError
from .experiment import ExperimentConfig, rows_to_csv, run_experiment
from .learner import learn_pdfa, render_trace
from .oracle import (
    GenerationConfig,
    MCDFAInstance,
    draw_words,
    label_pairs,
    min_consistent_pdfa,
    reduce_mcdfa,
)
from .prefix_tree import build_prefix_tree
from .sample import (
    close_sample,
    dump_sample,
    load_sample,
    loads_sample_with_lines,
    validate_sample,
)
from .words import Alphabet, Word, format_word, parse_word


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefdfa",
        description="Learn and analyze preference automata from pairwise comparisons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("learn", help="learn an automaton from a sample file")
    p.add_argument("--sample", required=True)
    p.add_argument("--trace", action="store_true", help="print one line per merge iteration")
    p.add_argument("--out", help="write the learned automaton here (default: stdout)")
    p.add_argument("--dot", help="also write a DOT rendering here")

    p = sub.add_parser("validate", help="report structural problems in a sample file")
    p.add_argument("--sample", required=True)

    p = sub.add_parser("check-characteristic", help="check the four sample conditions")
    p.add_argument("--pdfa", required=True)
    p.add_argument("--sample", required=True)

    p = sub.add_parser("compare", help="compare two words under an automaton")
    p.add_argument("--pdfa", required=True)
    p.add_argument("word1")
    p.add_argument("word2")

    p = sub.add_parser("consistent", help="check a sample against an automaton")
    p.add_argument("--pdfa", required=True)
    p.add_argument("--sample", required=True)

    p = sub.add_parser("equiv", help="decide equivalence of two automata")
    p.add_argument("--pdfa", required=True)
    p.add_argument("--pdfa2", required=True)

    p = sub.add_parser("generate", help="draw random words and label pairs from a model")
    p.add_argument("--pdfa", required=True)
    p.add_argument("--words", type=int, required=True)
    p.add_argument("--fraction", type=float, default=1 / 3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--extend-probability", type=float, default=0.25)
    p.add_argument("--stop-probability", type=float, default=0.25)
    p.add_argument("--out", required=True)

    p = sub.add_parser("oracle", help="exhaustive minimum consistent model search")
    p.add_argument("--sample", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ranks", type=int, default=4, help="maximum number of ranks")

    p = sub.add_parser("reduce", help="rewrite positive/negative word lists as a sample")
    p.add_argument("--positive", required=True)
    p.add_argument("--negative", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("experiment", help="sample-size sweep against a truth model")
    p.add_argument("--pdfa", required=True)
    p.add_argument("--counts", required=True, help="comma-separated word counts")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--fraction", type=float, default=1 / 3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", required=True)

    return parser


def load_word_list(path) -> tuple:
    """Word-list file: an 'alphabet:' header, then one word per line."""
    alphabet = None
    words: List[Word] = []
    with open(path, "r", encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if line.startswith("alphabet:"):
                alphabet = Alphabet(line[len("alphabet:") :].split())
                continue
            if alphabet is None:
                raise FormatError("word list must start with an 'alphabet:' line", line=lineno)
            words.append(parse_word(line, alphabet))
    if alphabet is None:
        raise FormatError("missing 'alphabet:' line")
    return alphabet, tuple(words)


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PrefdfaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    if args.command == "learn":
        return _cmd_learn(args)
    if args.command == "validate":
        return _cmd_validate(args)
    if args.command == "check-characteristic":
        return _cmd_check(args)
    if args.command == "compare":
        return _cmd_compare(args)
    if args.command == "consistent":
        return _cmd_consistent(args)
    if args.command == "equiv":
        return _cmd_equiv(args)
    if args.command == "generate":
        return _cmd_generate(args)
    if args.command == "oracle":
        return _cmd_oracle(args)
    if args.command == "reduce":
        return _cmd_reduce(args)
    if args.command == "experiment":
        return _cmd_experiment(args)
    raise AssertionError(f"unhandled command {args.command}")


def _cmd_learn(args) -> int:
    sample = load_sample(args.sample)
    result = learn_pdfa(build_prefix_tree(sample))
    if args.trace:
        print(render_trace(result))
    for warning in result.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    document = dumps_pdfa(result.automaton, header=f"learned from {args.sample}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(document)
        print(
            f"learned {len(result.automaton.states)} states, "
            f"{len(result.automaton.order.ranks)} ranks -> {args.out}"
        )
    else:
        print(document, end="")
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as handle:
            handle.write(to_dot(result.automaton, name="learned"))
    return 0


def _cmd_validate(args) -> int:
    with open(args.sample, "r", encoding="utf-8") as handle:
        sample, lines = loads_sample_with_lines(handle.read())
    report = validate_sample(sample)
    if report.clean:
        print("clean")
        return 0
    for diag in report.diagnostics:
        where = ""
        if diag.triple is not None and diag.triple in lines:
            where = f" (line {lines[diag.triple]})"
        print(f"{diag.kind}: {diag.message}{where}")
    return 0


def _cmd_check(args) -> int:
    automaton = load_pdfa(args.pdfa)
    sample = load_sample(args.sample)
    report = is_characteristic(automaton, sample)
    for number in (1, 2, 3, 4):
        cond = report.condition(number)
        if cond.passed:
            print(f"condition {number}: pass")
        else:
            shown = "; ".join(_show_witness(w) for w in cond.witnesses[:5])
            print(f"condition {number}: FAIL ({cond.witness_count} witnesses) {shown}")
    print(f"characteristic: {'yes' if report.overall else 'no'}")
    return 0


def _show_witness(witness) -> str:
    if isinstance(witness, tuple):
        parts = []
        for item in witness:
            if isinstance(item, tuple):
                parts.append(format_word(item))
            else:
                parts.append(str(getattr(item, "value", item)))
        return "(" + ", ".join(parts) + ")"
    return format_word(witness) if isinstance(witness, tuple) else str(witness)


def _cmd_compare(args) -> int:
    automaton = load_pdfa(args.pdfa)
    w1 = parse_word(args.word1, automaton.alphabet)
    w2 = parse_word(args.word2, automaton.alphabet)
    print(compare_words(automaton, w1, w2).value)
    return 0


def _cmd_consistent(args) -> int:
    automaton = load_pdfa(args.pdfa)
    sample = load_sample(args.sample)
    report = is_consistent(automaton, sample)
    if report.consistent:
        print("consistent")
    else:
        print(f"inconsistent ({len(report.violations)} violations)")
        for w1, w2, label, actual in report.violations:
            print(
                f"  {format_word(w1)} {label.token} {format_word(w2)}: "
                f"automaton says {actual.value}"
            )
    for w1, w2, label in report.unknown:
        print(f"  {format_word(w1)} {label.token} {format_word(w2)}: undecided (partial model)")
    return 0


def _cmd_equiv(args) -> int:
    a = load_pdfa(args.pdfa)
    b = load_pdfa(args.pdfa2)
    result = equivalent(a, b)
    if result.equivalent:
        print("equivalent")
        for sa, sb in result.correspondence:
            print(f"  {sa} <-> {sb}")
    else:
        w1, w2 = result.counterexample
        ca, cb = result.categories
        print("not equivalent")
        print(
            f"  counterexample ({format_word(w1)}, {format_word(w2)}): "
            f"{ca.value} vs {cb.value}"
        )
    return 0


def _cmd_generate(args) -> int:
    automaton = load_pdfa(args.pdfa)
    cfg = GenerationConfig(
        word_count=args.words,
        extend_probability=args.extend_probability,
        stop_probability=args.stop_probability,
        comparison_fraction=args.fraction,
        seed=args.seed,
    )
    words = draw_words(cfg, automaton.alphabet)
    sample = label_pairs(automaton, words, cfg)
    dump_sample(
        sample,
        args.out,
        header=f"generated from {args.pdfa}: words={args.words} "
        f"fraction={args.fraction} seed={args.seed}",
    )
    print(f"{len(words)} words, {len(sample)} comparisons -> {args.out}")
    return 0


def _cmd_oracle(args) -> int:
    sample = load_sample(args.sample)
    found = min_consistent_pdfa(sample, args.k, max_ranks=args.ranks)
    if found is None:
        print("none")
    else:
        print(f"found {len(found.states)}-state consistent model")
        print(dumps_pdfa(found), end="")
    return 0


def _cmd_reduce(args) -> int:
    alpha_pos, positive = load_word_list(args.positive)
    alpha_neg, negative = load_word_list(args.negative)
    if alpha_pos != alpha_neg:
        raise FormatError("positive and negative word lists declare different alphabets")
    instance = MCDFAInstance(alpha_pos, frozenset(positive), frozenset(negative), args.k)
    sample, bound = reduce_mcdfa(instance)
    dump_sample(sample, args.out, header=f"reduced instance, state bound {bound}")
    print(
        f"{len(positive)} positive + {len(negative)} negative words -> "
        f"{len(sample)} comparisons (bound {bound}) -> {args.out}"
    )
    return 0


def _cmd_experiment(args) -> int:
    truth = load_pdfa(args.pdfa)
    counts = tuple(int(c) for c in args.counts.split(",") if c)
    cfg = ExperimentConfig(
        truth=truth,
        counts=counts,
        trials=args.trials,
        fraction=args.fraction,
        seed=args.seed,
    )
    rows = run_experiment(cfg)
    text = rows_to_csv(rows)
    with open(args.csv, "w", encoding="utf-8") as handle:
        handle.write(text)
    print(text, end="")
    return 0


if __name__ == "__main__":
    sys.exit(main())
