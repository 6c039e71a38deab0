"""Acceptance suite: one test per criterion, one PASS/FAIL line printed each.

Run with ``pytest tests/test_acceptance.py -v -s``.
"""

import random
import time
from contextlib import contextmanager

import pytest

from prefdfa import (
    Alphabet,
    ClosureConflictError,
    ExperimentConfig,
    Label,
    MCDFAInstance,
    PreferenceSample,
    brute_force_mcdfa,
    build_prefix_tree,
    characteristic_sample,
    close_sample,
    equivalent,
    is_characteristic,
    is_consistent,
    label_pairs,
    learn_pdfa,
    min_consistent_pdfa,
    random_canonical_pdfa,
    random_pdfa,
    reduce_mcdfa,
)
from prefdfa.experiment import run_trial
from prefdfa.fixtures import garden_pdfa, parity_pdfa, parity_sample
from prefdfa.oracle import GenerationConfig, draw_words
from oracles import closure_conflicts, naive_closure

EQ, ST, INC = Label.INDIFFERENT, Label.STRICT, Label.INCOMPARABLE


@contextmanager
def criterion(name):
    try:
        yield
    except Exception:
        print(f"{name}: FAIL")
        raise
    print(f"{name}: PASS")


def _random_truths():
    """100 canonical ground-truth models, state counts stratified 2..5."""
    truths = []
    rng = random.Random(20260810)
    for i in range(100):
        n = 2 + i % 4
        alphabet = Alphabet(["a", "b", "c"][: 2 + (i // 4) % 2])
        n_ranks = rng.randint(2, min(4, n))
        truths.append((i, random_canonical_pdfa(rng, n, alphabet, n_ranks)))
    return truths


@pytest.fixture(scope="module")
def truths():
    return _random_truths()


@pytest.fixture(scope="module")
def characteristic_corpus(truths):
    corpus = []
    for i, truth in truths:
        sample = characteristic_sample(truth, seed=i, extra_words=i % 4)
        corpus.append((i, truth, sample))
    return corpus


def test_criterion_1_running_example_exactness():
    with criterion("AC1 running-example exactness"):
        start = time.perf_counter()
        result = learn_pdfa(build_prefix_tree(parity_sample()))
        elapsed = time.perf_counter() - start
        blocks = {frozenset("".join(w) for w in b) for b in result.partition.blocks}
        assert blocks == {
            frozenset({"", "aa", "bb", "aabb"}),
            frozenset({"a", "abb"}),
            frozenset({"b", "aba", "baa", "bbb", "aab"}),
            frozenset({"ab", "ba", "abaa", "abbb"}),
        }
        assert len(result.automaton.states) == 4
        reference = parity_pdfa()
        assert len(reference.order.ranks) == 3
        assert reference.order.strict_pairs == frozenset(
            {("blue", "orange"), ("green", "orange")}
        )
        assert equivalent(result.automaton, reference).equivalent
        assert elapsed < 1.0


def test_criterion_2_merge_trace_fidelity():
    with criterion("AC2 merge-trace fidelity"):
        result = learn_pdfa(build_prefix_tree(parity_sample()))
        t1, t2, t3 = result.trace[:3]
        # Iteration 1: the single candidate merge is tried and rejected.
        assert t1.word == ("a",)
        assert t1.tried == ((),)
        assert t1.accepted is None
        # Iteration 2: both candidate merges rejected.
        assert t2.word == ("b",)
        assert t2.tried == ((), ("a",))
        assert t2.accepted is None
        # Iteration 3: first candidate accepted, with the two forced merges
        # in order.
        assert t3.word == ("a", "a")
        assert t3.accepted == ()
        assert t3.cascade == (
            (("b",), ("a", "a", "b")),
            (("b", "b"), ("a", "a", "b", "b")),
        )


def test_criterion_3_characteristic_implies_equivalent(characteristic_corpus):
    with criterion("AC3 exact recovery from characteristic samples (100 models)"):
        start = time.perf_counter()
        assert len(characteristic_corpus) >= 100
        for i, truth, sample in characteristic_corpus:
            report = is_characteristic(truth, sample)
            assert report.overall, (i, report.violated())
            learned = learn_pdfa(build_prefix_tree(sample))
            assert equivalent(learned.automaton, truth).equivalent, i
        assert time.perf_counter() - start < 300


def test_criterion_4_minimality_cross_check(characteristic_corpus):
    with criterion("AC4 oracle minimality cross-check (>= 20 small models)"):
        checked = 0
        for i, truth, sample in characteristic_corpus:
            n = len(truth.states)
            if n > 3:
                continue
            assert min_consistent_pdfa(sample, n) is not None, i
            assert min_consistent_pdfa(sample, n - 1) is None, i
            checked += 1
            if checked >= 20:
                break
        assert checked >= 20


def test_criterion_5_reduction_correctness():
    with criterion("AC5 reduction agrees with the DFA brute force (50 instances)"):
        rng = random.Random(555)
        alphabet = Alphabet(["a", "b"])
        for case in range(50):
            pool = sorted(
                {
                    tuple(rng.choice("ab") for _ in range(rng.randint(0, 3)))
                    for _ in range(10)
                }
            )
            rng.shuffle(pool)
            n_pos = rng.randint(1, 3)
            n_neg = rng.randint(1, min(3, len(pool) - n_pos))
            instance = MCDFAInstance(
                alphabet,
                frozenset(pool[:n_pos]),
                frozenset(pool[n_pos : n_pos + n_neg]),
                rng.randint(1, 3),
            )
            sample, bound = reduce_mcdfa(instance)
            assert len(sample) == n_pos**2 + n_neg**2 + n_pos * n_neg
            dfa_answer = brute_force_mcdfa(instance)
            pdfa_answer = min_consistent_pdfa(sample, bound) is not None
            assert dfa_answer == pdfa_answer, case


def test_criterion_6_output_consistency():
    with criterion("AC6 learned model consistent with every closable sample"):
        rng = random.Random(66)
        for case in range(60):
            n = rng.randint(1, 5)
            alphabet = Alphabet(["a", "b", "c"][: rng.randint(2, 3)])
            truth = random_pdfa(rng, n, alphabet, rng.randint(1, min(4, n)))
            cfg = GenerationConfig(
                word_count=rng.randint(2, 25),
                comparison_fraction=rng.choice([0.25, 0.5, 1.0]),
                seed=6000 + case,
            )
            sample = label_pairs(truth, draw_words(cfg, alphabet), cfg)
            close_sample(sample)  # labels come from a model: closure succeeds
            learned = learn_pdfa(build_prefix_tree(sample))
            report = is_consistent(learned.automaton, sample)
            assert report.consistent, case
            assert not report.unknown, case


def test_criterion_7_garden_trends():
    with criterion("AC7 garden sweep trends"):
        truth = garden_pdfa()
        rates = {}
        timings = []
        for fraction in (1 / 3, 1 / 2):
            for count in (50, 700):
                cfg = ExperimentConfig(
                    truth=truth,
                    counts=(count,),
                    trials=10,
                    fraction=fraction,
                    seed=2026,
                )
                outcomes = [run_trial(cfg, count, t) for t in range(10)]
                for outcome in outcomes:
                    # (b) informative samples always recover the truth
                    if outcome.characteristic:
                        assert outcome.canonical
                rates[(fraction, count)] = sum(o.characteristic for o in outcomes)
                if count == 700 and fraction == 1 / 2:
                    timings = [o.seconds for o in outcomes]
        # (a) more words help, under both comparison fractions
        assert rates[(1 / 3, 700)] > rates[(1 / 3, 50)]
        assert rates[(1 / 2, 700)] > rates[(1 / 2, 50)]
        # (c) a 700-word fraction-1/2 trial finishes within the minute
        assert timings and max(timings) < 60.0


def test_criterion_8_closure_properties():
    with criterion("AC8 closure rules and idempotence (>= 10^4 triples)"):
        generated = 0
        rng = random.Random(88)

        # Tiny arbitrary samples: exact equality against an independent
        # fixpoint oracle, conflicts included.
        space = [(), ("a",), ("b",), ("a", "b"), ("b", "a"), ("a", "a")]
        for _ in range(400):
            triples = [
                (rng.choice(space), rng.choice(space), rng.choice([EQ, ST, INC]))
                for _ in range(rng.randint(1, 10))
            ]
            generated += len(triples)
            sample = PreferenceSample(Alphabet(["a", "b"]), triples)
            reference = naive_closure(triples)
            if closure_conflicts(reference):
                with pytest.raises(ClosureConflictError):
                    close_sample(sample)
                continue
            closed = close_sample(sample)
            assert set(closed.triples()) == reference
            assert close_sample(closed.to_sample()) == closed

        # Bigger model-labeled samples: rule-by-rule spot checks plus
        # idempotence.
        for case in range(30):
            n = rng.randint(2, 5)
            alphabet = Alphabet(["a", "b", "c"][: rng.randint(2, 3)])
            truth = random_pdfa(rng, n, alphabet, rng.randint(2, min(4, n)))
            cfg = GenerationConfig(
                word_count=30, comparison_fraction=0.5, seed=8800 + case
            )
            sample = label_pairs(truth, draw_words(cfg, alphabet), cfg)
            generated += len(sample)
            closed = close_sample(sample)
            _check_closure_rules(rng, sample, closed)
            assert close_sample(closed.to_sample()) == closed

        assert generated >= 10_000


def _check_closure_rules(rng, sample, closed):
    # Rule 1: the sample is contained in its closure.
    for w1, w2, label in sample.triples:
        assert closed.contains(w1, w2, label)
    # Rule 2: reflexive indifference on every sample word.
    for word in closed.words:
        assert closed.contains(word, word, EQ)
    materialized = list(closed.triples())
    # Rule 3: symmetry of indifference and incomparability.
    for w1, w2, label in materialized:
        if label in (EQ, INC):
            assert closed.contains(w2, w1, label)
    # Rules 4-6 on sampled triple pairs: transitivity of indifference and
    # strict preference, absorption of indifference on either side.
    for _ in range(4000):
        a1, b1, l1 = rng.choice(materialized)
        a2, b2, l2 = rng.choice(materialized)
        if b1 != a2:
            continue
        if l1 == l2 and l1 in (EQ, ST):
            assert closed.contains(a1, b2, l1)
        elif l1 is EQ and l2 in (ST, INC):
            assert closed.contains(a1, b2, l2)
        elif l2 is EQ and l1 in (ST, INC):
            assert closed.contains(a1, b2, l1)
