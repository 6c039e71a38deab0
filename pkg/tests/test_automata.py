import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prefdfa import (
    PDFA,
    Alphabet,
    AlphabetError,
    Label,
    PartialOrder,
    PreferenceCategory,
    PreferenceSample,
    compare_words,
    dumps_pdfa,
    equivalent,
    is_consistent,
    label_pairs,
    loads_pdfa,
    random_pdfa,
    to_dot,
)
from prefdfa.oracle import GenerationConfig, draw_words

C = PreferenceCategory


def test_compare_words_examples(parity):
    assert compare_words(parity, ("b", "b"), ("a",)) is C.FIRST_STRICT
    assert compare_words(parity, ("a",), ("b", "a")) is C.SECOND_STRICT
    assert compare_words(parity, ("a", "b"), ("a", "b")) is C.INDIFFERENT
    assert compare_words(parity, ("a", "a"), ("b", "a")) is C.INCOMPARABLE


def test_compare_words_rejects_foreign_symbols(parity):
    with pytest.raises(AlphabetError):
        compare_words(parity, ("c",), ("a",))


def test_compare_words_partial_automaton_returns_unknown(ab):
    order = PartialOrder(["hi", "lo"], [("hi", "lo")])
    partial = PDFA(
        ab,
        ["s0", "s1"],
        "s0",
        {("s0", "a"): "s1"},  # no 'b' transitions, s1 unranked
        order,
        {"s0": "hi"},
    )
    assert compare_words(partial, ("b",), ()) is C.UNKNOWN
    assert compare_words(partial, ("a",), ()) is C.UNKNOWN
    assert compare_words(partial, (), ()) is C.INDIFFERENT


@settings(max_examples=60)
@given(
    st.lists(st.sampled_from(["a", "b"]), max_size=5),
    st.lists(st.sampled_from(["a", "b"]), max_size=5),
)
def test_compare_words_symmetry(w1, w2):
    from prefdfa.fixtures import parity_pdfa

    model = parity_pdfa()
    assert compare_words(model, w1, w2) is compare_words(model, w2, w1).swap()


def test_indifference_is_an_equivalence_relation(parity):
    rng = random.Random(1)
    words = [tuple(rng.choice("ab") for _ in range(rng.randint(0, 4))) for _ in range(12)]
    indifferent = lambda x, y: compare_words(parity, x, y) is C.INDIFFERENT
    for x in words:
        assert indifferent(x, x)
        for y in words:
            assert indifferent(x, y) == indifferent(y, x)
            for z in words:
                if indifferent(x, y) and indifferent(y, z):
                    assert indifferent(x, z)


def test_is_consistent_demo(parity, demo_sample):
    assert is_consistent(parity, demo_sample).consistent


def test_is_consistent_empty_sample(parity, ab):
    assert is_consistent(parity, PreferenceSample(ab, [])).consistent


def test_is_consistent_flags_wrong_direction(parity, ab):
    bad = PreferenceSample(ab, [(("a",), ("b", "a"), Label.STRICT)])
    report = is_consistent(parity, bad)
    assert not report.consistent
    assert len(report.violations) == 1
    (_, _, label, actual) = report.violations[0]
    assert label is Label.STRICT
    assert actual is C.SECOND_STRICT


def test_is_consistent_alphabet_mismatch(parity):
    other = PreferenceSample(Alphabet(["a", "c"]), [])
    with pytest.raises(AlphabetError):
        is_consistent(parity, other)


def test_equivalent_reflexive(parity):
    result = equivalent(parity, parity)
    assert result.equivalent
    assert set(result.correspondence) == {(q, q) for q in parity.states}


def test_equivalent_detects_order_change(parity):
    # Same machine, but blue is no longer above orange.
    weaker = PDFA(
        parity.alphabet,
        parity.states,
        parity.initial,
        parity.transitions,
        PartialOrder(["blue", "orange", "green"], [("green", "orange")]),
        parity.ranking,
    )
    result = equivalent(parity, weaker)
    assert not result.equivalent
    assert result.counterexample == ((), ("a",))
    assert result.categories == (C.FIRST_STRICT, C.INCOMPARABLE)


def test_equivalent_partial_vs_complete(parity, ab):
    partial = PDFA(
        ab,
        ["s0"],
        "s0",
        {("s0", "a"): "s0"},
        PartialOrder(["o"], []),
        {"s0": "o"},
    )
    result = equivalent(partial, parity)
    assert not result.equivalent
    w1, w2 = result.counterexample
    assert compare_words(partial, w1, w2) is not compare_words(parity, w1, w2)


def test_equivalent_requires_same_alphabet(parity):
    other = random_pdfa(random.Random(0), 2, Alphabet(["a"]), 2)
    with pytest.raises(AlphabetError):
        equivalent(parity, other)


def test_equivalent_is_equivalence_relation_and_preserves_consistency():
    rng = random.Random(42)
    alphabet = Alphabet(["a", "b"])
    for trial in range(15):
        na, nb = rng.randint(1, 3), rng.randint(1, 3)
        a = random_pdfa(rng, na, alphabet, rng.randint(1, min(2, na)))
        b = random_pdfa(rng, nb, alphabet, rng.randint(1, min(2, nb)))
        ab_res = equivalent(a, b)
        assert equivalent(b, a).equivalent == ab_res.equivalent
        assert equivalent(a, a).equivalent
        cfg = GenerationConfig(word_count=8, seed=trial)
        words = draw_words(cfg, alphabet)
        sample = label_pairs(a, words, cfg)
        if ab_res.equivalent:
            assert is_consistent(b, sample).consistent


def test_pdfa_text_round_trip(parity):
    text = dumps_pdfa(parity)
    again = loads_pdfa(text)
    assert again.states == parity.states
    assert again.transitions == parity.transitions
    assert again.ranking == parity.ranking
    assert again.order == parity.order
    assert dumps_pdfa(again) == text  # deterministic emission


def test_validate_complete(parity, ab):
    parity.validate_complete()
    with_extra_rank = PDFA(
        ab,
        ["s0"],
        "s0",
        {("s0", "a"): "s0", ("s0", "b"): "s0"},
        PartialOrder(["used", "unused"], []),
        {"s0": "used"},
    )
    with pytest.raises(Exception):
        with_extra_rank.validate_complete()


def test_dot_export_mentions_states_and_order(parity):
    dot = to_dot(parity)
    assert dot.count("digraph") == 2
    for state in parity.states:
        assert f'"{state}"' in dot
    assert '"blue" -> "orange"' in dot
    assert '"green" -> "orange"' in dot
