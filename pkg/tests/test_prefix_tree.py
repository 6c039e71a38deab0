import pytest

from prefdfa import Alphabet, Label, PreferenceSample, build_prefix_tree, format_word


def w(text):
    return tuple(text)


def test_demo_tree_states_in_shortlex_order(demo_tree):
    expected = [
        "eps", "a", "b", "a.a", "a.b", "b.a", "b.b", "a.a.b", "a.b.a", "a.b.b",
        "b.a.a", "b.b.b", "a.a.b.b", "a.b.a.a", "a.b.b.b",
    ]
    assert [format_word(word) for word in demo_tree.words] == expected


def test_demo_tree_ranking(demo_tree):
    ranked = {
        format_word(word)
        for word, rank in zip(demo_tree.words, demo_tree.ranks)
        if rank is not None
    }
    # Interior prefixes that never appear in the sample stay unranked.
    assert ranked == {
        "a", "a.a", "b.a", "b.b", "a.b.a", "a.b.b", "b.a.a", "b.b.b",
        "a.a.b.b", "a.b.a.a", "a.b.b.b",
    }
    assert demo_tree.ranks[demo_tree.state_of(w("a"))] == 1
    assert demo_tree.ranks[demo_tree.state_of(w("aa"))] == 2
    assert demo_tree.ranks[demo_tree.state_of(w("ba"))] == 3


def test_ranks_cover_all_block_indices(demo_tree):
    used = {rank for rank in demo_tree.ranks if rank is not None}
    assert used == set(demo_tree.partition.indices)


def test_tree_addressing_identity(demo_tree):
    for i, word in enumerate(demo_tree.words):
        assert demo_tree.run(word) == i


def test_single_incoming_transition(demo_tree):
    incoming = {}
    for src, kids in enumerate(demo_tree.children):
        for _, dst in kids.items():
            assert dst not in incoming
            incoming[dst] = src
    assert set(incoming) == set(range(1, len(demo_tree)))


def test_state_count_bound(demo_sample, demo_tree):
    bound = 1 + sum(len(word) for word in demo_sample.words)
    assert len(demo_tree) <= bound


def test_lone_word_tree():
    sample = PreferenceSample(
        Alphabet(["a", "b"]), [((("a", "b")), ("a", "b"), Label.INDIFFERENT)]
    )
    tree = build_prefix_tree(sample)
    assert [format_word(word) for word in tree.words] == ["eps", "a", "a.b"]
    assert tree.ranks == (None, None, 1)


def test_empty_sample_tree():
    tree = build_prefix_tree(PreferenceSample(Alphabet(["a", "b"]), []))
    assert len(tree) == 1
    assert tree.words == ((),)
    assert tree.children == ({},)
    assert tree.ranks == (None,)


def test_as_pnfa_is_deterministic(demo_tree):
    pnfa = demo_tree.as_pnfa()
    assert pnfa.is_deterministic
    assert pnfa.initial == "eps"
    assert pnfa.successors("a", "a") == frozenset({"a.a"})


def test_tree_dot_export(demo_tree):
    dot = demo_tree.to_dot()
    assert '"a.b.a.a"' in dot
    assert dot.count("digraph") == 2
