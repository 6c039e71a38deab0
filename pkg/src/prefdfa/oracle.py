"""Ground-truth machinery: generators, exhaustive oracles, and the
positive/negative-data reduction.

Everything here is deliberately brute force or randomized-but-seeded; it
exists to cross-check the learner, not to be fast.  The exhaustive
minimum-model search is exponential (the underlying decision problem is
NP-complete) and therefore hard-capped at tiny instance sizes.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .automata import PDFA, compare_words, is_consistent
from .characteristic import nucleus, shortest_prefixes
from .errors import (
    BoundsExceededError,
    EmptySetError,
    PrefdfaError,
    RetryExhaustedError,
)
from .order import PartialOrder, PreferenceCategory
from .sample import Label, PreferenceSample
from .words import Alphabet, Word


# -- random word generation ------------------------------------------------------


@dataclass(frozen=True)
class GenerationConfig:
    """Parameters of the random word/comparison process.

    Words grow from the empty word; each step stops with
    ``stop_probability`` and otherwise appends one symbol.  The per-symbol
    extension mass is renormalized to (1 - stop) / |alphabet| so the step
    remains a proper distribution for any alphabet size.  Each word is
    then compared against ``comparison_fraction`` of the other words.
    """

    word_count: int
    extend_probability: float = 0.25
    stop_probability: float = 0.25
    comparison_fraction: float = 1 / 3
    seed: int = 0

    def __post_init__(self):
        if self.word_count < 0:
            raise PrefdfaError("word_count must be nonnegative")
        if not 0 < self.stop_probability < 1:
            raise PrefdfaError("stop_probability must be in (0, 1)")
        if self.extend_probability <= 0:
            raise PrefdfaError("extend_probability must be positive")
        if not 0 < self.comparison_fraction <= 1:
            raise PrefdfaError("comparison_fraction must be in (0, 1]")


def draw_word(
    rng: random.Random, alphabet: Alphabet, stop_probability: float = 0.25
) -> Word:
    """One random word: stop with ``stop_probability`` at each step,
    otherwise append a symbol (all symbols share the remaining mass)."""
    symbols = alphabet.symbols
    word: List[str] = []
    while rng.random() >= stop_probability:
        word.append(symbols[rng.randrange(len(symbols))])
    return tuple(word)


def draw_words(cfg: GenerationConfig, alphabet: Alphabet) -> Tuple[Word, ...]:
    """Draw ``word_count`` distinct random words; reproducible per seed."""
    rng = random.Random(f"{cfg.seed}:words")
    words: Set[Word] = set()
    attempts = 0
    limit = 1000 + 200 * cfg.word_count
    while len(words) < cfg.word_count:
        attempts += 1
        if attempts > limit:
            raise RetryExhaustedError(
                f"could not draw {cfg.word_count} distinct words in {limit} attempts"
            )
        words.add(draw_word(rng, alphabet, cfg.stop_probability))
    return tuple(sorted(words, key=alphabet.shortlex_key))


def label_pairs(
    automaton: PDFA, words: Sequence[Word], cfg: GenerationConfig
) -> PreferenceSample:
    """Compare each word against a random subset of the others and label
    every pair by what the automaton says; consistent by construction."""
    rng = random.Random(f"{cfg.seed}:pairs")
    alphabet = automaton.alphabet
    ordered = sorted({tuple(w) for w in words}, key=alphabet.shortlex_key)
    partner_count = math.ceil(cfg.comparison_fraction * len(ordered))
    pairs: Set[Tuple[Word, Word]] = set()
    for i, word in enumerate(ordered):
        others = ordered[:i] + ordered[i + 1 :]
        for partner in rng.sample(others, min(partner_count, len(others))):
            a, b = sorted((word, partner), key=alphabet.shortlex_key)
            pairs.add((a, b))
    return PreferenceSample(
        alphabet, (_labeled(automaton, a, b) for a, b in pairs)
    )


def _labeled(automaton: PDFA, a: Word, b: Word):
    category = compare_words(automaton, a, b)
    if category is PreferenceCategory.INDIFFERENT:
        return (a, b, Label.INDIFFERENT)
    if category is PreferenceCategory.FIRST_STRICT:
        return (a, b, Label.STRICT)
    if category is PreferenceCategory.SECOND_STRICT:
        return (b, a, Label.STRICT)
    if category is PreferenceCategory.INCOMPARABLE:
        return (a, b, Label.INCOMPARABLE)
    raise PrefdfaError("cannot label pairs against a partial automaton")


# -- random models and canonicity --------------------------------------------------


def random_pdfa(
    rng: random.Random, n_states: int, alphabet: Alphabet, n_ranks: int
) -> PDFA:
    """A random complete model: uniform transitions, surjective ranking,
    random strict order generated acyclically over a shuffled rank list."""
    if n_ranks > n_states:
        raise PrefdfaError("need at least one state per rank")
    states = tuple(f"q{i}" for i in range(n_states))
    transitions = {
        (q, a): states[rng.randrange(n_states)] for q in states for a in alphabet
    }
    ranks = tuple(str(i) for i in range(1, n_ranks + 1))
    carriers = rng.sample(range(n_states), n_ranks)
    ranking = {}
    for i, q in enumerate(states):
        if i in carriers:
            ranking[q] = ranks[carriers.index(i)]
        else:
            ranking[q] = ranks[rng.randrange(n_ranks)]
    shuffled = list(ranks)
    rng.shuffle(shuffled)
    pairs = [
        (shuffled[i], shuffled[j])
        for i in range(n_ranks)
        for j in range(i + 1, n_ranks)
        if rng.random() < 0.45
    ]
    order = PartialOrder(ranks, pairs)
    return PDFA(alphabet, states, states[0], transitions, order, ranking)


def moore_classes(automaton: PDFA) -> Tuple[FrozenSet[str], ...]:
    """Partition states by rank, refined until successor blocks stabilize."""
    automaton.validate_complete()
    block: Dict[str, int] = {}
    by_rank: Dict[object, int] = {}
    for q in automaton.states:
        block[q] = by_rank.setdefault(automaton.ranking[q], len(by_rank))
    while True:
        signature = {
            q: (block[q],)
            + tuple(block[automaton.transitions[(q, a)]] for a in automaton.alphabet)
            for q in automaton.states
        }
        renumber: Dict[tuple, int] = {}
        new_block = {q: renumber.setdefault(signature[q], len(renumber)) for q in automaton.states}
        if len(renumber) == len(set(block.values())):
            groups: Dict[int, Set[str]] = {}
            for q, b in new_block.items():
                groups.setdefault(b, set()).add(q)
            return tuple(frozenset(g) for g in groups.values())
        block = new_block


def is_canonical(automaton: PDFA) -> bool:
    """True when every state is reachable and no two states are equivalent,
    i.e. no equivalent model with fewer states exists."""
    if len(automaton.reachable_states()) != len(automaton.states):
        return False
    return len(moore_classes(automaton)) == len(automaton.states)


def random_canonical_pdfa(
    rng: random.Random,
    n_states: int,
    alphabet: Alphabet,
    n_ranks: int,
    max_tries: int = 10000,
) -> PDFA:
    """Rejection-sample random models until one is canonical."""
    if n_ranks == 1 and n_states > 1:
        raise PrefdfaError(
            "no canonical model exists: a single rank collapses every state"
        )
    for _ in range(max_tries):
        candidate = random_pdfa(rng, n_states, alphabet, n_ranks)
        if is_canonical(candidate):
            return candidate
    raise RetryExhaustedError(
        f"no canonical model with {n_states} states over {len(alphabet)} symbols found"
    )


def distinguishing_suffix(automaton: PDFA, q1: str, q2: str) -> Optional[Word]:
    """Shortest (shortlex) suffix on which the two states' ranks differ."""
    start = (q1, q2)
    seen = {start: ()}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        a, b = pair
        if automaton.ranking.get(a) != automaton.ranking.get(b):
            return seen[pair]
        for sym in automaton.alphabet:
            nxt = (automaton.transitions[(a, sym)], automaton.transitions[(b, sym)])
            if nxt not in seen:
                seen[nxt] = seen[pair] + (sym,)
                queue.append(nxt)
    return None


def characteristic_sample(
    automaton: PDFA, seed: int = 0, extra_words: int = 0
) -> PreferenceSample:
    """Build a sample guaranteed to be characteristic for a canonical model.

    Random draws over-approximate; targeted completion then covers the
    nucleus, adds a separating extension for every shortest-prefix /
    nucleus pair that random sampling left unsettled, and finally labels
    every pair of collected words.
    """
    sp_map, sp_words = shortest_prefixes(automaton)
    nu_words = nucleus(automaton)
    words: Set[Word] = set(sp_words) | set(nu_words)
    if extra_words:
        cfg = GenerationConfig(word_count=extra_words, seed=seed)
        words.update(draw_words(cfg, automaton.alphabet))
    state_of = {w: automaton.run(w) for w in set(sp_words) | set(nu_words)}
    for w in sp_words:
        for u in nu_words:
            if state_of[w] == state_of[u]:
                continue
            if automaton.rank_of_word(w) != automaton.rank_of_word(u):
                continue  # the pair itself already separates
            suffix = distinguishing_suffix(automaton, state_of[w], state_of[u])
            if suffix is None:
                raise PrefdfaError(
                    "model is not canonical: two states are indistinguishable"
                )
            words.add(w + suffix)
            words.add(u + suffix)
    cfg = GenerationConfig(word_count=0, comparison_fraction=1.0, seed=seed)
    return label_pairs(automaton, sorted(words, key=automaton.alphabet.shortlex_key), cfg)


# -- exhaustive minimum-consistent-model search -------------------------------------

_MAX_STATES = 5
_MAX_SYMBOLS = 3
_MAX_RANKS = 4


def min_consistent_pdfa(
    sample: PreferenceSample, k: int, max_ranks: int = _MAX_RANKS
) -> Optional[PDFA]:
    """Smallest consistent model with at most *k* states, or None.

    Exhaustively enumerates transition structures (state counts ascending,
    transition tables in lexicographic order).  For each structure the end
    states of the sample words induce equality / strict / incomparability
    constraints between states; the structure is kept iff those
    constraints admit a ranking, which is then constructed canonically.
    Capped at k <= 5, |alphabet| <= 3, max_ranks <= 4.
    """
    alphabet = sample.alphabet
    if k > _MAX_STATES or len(alphabet) > _MAX_SYMBOLS or max_ranks > _MAX_RANKS:
        raise BoundsExceededError(
            f"instance too large for exhaustive search "
            f"(k={k}, |alphabet|={len(alphabet)}, max_ranks={max_ranks})"
        )
    if k < 1 or max_ranks < 1:
        raise BoundsExceededError("k and max_ranks must be at least 1")

    words = sample.words
    triples = sample.sorted_triples()
    n_syms = len(alphabet)
    sym_index = {a: i for i, a in enumerate(alphabet.symbols)}

    for n in range(1, k + 1):
        for delta in itertools.product(range(n), repeat=n * n_syms):
            end: Dict[Word, int] = {}
            for w in words:
                state = 0
                for sym in w:
                    state = delta[state * n_syms + sym_index[sym]]
                end[w] = state
            decoration = _consistent_decoration(
                n, triples, end, max_ranks
            )
            if decoration is None:
                continue
            ranking, order = decoration
            states = tuple(f"q{i}" for i in range(n))
            transitions = {
                (states[q], a): states[delta[q * n_syms + i]]
                for q in range(n)
                for i, a in enumerate(alphabet.symbols)
            }
            found = PDFA(
                alphabet,
                states,
                states[0],
                transitions,
                order,
                {states[q]: ranking[q] for q in range(n)},
            )
            report = is_consistent(found, sample)
            if not report.consistent:
                raise AssertionError("search returned an inconsistent model")
            return found
    return None


def _consistent_decoration(n, triples, end, max_ranks):
    """Ranking + order satisfying the sample's end-state constraints, or None."""
    eq_pairs = set()
    strict_pairs = set()
    inc_pairs = set()
    for w1, w2, label in triples:
        a, b = end[w1], end[w2]
        if label is Label.INDIFFERENT:
            if a != b:
                eq_pairs.add((min(a, b), max(a, b)))
        elif label is Label.STRICT:
            if a == b:
                return None
            strict_pairs.add((a, b))
        else:
            if a == b:
                return None
            inc_pairs.add((min(a, b), max(a, b)))

    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in eq_pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    constrained = {find(q) for q in end.values()} if end else set()
    class_strict = set()
    for a, b in strict_pairs:
        ca, cb = find(a), find(b)
        if ca == cb:
            return None
        class_strict.add((ca, cb))
    class_inc = set()
    for a, b in inc_pairs:
        ca, cb = find(a), find(b)
        if ca == cb:
            return None
        class_inc.add((min(ca, cb), max(ca, cb)))

    closed = _transitive(class_strict)
    for a, b in closed:
        if (b, a) in closed:
            return None
    for a, b in class_inc:
        if (a, b) in closed or (b, a) in closed:
            return None

    classes = sorted(constrained)
    if len(classes) <= max_ranks:
        groups = {c: i for i, c in enumerate(classes)}
    else:
        groups = _merge_classes(classes, closed, class_inc, max_ranks)
        if groups is None:
            return None

    n_groups = max(groups.values()) + 1 if groups else 0
    rank_names = tuple(str(i + 1) for i in range(max(1, n_groups)))
    group_strict = {
        (rank_names[groups[a]], rank_names[groups[b]]) for a, b in closed
    }
    order = PartialOrder(rank_names, group_strict)
    ranking = {}
    for q in range(n):
        root = find(q)
        if root in groups:
            ranking[q] = rank_names[groups[root]]
        else:
            ranking[q] = rank_names[0]
    return ranking, order


def _merge_classes(classes, strict, incomparable, max_ranks):
    """Group constraint classes into at most max_ranks ranks, if possible.

    Only reached when more classes exist than allowed ranks; instances are
    tiny, so set partitions are enumerated directly.
    """
    for grouping in _set_partitions(classes):
        if len(set(grouping.values())) > max_ranks:
            continue
        if _grouping_valid(grouping, strict, incomparable):
            return grouping
    return None


def _grouping_valid(grouping, strict, incomparable):
    lifted_strict = set()
    for a, b in strict:
        ga, gb = grouping[a], grouping[b]
        if ga == gb:
            return False
        lifted_strict.add((ga, gb))
    lifted_strict = _transitive(lifted_strict)
    for a, b in lifted_strict:
        if (b, a) in lifted_strict:
            return False
    for a, b in incomparable:
        ga, gb = grouping[a], grouping[b]
        if ga == gb or (ga, gb) in lifted_strict or (gb, ga) in lifted_strict:
            return False
    return True


def _set_partitions(items):
    """All partitions of *items* as item -> group-id maps, canonical order."""
    items = list(items)

    def rec(i, assignment, n_groups):
        if i == len(items):
            yield dict(assignment)
            return
        for g in range(n_groups):
            assignment[items[i]] = g
            yield from rec(i + 1, assignment, n_groups)
        assignment[items[i]] = n_groups
        yield from rec(i + 1, assignment, n_groups + 1)
        del assignment[items[i]]

    yield from rec(0, {}, 0)


def _transitive(pairs):
    succ: Dict[object, set] = {}
    for a, b in pairs:
        succ.setdefault(a, set()).add(b)
    closed = set(pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(closed):
            for c in succ.get(b, ()):
                if (a, c) not in closed:
                    closed.add((a, c))
                    succ.setdefault(a, set()).add(c)
                    changed = True
    return closed


# -- positive/negative data: brute-force baseline and reduction ----------------------


@dataclass(frozen=True)
class MCDFAInstance:
    """Minimum-consistent-DFA instance: accept all of *positive*, reject
    all of *negative*, with at most *bound* states."""

    alphabet: Alphabet
    positive: FrozenSet[Word]
    negative: FrozenSet[Word]
    bound: int

    def __post_init__(self):
        if not self.positive or not self.negative:
            raise EmptySetError("positive and negative word sets must be nonempty")
        if self.positive & self.negative:
            raise PrefdfaError("positive and negative word sets overlap")


def brute_force_mcdfa(instance: MCDFAInstance) -> bool:
    """Exhaustively decide the DFA instance (only sensible for tiny bounds)."""
    if instance.bound > _MAX_STATES or len(instance.alphabet) > _MAX_SYMBOLS:
        raise BoundsExceededError("instance too large for exhaustive search")
    n_syms = len(instance.alphabet)
    sym_index = {a: i for i, a in enumerate(instance.alphabet.symbols)}

    def accepts(delta, accepting, word, n):
        state = 0
        for sym in word:
            state = delta[state * n_syms + sym_index[sym]]
        return state in accepting

    for n in range(1, instance.bound + 1):
        for delta in itertools.product(range(n), repeat=n * n_syms):
            for bits in range(2 ** n):
                accepting = {q for q in range(n) if bits >> q & 1}
                if all(accepts(delta, accepting, w, n) for w in instance.positive) and not any(
                    accepts(delta, accepting, w, n) for w in instance.negative
                ):
                    return True
    return False


def reduce_mcdfa(instance: MCDFAInstance) -> Tuple[PreferenceSample, int]:
    """Rewrite a positive/negative instance as a preference sample.

    All positive words are pairwise indifferent, all negative words are
    pairwise indifferent, and every positive word is strictly preferred to
    every negative word; the state bound passes through unchanged.  The
    sample size is |P|^2 + |N|^2 + |P||N|.
    """
    pos = sorted(instance.positive, key=instance.alphabet.shortlex_key)
    neg = sorted(instance.negative, key=instance.alphabet.shortlex_key)
    triples = []
    for a in pos:
        for b in pos:
            triples.append((a, b, Label.INDIFFERENT))
    for a in neg:
        for b in neg:
            triples.append((a, b, Label.INDIFFERENT))
    for a in pos:
        for b in neg:
            triples.append((a, b, Label.STRICT))
    return PreferenceSample(instance.alphabet, triples), instance.bound
