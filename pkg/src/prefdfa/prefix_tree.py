"""Prefix-tree automaton over the words of a sample.

States are all prefixes of the sample words, indexed in shortlex order
(state 0 is the empty word); the transition wa -> state exists whenever wa
is itself a prefix.  States that are sample words carry the index of their
indifference block as rank; interior states are unranked.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .automata import PNFA, to_dot, word_state_name
from .order import PartialOrder
from .sample import ClosedSample, PreferenceSample, RankPartition, rank_partition
from .words import Alphabet, Word, prefixes


class PrefixTree:
    """Tree-shaped, partially ranked automaton over Pref(W_S)."""

    def __init__(
        self,
        alphabet: Alphabet,
        words: Tuple[Word, ...],
        children: Tuple[Dict[str, int], ...],
        ranks: Tuple[Optional[int], ...],
        partition: RankPartition,
    ):
        self.alphabet = alphabet
        self.words = words
        self.index = {w: i for i, w in enumerate(words)}
        self.children = children
        self.ranks = ranks
        self.partition = partition
        self.order: PartialOrder = partition.order

    def __len__(self) -> int:
        return len(self.words)

    def state_of(self, word: Word) -> int:
        return self.index[tuple(word)]

    def run(self, word: Word) -> Optional[int]:
        state = 0
        for sym in word:
            state = self.children[state].get(sym)
            if state is None:
                return None
        return state

    def parent_of(self, state: int) -> Optional[int]:
        if state == 0:
            return None
        return self.index[self.words[state][:-1]]

    def as_pnfa(self) -> PNFA:
        """View the tree as a (deterministic) partially ranked automaton."""
        names = [word_state_name(w) for w in self.words]
        transitions = {
            (names[src], sym): frozenset([names[dst]])
            for src, kids in enumerate(self.children)
            for sym, dst in kids.items()
        }
        ranking = {
            names[i]: rank for i, rank in enumerate(self.ranks) if rank is not None
        }
        return PNFA(self.alphabet, names, names[0], transitions, self.order, ranking)

    def to_dot(self, name: str = "prefix_tree") -> str:
        return to_dot(self.as_pnfa(), name=name)


def build_prefix_tree(sample: PreferenceSample | ClosedSample) -> PrefixTree:
    """Construct the prefix tree of a sample, ranked by its indifference blocks."""
    partition = rank_partition(sample)
    alphabet = sample.alphabet
    prefix_set = set()
    for block in partition.blocks:
        for word in block:
            prefix_set.update(prefixes(word))
    prefix_set.add(())
    words = tuple(sorted(prefix_set, key=alphabet.shortlex_key))
    index = {w: i for i, w in enumerate(words)}
    children: List[Dict[str, int]] = [{} for _ in words]
    for i, word in enumerate(words):
        if word:
            children[index[word[:-1]]][word[-1]] = i
    ranks = tuple(partition.maybe_block_of(w) for w in words)
    return PrefixTree(alphabet, words, tuple(children), ranks, partition)
