"""Partial orders over ranks and the four-way comparison outcome."""

from __future__ import annotations

import enum
from typing import Hashable, Iterable, Tuple

from .errors import OrderCycleError, PrefdfaError

Rank = Hashable


class PreferenceCategory(enum.Enum):
    """Outcome of comparing two words (or two ranks)."""

    INDIFFERENT = "indifferent"
    FIRST_STRICT = "first-strict"
    SECOND_STRICT = "second-strict"
    INCOMPARABLE = "incomparable"
    # Only produced when querying partial automata (learning artifacts).
    UNKNOWN = "unknown"

    def swap(self) -> "PreferenceCategory":
        """The category of the same pair with its two sides exchanged."""
        if self is PreferenceCategory.FIRST_STRICT:
            return PreferenceCategory.SECOND_STRICT
        if self is PreferenceCategory.SECOND_STRICT:
            return PreferenceCategory.FIRST_STRICT
        return self


class PartialOrder:
    """A finite set of ranks with a strict partial order between them.

    ``strict_pairs`` are (higher, lower) pairs; the relation is stored
    transitively closed.  A cycle through two distinct ranks violates
    antisymmetry and raises :class:`OrderCycleError` at construction.
    """

    def __init__(self, ranks: Iterable[Rank], strict_pairs: Iterable[Tuple[Rank, Rank]] = ()):
        self.ranks = tuple(ranks)
        if len(set(self.ranks)) != len(self.ranks):
            raise PrefdfaError(f"duplicate ranks: {self.ranks}")
        rank_set = set(self.ranks)
        pairs = set()
        for hi, lo in strict_pairs:
            if hi not in rank_set or lo not in rank_set:
                raise PrefdfaError(f"order pair ({hi}, {lo}) uses an undeclared rank")
            if hi == lo:
                raise OrderCycleError(f"rank {hi} declared strictly above itself", pair=(hi, lo))
            pairs.add((hi, lo))
        self.strict_pairs = frozenset(_transitive_closure(pairs))
        for hi, lo in self.strict_pairs:
            if (lo, hi) in self.strict_pairs:
                raise OrderCycleError(
                    f"ranks {hi} and {lo} are each strictly above the other",
                    pair=(hi, lo),
                )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PartialOrder)
            and set(self.ranks) == set(other.ranks)
            and self.strict_pairs == other.strict_pairs
        )

    def __repr__(self) -> str:
        pairs = ", ".join(f"{hi}>{lo}" for hi, lo in sorted(self.strict_pairs, key=str))
        return f"PartialOrder(ranks={list(self.ranks)}, strict=[{pairs}])"

    def above(self, o1: Rank, o2: Rank) -> bool:
        return (o1, o2) in self.strict_pairs

    def compare(self, o1: Rank, o2: Rank) -> PreferenceCategory:
        return rank_compare(self, o1, o2)

    def covering_pairs(self) -> Tuple[Tuple[Rank, Rank], ...]:
        """Transitive reduction of the strict relation, for display."""
        out = []
        for hi, lo in self.strict_pairs:
            if any(
                (hi, mid) in self.strict_pairs and (mid, lo) in self.strict_pairs
                for mid in self.ranks
            ):
                continue
            out.append((hi, lo))
        out.sort(key=lambda p: (self._pos(p[0]), self._pos(p[1])))
        return tuple(out)

    def _pos(self, rank: Rank) -> int:
        return self.ranks.index(rank)


def rank_compare(order: PartialOrder, o1: Rank, o2: Rank) -> PreferenceCategory:
    """Classify an ordered rank pair under a partial order."""
    known = set(order.ranks)
    for o in (o1, o2):
        if o not in known:
            raise PrefdfaError(f"unknown rank {o!r}")
    if o1 == o2:
        return PreferenceCategory.INDIFFERENT
    if (o1, o2) in order.strict_pairs:
        return PreferenceCategory.FIRST_STRICT
    if (o2, o1) in order.strict_pairs:
        return PreferenceCategory.SECOND_STRICT
    return PreferenceCategory.INCOMPARABLE


def _transitive_closure(pairs):
    closure = set(pairs)
    changed = True
    while changed:
        changed = False
        for a, b in list(closure):
            for c, d in list(closure):
                if b == c and (a, d) not in closure:
                    closure.add((a, d))
                    changed = True
    return closure
