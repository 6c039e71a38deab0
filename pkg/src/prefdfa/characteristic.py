"""Shortest prefixes, nucleus, and the characteristic-sample decision.

A sample is characteristic for a canonical model when (1) every nucleus
word is a prefix of some sample word, (2) every shortest-prefix /
nucleus pair reaching distinct states is separated inside the sample by a
common suffix with a strict or incomparable closed triple, (3) every
state is reached by a sample word, and (4) the closed sample settles
every pair of sample words exactly as the model does.  Learning from a
characteristic sample provably recovers the model up to equivalence.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .automata import PDFA
from .errors import UnreachableStateError
from .order import PreferenceCategory, rank_compare
from .sample import ClosedSample, Label, PreferenceSample, close_sample
from .words import Word, prefixes


def shortest_prefixes(automaton: PDFA) -> Tuple[Dict[str, Word], Tuple[Word, ...]]:
    """Map every state to its shortlex-minimal access word.

    Returns the mapping and the set of access words (in shortlex order).
    Raises :class:`UnreachableStateError` when some state has no access word.
    """
    alphabet = automaton.alphabet
    access: Dict[str, Word] = {automaton.initial: ()}
    queue = deque([automaton.initial])
    while queue:
        state = queue.popleft()
        for sym in alphabet:
            nxt = automaton.transitions.get((state, sym))
            if nxt is not None and nxt not in access:
                access[nxt] = access[state] + (sym,)
                queue.append(nxt)
    unreachable = [q for q in automaton.states if q not in access]
    if unreachable:
        raise UnreachableStateError(unreachable)
    words = tuple(sorted(access.values(), key=alphabet.shortlex_key))
    return access, words


def nucleus(automaton: PDFA) -> Tuple[Word, ...]:
    """One-letter extensions of all shortest prefixes, plus the empty word."""
    _, sp_words = shortest_prefixes(automaton)
    out = {(): None}
    for word in sp_words:
        for sym in automaton.alphabet:
            out[word + (sym,)] = None
    return tuple(sorted(out, key=automaton.alphabet.shortlex_key))


@dataclass(frozen=True)
class ConditionReport:
    passed: bool
    witnesses: Tuple[object, ...]
    witness_count: int


@dataclass(frozen=True)
class CharacteristicReport:
    conditions: Tuple[ConditionReport, ConditionReport, ConditionReport, ConditionReport]

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.conditions)

    def condition(self, number: int) -> ConditionReport:
        return self.conditions[number - 1]

    def violated(self) -> Tuple[int, ...]:
        return tuple(n for n in (1, 2, 3, 4) if not self.conditions[n - 1].passed)


_WITNESS_CAP = 20


def _condition(witnesses: List) -> ConditionReport:
    return ConditionReport(not witnesses, tuple(witnesses[:_WITNESS_CAP]), len(witnesses))


def is_characteristic(
    automaton: PDFA, sample: PreferenceSample | ClosedSample
) -> CharacteristicReport:
    """Evaluate the four characteristic-sample conditions against a model.

    The model is expected to be canonical (state-minimal); minimality can
    be attested independently with the exhaustive search oracle.
    """
    automaton.validate_complete()
    closed = sample if isinstance(sample, ClosedSample) else close_sample(sample)
    alphabet = automaton.alphabet
    words = closed.words
    word_set = set(words)
    prefix_set = set()
    for w in words:
        prefix_set.update(prefixes(w))
    prefix_set.add(())

    sp_map, sp_words = shortest_prefixes(automaton)
    nu_words = nucleus(automaton)

    # Condition 1: the nucleus is covered by the sample's prefixes.
    missing_nucleus = [u for u in nu_words if u not in prefix_set]

    # Condition 2: separating suffixes exist inside the sample for every
    # shortest-prefix / nucleus pair that reaches distinct states.  Only
    # suffixes realizable within W_S need to be searched.
    unseparated = []
    state_of = {w: automaton.run(w) for w in set(sp_words) | set(nu_words)}
    for w in sp_words:
        for u in nu_words:
            if state_of[w] == state_of[u]:
                continue
            if not _separated(closed, word_set, words, w, u):
                unseparated.append((w, u))

    # Condition 3: every state is reached by some sample word.
    reached = {automaton.run(w) for w in words}
    unreached = [q for q in automaton.states if q not in reached]

    # Condition 4: the closed sample settles every word pair the way the
    # model does, and stays silent on incomparable pairs.
    uncompared = []
    rank_of = {w: automaton.rank_of_word(w) for w in words}
    contains = closed.contains
    for i, w in enumerate(words):
        for u in words[i + 1 :]:
            category = rank_compare(automaton.order, rank_of[w], rank_of[u])
            if category is PreferenceCategory.INDIFFERENT:
                ok = contains(w, u, Label.INDIFFERENT)
            elif category is PreferenceCategory.FIRST_STRICT:
                ok = contains(w, u, Label.STRICT)
            elif category is PreferenceCategory.SECOND_STRICT:
                ok = contains(u, w, Label.STRICT)
            else:
                ok = not (
                    contains(w, u, Label.INDIFFERENT)
                    or contains(w, u, Label.STRICT)
                    or contains(u, w, Label.STRICT)
                )
            if not ok:
                uncompared.append((w, u, category))

    return CharacteristicReport(
        (
            _condition(missing_nucleus),
            _condition(unseparated),
            _condition(unreached),
            _condition(uncompared),
        )
    )


def _separated(
    closed: ClosedSample,
    word_set,
    words,
    w: Word,
    u: Word,
) -> bool:
    lw = len(w)
    for v in words:
        if v[:lw] != w:
            continue
        suffix = v[lw:]
        other = u + suffix
        if other not in word_set:
            continue
        if (
            closed.contains(v, other, Label.STRICT)
            or closed.contains(other, v, Label.STRICT)
            or closed.contains(v, other, Label.INCOMPARABLE)
        ):
            return True
    return False
