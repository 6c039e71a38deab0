"""Preference automata: ranked deterministic/nondeterministic machines.

A ranked DFA assigns every state a rank from a partially ordered rank set;
a pair of words is then indifferent, strictly ordered one way or the
other, or incomparable according to the ranks of the two states their
runs end in.  The deterministic variant may be *partial* (missing
transitions or unranked states) when it was produced by learning from an
uninformative sample; comparisons that leave the defined region yield
``UNKNOWN`` instead of failing.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .errors import AlphabetError, FormatError, PrefdfaError
from .order import PartialOrder, PreferenceCategory, Rank, rank_compare
from .words import Alphabet, Word, format_word, parse_word


class PDFA:
    """Deterministic ranked automaton.

    ``transitions`` maps (state, symbol) to the successor state and may be
    partial; ``ranking`` maps states to ranks and may likewise be partial.
    A fully defined instance (the normal case for hand-written models)
    satisfies ``is_complete``.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        states: Sequence[str],
        initial: str,
        transitions: Dict[Tuple[str, str], str],
        order: PartialOrder,
        ranking: Dict[str, Rank],
    ):
        self.alphabet = alphabet
        self.states = tuple(states)
        self.initial = initial
        self.transitions = dict(transitions)
        self.order = order
        self.ranking = dict(ranking)
        self._validate()

    def _validate(self) -> None:
        declared = set(self.states)
        if len(declared) != len(self.states):
            raise PrefdfaError("duplicate state identifiers")
        if self.initial not in declared:
            raise PrefdfaError(f"initial state {self.initial!r} not declared")
        for (src, sym), dst in self.transitions.items():
            if src not in declared or dst not in declared:
                raise PrefdfaError(f"transition {src} -{sym}-> {dst} uses undeclared state")
            self.alphabet.index(sym)
        ranks = set(self.order.ranks)
        for state, rank in self.ranking.items():
            if state not in declared:
                raise PrefdfaError(f"ranking of undeclared state {state!r}")
            if rank not in ranks:
                raise PrefdfaError(f"state {state!r} ranked with undeclared rank {rank!r}")

    # -- completeness ----------------------------------------------------

    def missing_transitions(self) -> List[Tuple[str, str]]:
        return [
            (q, a)
            for q in self.states
            for a in self.alphabet
            if (q, a) not in self.transitions
        ]

    def unranked_states(self) -> List[str]:
        return [q for q in self.states if q not in self.ranking]

    def unused_ranks(self) -> List[Rank]:
        used = set(self.ranking.values())
        return [o for o in self.order.ranks if o not in used]

    @property
    def is_complete(self) -> bool:
        return not self.missing_transitions() and not self.unranked_states()

    def validate_complete(self) -> None:
        """Enforce the full model invariants: total transitions, total and
        surjective ranking."""
        missing = self.missing_transitions()
        if missing:
            q, a = missing[0]
            raise PrefdfaError(f"transition function undefined at ({q}, {a})")
        unranked = self.unranked_states()
        if unranked:
            raise PrefdfaError(f"state {unranked[0]!r} has no rank")
        unused = self.unused_ranks()
        if unused:
            raise PrefdfaError(f"rank {unused[0]!r} assigned to no state")

    # -- runs and comparisons --------------------------------------------

    def run(self, word: Sequence[str]) -> Optional[str]:
        """End state of the run on *word*, or None if a transition is missing."""
        state = self.initial
        for sym in self.alphabet.check_word(word):
            state = self.transitions.get((state, sym))
            if state is None:
                return None
        return state

    def rank_of_word(self, word: Sequence[str]) -> Optional[Rank]:
        state = self.run(word)
        if state is None:
            return None
        return self.ranking.get(state)

    def reachable_states(self) -> List[str]:
        seen = {self.initial}
        queue = deque([self.initial])
        while queue:
            q = queue.popleft()
            for a in self.alphabet:
                nxt = self.transitions.get((q, a))
                if nxt is not None and nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
        return [q for q in self.states if q in seen]


class PNFA:
    """Nondeterministic, partially ranked generalization of :class:`PDFA`.

    Arises as the quotient of a prefix tree under a state partition.
    """

    def __init__(
        self,
        alphabet: Alphabet,
        states: Sequence[str],
        initial: str,
        transitions: Dict[Tuple[str, str], FrozenSet[str]],
        order: PartialOrder,
        ranking: Dict[str, Rank],
    ):
        self.alphabet = alphabet
        self.states = tuple(states)
        self.initial = initial
        self.transitions = {key: frozenset(vals) for key, vals in transitions.items()}
        self.order = order
        self.ranking = dict(ranking)
        declared = set(self.states)
        if self.initial not in declared:
            raise PrefdfaError(f"initial state {self.initial!r} not declared")
        for (src, sym), dsts in self.transitions.items():
            if src not in declared or not dsts <= declared:
                raise PrefdfaError(f"transition from {src} on {sym} uses undeclared state")
            self.alphabet.index(sym)
        for state, rank in self.ranking.items():
            if rank not in set(self.order.ranks):
                raise PrefdfaError(f"state {state!r} ranked with undeclared rank {rank!r}")

    def successors(self, state: str, symbol: str) -> FrozenSet[str]:
        return self.transitions.get((state, symbol), frozenset())

    @property
    def is_deterministic(self) -> bool:
        return all(len(dsts) <= 1 for dsts in self.transitions.values())


def compare_words(automaton: PDFA, w1: Sequence[str], w2: Sequence[str]) -> PreferenceCategory:
    """Four-way comparison of two words under a ranked automaton.

    Returns ``UNKNOWN`` when either run leaves the defined transition
    domain or ends in an unranked state (partial automata only).
    """
    r1 = automaton.rank_of_word(w1)
    r2 = automaton.rank_of_word(w2)
    if r1 is None or r2 is None:
        return PreferenceCategory.UNKNOWN
    return rank_compare(automaton.order, r1, r2)


# -- consistency with a sample -------------------------------------------


@dataclass(frozen=True)
class ConsistencyReport:
    """Outcome of checking a sample against an automaton.

    ``violations`` holds (w, w', label, actual category) for every triple
    whose observed category contradicts its label.  Triples that cannot be
    evaluated on a partial automaton are listed in ``unknown`` and do not
    count as violations.
    """

    violations: Tuple[Tuple[Word, Word, str, PreferenceCategory], ...]
    unknown: Tuple[Tuple[Word, Word, str], ...] = ()

    @property
    def consistent(self) -> bool:
        return not self.violations


def is_consistent(automaton: PDFA, sample) -> ConsistencyReport:
    """Check every triple of *sample* against *automaton* (label vs category)."""
    from .sample import LABEL_CATEGORY  # local import to avoid a cycle

    if sample.alphabet != automaton.alphabet:
        raise AlphabetError(
            f"sample alphabet {sample.alphabet!r} differs from automaton alphabet "
            f"{automaton.alphabet!r}"
        )
    rank_cache: Dict[Word, Optional[Rank]] = {}

    def cached_rank(word: Word) -> Optional[Rank]:
        if word not in rank_cache:
            rank_cache[word] = automaton.rank_of_word(word)
        return rank_cache[word]

    violations = []
    unknown = []
    for w1, w2, label in sample.sorted_triples():
        r1, r2 = cached_rank(w1), cached_rank(w2)
        if r1 is None or r2 is None:
            unknown.append((w1, w2, label))
            continue
        actual = rank_compare(automaton.order, r1, r2)
        if actual is not LABEL_CATEGORY[label]:
            violations.append((w1, w2, label, actual))
    return ConsistencyReport(tuple(violations), tuple(unknown))


# -- equivalence -----------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    # Reached product pairs (state of A, state of B); the induced state
    # correspondence when the automata are equivalent.
    correspondence: Tuple[Tuple[str, str], ...] = ()
    counterexample: Optional[Tuple[Word, Word]] = None
    categories: Optional[Tuple[PreferenceCategory, PreferenceCategory]] = None

    def __bool__(self) -> bool:
        return self.equivalent


def equivalent(a: PDFA, b: PDFA) -> EquivalenceResult:
    """Decide whether two automata encode the same preorder over all words.

    Synchronized product reachability collects every pair of states the
    two automata can occupy after reading a common word; the automata are
    equivalent iff all rank comparisons agree across those pairs.  On
    failure the returned counterexample is a shortest word pair (by total
    length, then shortlex) whose categories differ.  Partial automata are
    supported: a word defined on one side only, or ranked on one side
    only, compares as ``UNKNOWN`` there and immediately separates the two.
    """
    if a.alphabet != b.alphabet:
        raise AlphabetError("equivalence requires identical alphabets")
    alphabet = a.alphabet

    # BFS in alphabet order assigns each product pair its shortlex-minimal
    # access word.
    start = (a.initial, b.initial)
    access: Dict[Tuple[str, str], Word] = {start: ()}
    queue = deque([start])
    while queue:
        pa, pb = queue.popleft()
        word = access[(pa, pb)]
        for sym in alphabet:
            na = a.transitions.get((pa, sym))
            nb = b.transitions.get((pb, sym))
            if (na is None) != (nb is None):
                # Defined on one side only: the extension compares as
                # UNKNOWN there but not on the other side.
                witness = word + (sym,)
                return EquivalenceResult(
                    False,
                    counterexample=(witness, witness),
                    categories=_category_pair(a, b, witness, witness),
                )
            if na is None:
                continue
            if (na, nb) not in access:
                access[(na, nb)] = word + (sym,)
                queue.append((na, nb))

    pairs = sorted(access, key=lambda p: alphabet.shortlex_key(access[p]))
    for pa, pb in pairs:
        if (pa in a.ranking) != (pb in b.ranking):
            witness = access[(pa, pb)]
            return EquivalenceResult(
                False,
                counterexample=(witness, witness),
                categories=_category_pair(a, b, witness, witness),
            )

    ranked = [(pa, pb) for pa, pb in pairs if pa in a.ranking]
    best = None
    for i, (p1a, p1b) in enumerate(ranked):
        for p2a, p2b in ranked[i + 1 :]:
            cat_a = rank_compare(a.order, a.ranking[p1a], a.ranking[p2a])
            cat_b = rank_compare(b.order, b.ranking[p1b], b.ranking[p2b])
            if cat_a is cat_b:
                continue
            w1 = access[(p1a, p1b)]
            w2 = access[(p2a, p2b)]
            key = (
                len(w1) + len(w2),
                alphabet.shortlex_key(w1),
                alphabet.shortlex_key(w2),
            )
            if best is None or key < best[0]:
                best = (key, (w1, w2), (cat_a, cat_b))
    if best is not None:
        return EquivalenceResult(False, counterexample=best[1], categories=best[2])
    return EquivalenceResult(True, correspondence=tuple(pairs))


def _category_pair(a: PDFA, b: PDFA, w1: Word, w2: Word):
    return (compare_words(a, w1, w2), compare_words(b, w1, w2))


# -- text format ------------------------------------------------------------
#
# One document, line oriented; blank lines and '#' comments are ignored.
#
#   alphabet: a b
#   states: 00 10 01 11
#   initial: 00
#   ranks: blue orange green
#   order: blue > orange          (repeatable; closure is implied)
#   transition: 00 a 10           (repeatable)
#   ranking: 00 blue              (repeatable)


def loads_pdfa(text: str) -> PDFA:
    alphabet = None
    states: List[str] = []
    initial = None
    ranks: List[str] = []
    order_pairs: List[Tuple[str, str]] = []
    transitions: Dict[Tuple[str, str], str] = {}
    ranking: Dict[str, str] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise FormatError(f"expected 'key: value', got {line!r}", line=lineno)
        key, _, rest = line.partition(":")
        key = key.strip()
        fields = rest.split()
        try:
            if key == "alphabet":
                alphabet = Alphabet(fields)
            elif key == "states":
                states.extend(fields)
            elif key == "initial":
                (initial,) = fields
            elif key == "ranks":
                ranks.extend(fields)
            elif key == "order":
                hi, gt, lo = fields
                if gt != ">":
                    raise ValueError
                order_pairs.append((hi, lo))
            elif key == "transition":
                src, sym, dst = fields
                if (src, sym) in transitions and transitions[(src, sym)] != dst:
                    raise FormatError(
                        f"conflicting transitions from {src} on {sym}", line=lineno
                    )
                transitions[(src, sym)] = dst
            elif key == "ranking":
                state, rank = fields
                if state in ranking and ranking[state] != rank:
                    raise FormatError(f"conflicting ranks for state {state}", line=lineno)
                ranking[state] = rank
            else:
                raise FormatError(f"unknown section {key!r}", line=lineno)
        except ValueError:
            raise FormatError(f"malformed {key!r} line: {line!r}", line=lineno) from None

    if alphabet is None:
        raise FormatError("missing 'alphabet:' line")
    if initial is None:
        raise FormatError("missing 'initial:' line")
    if not states:
        raise FormatError("missing 'states:' line")
    try:
        order = PartialOrder(ranks, order_pairs)
        return PDFA(alphabet, states, initial, transitions, order, ranking)
    except PrefdfaError as exc:
        raise FormatError(str(exc)) from exc


def dumps_pdfa(automaton: PDFA, header: str = "") -> str:
    lines = []
    if header:
        lines.extend(f"# {text}" for text in header.splitlines())
    lines.append("alphabet: " + " ".join(automaton.alphabet.symbols))
    lines.append("states: " + " ".join(automaton.states))
    lines.append(f"initial: {automaton.initial}")
    lines.append("ranks: " + " ".join(str(o) for o in automaton.order.ranks))
    for hi, lo in automaton.order.covering_pairs():
        lines.append(f"order: {hi} > {lo}")
    state_pos = {q: i for i, q in enumerate(automaton.states)}
    for (src, sym), dst in sorted(
        automaton.transitions.items(),
        key=lambda item: (state_pos[item[0][0]], automaton.alphabet.index(item[0][1])),
    ):
        lines.append(f"transition: {src} {sym} {dst}")
    for state in automaton.states:
        if state in automaton.ranking:
            lines.append(f"ranking: {state} {automaton.ranking[state]}")
    return "\n".join(lines) + "\n"


def load_pdfa(path) -> PDFA:
    with open(path, "r", encoding="utf-8") as handle:
        return loads_pdfa(handle.read())


def dump_pdfa(automaton: PDFA, path, header: str = "") -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps_pdfa(automaton, header=header))


# -- DOT export --------------------------------------------------------------

_PALETTE = (
    "#aec7e8",  # light blue
    "#ffbb78",  # light orange
    "#98df8a",  # light green
    "#ff9896",  # light red
    "#c5b0d5",  # light purple
    "#c49c94",  # light brown
    "#f7b6d2",  # light pink
    "#dbdb8d",  # light olive
)


def _rank_colors(order: PartialOrder) -> Dict[Rank, str]:
    return {o: _PALETTE[i % len(_PALETTE)] for i, o in enumerate(order.ranks)}


def to_dot(automaton, name: str = "automaton") -> str:
    """Render an automaton (PDFA or PNFA) plus its rank order as DOT text.

    Emits two digraphs in one document: the state graph with states
    colored by rank, and the rank order (transitive reduction).
    """
    colors = _rank_colors(automaton.order)
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  node [shape=ellipse, style=filled];']
    lines.append('  __start [shape=point, style=invis];')
    for state in automaton.states:
        rank = automaton.ranking.get(state)
        fill = colors.get(rank, "#ffffff")
        label = state if rank is None else f"{state}\\n{rank}"
        lines.append(f'  "{state}" [label="{label}", fillcolor="{fill}"];')
    lines.append(f'  __start -> "{automaton.initial}";')
    for (src, sym), dst in sorted(
        automaton.transitions.items(),
        key=lambda item: (item[0][0], automaton.alphabet.index(item[0][1])),
    ):
        dsts = dst if isinstance(dst, frozenset) else frozenset([dst])
        for one in sorted(dsts):
            lines.append(f'  "{src}" -> "{one}" [label="{sym}"];')
    lines.append("}")
    lines.append(f"digraph {name}_rank_order {{")
    lines.append('  node [shape=circle, style=filled];')
    for rank in automaton.order.ranks:
        lines.append(f'  "{rank}" [fillcolor="{colors[rank]}"];')
    for hi, lo in automaton.order.covering_pairs():
        lines.append(f'  "{hi}" -> "{lo}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def word_state_name(word: Word) -> str:
    """Canonical state identifier for a prefix-word state."""
    return format_word(word)


def parse_state_word(name: str, alphabet: Alphabet) -> Word:
    return parse_word(name, alphabet)
