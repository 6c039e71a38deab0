"""Preference samples: labeled pairwise comparisons and their closure.

A sample is a finite set of triples (w, w', b) where b says the words are
indifferent, the first is strictly preferred, or the two are incomparable.
Closing a sample saturates it under the preorder axioms; because the
closed set is fully determined by (i) the connected components of the
indifference relation and (ii) block-level strict/incomparable relations,
it is stored in that compressed form rather than as an explicit triple
set, which keeps closure near-linear in the sample size.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import ClosureConflictError, FormatError, OrderCycleError
from .order import PartialOrder, PreferenceCategory
from .words import Alphabet, Word, format_word, parse_word


class Label(enum.Enum):
    """Comparison label carried by a sample triple."""

    INDIFFERENT = "="
    STRICT = ">"
    INCOMPARABLE = "#"

    @property
    def token(self) -> str:
        return self.value


LABEL_CATEGORY = {
    Label.INDIFFERENT: PreferenceCategory.INDIFFERENT,
    Label.STRICT: PreferenceCategory.FIRST_STRICT,
    Label.INCOMPARABLE: PreferenceCategory.INCOMPARABLE,
}

_LABEL_SORT = {Label.INDIFFERENT: 0, Label.STRICT: 1, Label.INCOMPARABLE: 2}

Triple = Tuple[Word, Word, Label]


class PreferenceSample:
    """A finite set of comparison triples over one alphabet."""

    def __init__(self, alphabet: Alphabet, triples: Iterable[Triple]):
        self.alphabet = alphabet
        self.triples = frozenset(
            (tuple(w1), tuple(w2), label) for w1, w2, label in triples
        )

    @property
    def words(self) -> Tuple[Word, ...]:
        """W_S: every word appearing in some triple, in shortlex order."""
        seen = {w for w1, w2, _ in self.triples for w in (w1, w2)}
        return tuple(sorted(seen, key=self.alphabet.shortlex_key))

    def sorted_triples(self) -> List[Triple]:
        key = self.alphabet.shortlex_key
        return sorted(
            self.triples, key=lambda t: (key(t[0]), key(t[1]), _LABEL_SORT[t[2]])
        )

    def __len__(self) -> int:
        return len(self.triples)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PreferenceSample)
            and self.alphabet == other.alphabet
            and self.triples == other.triples
        )

    def __repr__(self) -> str:
        return f"PreferenceSample({len(self.triples)} triples over {self.alphabet!r})"


# -- diagnostics --------------------------------------------------------------


@dataclass(frozen=True)
class Diagnostic:
    kind: str
    message: str
    triple: Optional[Triple] = None


@dataclass(frozen=True)
class DiagnosticsReport:
    diagnostics: Tuple[Diagnostic, ...]

    @property
    def clean(self) -> bool:
        return not self.diagnostics


def validate_sample(sample: PreferenceSample) -> DiagnosticsReport:
    """Report structural problems without raising.

    Flags conflicting labels on one word pair, strict or incomparable
    self-comparisons, and symbols outside the declared alphabet.
    """
    out: List[Diagnostic] = []
    for w1, w2, label in sample.triples:
        for word in (w1, w2):
            for sym in word:
                if sym not in sample.alphabet:
                    out.append(
                        Diagnostic(
                            "foreign-symbol",
                            f"symbol {sym!r} of {format_word(word)} is not in the alphabet",
                            (w1, w2, label),
                        )
                    )
        if w1 == w2 and label is Label.STRICT:
            out.append(
                Diagnostic(
                    "self-strict",
                    f"{format_word(w1)} declared strictly preferred to itself",
                    (w1, w2, label),
                )
            )
        if w1 == w2 and label is Label.INCOMPARABLE:
            out.append(
                Diagnostic(
                    "self-incomparable",
                    f"{format_word(w1)} declared incomparable with itself",
                    (w1, w2, label),
                )
            )

    # Claims per unordered pair: indifferent / incomparable are symmetric,
    # strict keeps its direction.
    claims: Dict[FrozenSet[Word], set] = {}
    for w1, w2, label in sample.triples:
        if w1 == w2:
            continue
        pair = frozenset((w1, w2))
        if label is Label.STRICT:
            claim = ("strict", w1, w2)
        else:
            claim = (label.value,)
        claims.setdefault(pair, set()).add(claim)
    for pair, seen in sorted(
        claims.items(), key=lambda kv: sorted(map(format_word, kv[0]))
    ):
        if len(seen) > 1:
            names = ", ".join(sorted(str(c[0]) for c in seen))
            a, b = sorted(pair, key=sample.alphabet.shortlex_key)
            out.append(
                Diagnostic(
                    "conflicting-labels",
                    f"pair ({format_word(a)}, {format_word(b)}) carries conflicting labels: {names}",
                )
            )
    return DiagnosticsReport(tuple(out))


# -- indifference graph --------------------------------------------------------


@dataclass(frozen=True)
class IndifferenceGraph:
    """Undirected graph over W_S with an edge per indifferent pair."""

    vertices: Tuple[Word, ...]
    edges: FrozenSet[Tuple[Word, Word]]  # stored with shortlex-sorted endpoints

    def components(self) -> Tuple[FrozenSet[Word], ...]:
        """Connected components; isolated vertices form singleton components."""
        adjacency: Dict[Word, List[Word]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            if a != b:
                adjacency[a].append(b)
                adjacency[b].append(a)
        seen = set()
        out = []
        for v in self.vertices:
            if v in seen:
                continue
            stack = [v]
            comp = set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(adjacency[x])
            seen |= comp
            out.append(frozenset(comp))
        return tuple(out)


def indifference_graph(sample: PreferenceSample) -> IndifferenceGraph:
    """Build the indifference graph of a raw sample (isolated words kept)."""
    key = sample.alphabet.shortlex_key
    edges = set()
    for w1, w2, label in sample.triples:
        if label is Label.INDIFFERENT:
            a, b = sorted((w1, w2), key=key)
            edges.add((a, b))
    return IndifferenceGraph(sample.words, frozenset(edges))


# -- closure -------------------------------------------------------------------


class ClosedSample:
    """The closure S° of a sample under the six saturation rules.

    Rules: the sample itself; reflexive indifference on W_S; symmetry of
    indifference and incomparability; transitivity of indifference and of
    strict preference; and absorption of indifference into strict or
    incomparable relations on either side.

    Stored compressed: ``blocks`` are the indifference classes (indexed
    1..B by the shortlex order of each block's minimal word), strict and
    incomparable relations are kept between block indices.  The explicit
    triple set is recoverable via :meth:`triples`.
    """

    def __init__(
        self,
        source: PreferenceSample,
        blocks: Sequence[Tuple[Word, ...]],
        strict: FrozenSet[Tuple[int, int]],
        incomparable: FrozenSet[Tuple[int, int]],
    ):
        self.source = source
        self.alphabet = source.alphabet
        self.blocks = tuple(tuple(b) for b in blocks)
        self.strict = frozenset(strict)
        self.incomparable = frozenset(incomparable)
        self.block_of: Dict[Word, int] = {}
        for idx, block in enumerate(self.blocks, start=1):
            for word in block:
                self.block_of[word] = idx

    @property
    def words(self) -> Tuple[Word, ...]:
        return tuple(sorted(self.block_of, key=self.alphabet.shortlex_key))

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(range(1, len(self.blocks) + 1))

    def contains(self, w1: Word, w2: Word, label: Label) -> bool:
        b1 = self.block_of.get(tuple(w1))
        b2 = self.block_of.get(tuple(w2))
        if b1 is None or b2 is None:
            return False
        if label is Label.INDIFFERENT:
            return b1 == b2
        if label is Label.STRICT:
            return (b1, b2) in self.strict
        return (b1, b2) in self.incomparable

    def triple_count(self) -> int:
        sizes = [len(b) for b in self.blocks]
        total = sum(n * n for n in sizes)
        total += sum(sizes[i - 1] * sizes[j - 1] for i, j in self.strict)
        total += sum(sizes[i - 1] * sizes[j - 1] for i, j in self.incomparable)
        return total

    def triples(self) -> Iterator[Triple]:
        """Materialize every triple of S° (quadratic; intended for small samples)."""
        for block in self.blocks:
            for w1 in block:
                for w2 in block:
                    yield (w1, w2, Label.INDIFFERENT)
        for i, j in self.strict:
            for w1 in self.blocks[i - 1]:
                for w2 in self.blocks[j - 1]:
                    yield (w1, w2, Label.STRICT)
        for i, j in self.incomparable:
            for w1 in self.blocks[i - 1]:
                for w2 in self.blocks[j - 1]:
                    yield (w1, w2, Label.INCOMPARABLE)

    def to_sample(self) -> PreferenceSample:
        return PreferenceSample(self.alphabet, self.triples())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClosedSample)
            and self.blocks == other.blocks
            and self.strict == other.strict
            and self.incomparable == other.incomparable
        )

    def __repr__(self) -> str:
        return (
            f"ClosedSample({len(self.blocks)} blocks, {len(self.strict)} strict, "
            f"{len(self.incomparable) // 2} incomparable pairs)"
        )


def close_sample(sample: PreferenceSample) -> ClosedSample:
    """Compute S°, raising :class:`ClosureConflictError` when the closure
    would assert two different relations for one pair (the sample then
    fits no preorder).  A strict cycle raises :class:`OrderCycleError`."""
    key = sample.alphabet.shortlex_key
    words = tuple(sorted({w for t in sample.triples for w in (t[0], t[1])}, key=key))
    index = {w: i for i, w in enumerate(words)}

    # Indifference classes via union-find; the root is the smallest member,
    # so block numbering by root order is shortlex-of-minimal-word.
    parent = list(range(len(words)))

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for w1, w2, label in sample.triples:
        if label is Label.INDIFFERENT:
            a, b = find(index[w1]), find(index[w2])
            if a != b:
                parent[max(a, b)] = min(a, b)

    roots = sorted({find(i) for i in range(len(words))})
    block_id = {root: idx for idx, root in enumerate(roots, start=1)}
    members: Dict[int, List[Word]] = {block_id[r]: [] for r in roots}
    for i, word in enumerate(words):
        members[block_id[find(i)]].append(word)
    blocks = [tuple(members[idx]) for idx in sorted(members)]

    def block(word: Word) -> int:
        return block_id[find(index[word])]

    strict_raw = set()
    for w1, w2, label in sample.triples:
        if label is Label.STRICT:
            b1, b2 = block(w1), block(w2)
            if b1 == b2:
                raise ClosureConflictError(
                    f"closure derives both ({format_word(w1)} > {format_word(w2)}) "
                    f"and ({format_word(w1)} = {format_word(w2)})",
                    kind="strict-vs-indifferent",
                    pair=(w1, w2),
                )
            strict_raw.add((b1, b2))

    strict = _close_transitively(strict_raw)
    for i, j in strict:
        if i != j and (j, i) in strict:
            wi, wj = blocks[i - 1][0], blocks[j - 1][0]
            raise OrderCycleError(
                f"strict preference cycle between {format_word(wi)} and {format_word(wj)}",
                pair=(wi, wj),
            )

    incomparable = set()
    for w1, w2, label in sample.triples:
        if label is Label.INCOMPARABLE:
            b1, b2 = block(w1), block(w2)
            if b1 == b2:
                raise ClosureConflictError(
                    f"closure derives both ({format_word(w1)} # {format_word(w2)}) "
                    f"and ({format_word(w1)} = {format_word(w2)})",
                    kind="incomparable-vs-indifferent",
                    pair=(w1, w2),
                )
            incomparable.add((b1, b2))
            incomparable.add((b2, b1))

    overlap = strict & incomparable
    if overlap:
        i, j = sorted(overlap)[0]
        wi, wj = blocks[i - 1][0], blocks[j - 1][0]
        raise ClosureConflictError(
            f"closure derives both ({format_word(wi)} > {format_word(wj)}) "
            f"and ({format_word(wi)} # {format_word(wj)})",
            kind="strict-vs-incomparable",
            pair=(wi, wj),
        )

    return ClosedSample(sample, blocks, frozenset(strict), frozenset(incomparable))


def _close_transitively(pairs):
    succ: Dict[int, set] = {}
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


# -- rank partition -------------------------------------------------------------


@dataclass(frozen=True)
class RankPartition:
    """Indifference blocks of a sample plus the induced order over block indices."""

    blocks: Tuple[FrozenSet[Word], ...]
    indices: Tuple[int, ...]
    relation: FrozenSet[Tuple[int, int]]
    order: PartialOrder
    _block_of: Dict[Word, int] = field(repr=False, compare=False, default_factory=dict)

    def block_of(self, word: Word) -> int:
        return self._block_of[tuple(word)]

    def maybe_block_of(self, word: Word) -> Optional[int]:
        return self._block_of.get(tuple(word))

    def block_words(self, idx: int) -> FrozenSet[Word]:
        return self.blocks[idx - 1]


def rank_partition(sample: PreferenceSample | ClosedSample) -> RankPartition:
    """Derive the rank partition: indifference blocks as ranks, with one
    block strictly above another when the closure relates their words."""
    closed = sample if isinstance(sample, ClosedSample) else close_sample(sample)
    blocks = tuple(frozenset(b) for b in closed.blocks)
    indices = closed.indices
    # Antisymmetry holds because close_sample rejected strict cycles.
    order = PartialOrder(indices, closed.strict)
    block_of = dict(closed.block_of)
    return RankPartition(blocks, indices, closed.strict, order, block_of)


# -- text format -----------------------------------------------------------------
#
#   alphabet: a b
#   aa = bb          (indifferent)
#   ba > a           (first strictly preferred)
#   aa # ba          (incomparable)
#
# Words are "."-joined symbol tokens; the empty word is spelled "eps".

_REL_LABEL = {label.token: label for label in Label}


def loads_sample(text: str) -> PreferenceSample:
    sample, _ = loads_sample_with_lines(text)
    return sample


def loads_sample_with_lines(text: str) -> Tuple[PreferenceSample, Dict[Triple, int]]:
    """Parse a sample document; also return each triple's first line number."""
    alphabet = None
    triples: List[Triple] = []
    lines: Dict[Triple, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        # '#' doubles as the incomparability relation, so only whole-line
        # comments are supported in sample files.
        if not line or line.startswith("#"):
            continue
        if line.startswith("alphabet:"):
            if alphabet is not None:
                raise FormatError("duplicate alphabet declaration", line=lineno)
            alphabet = Alphabet(line[len("alphabet:") :].split())
            continue
        if alphabet is None:
            raise FormatError("sample must start with an 'alphabet:' line", line=lineno)
        fields = line.split()
        if len(fields) != 3 or fields[1] not in _REL_LABEL:
            raise FormatError(
                f"expected 'WORD {{>|=|#}} WORD', got {line!r}", line=lineno
            )
        w1 = parse_word(fields[0])
        w2 = parse_word(fields[2])
        triple = (w1, w2, _REL_LABEL[fields[1]])
        triples.append(triple)
        lines.setdefault(triple, lineno)
    if alphabet is None:
        raise FormatError("missing 'alphabet:' line")
    return PreferenceSample(alphabet, triples), lines


def dumps_sample(sample: PreferenceSample, header: str = "") -> str:
    lines = []
    if header:
        lines.extend(f"# {text}" for text in header.splitlines())
    lines.append("alphabet: " + " ".join(sample.alphabet.symbols))
    for w1, w2, label in sample.sorted_triples():
        lines.append(f"{format_word(w1)} {label.token} {format_word(w2)}")
    return "\n".join(lines) + "\n"


def load_sample(path) -> PreferenceSample:
    with open(path, "r", encoding="utf-8") as handle:
        return loads_sample(handle.read())


def dump_sample(sample: PreferenceSample, path, header: str = "") -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dumps_sample(sample, header=header))
