"""State-merging learner over the prefix tree.

The learner walks the prefix-tree states in shortlex order.  For each
state that still names its block it tries to merge the block into every
earlier-named block whose rank is compatible, keeping the first merge
whose recursive determinization goes through.  Determinization merges the
successor blocks of any nondeterministic (block, symbol) pair, failing
when two distinct defined ranks would collide; witnesses are resolved in
canonical order (smallest block name, then smallest symbol, then the two
smallest successor names) so a given sample always produces the identical
trace and automaton.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

from .automata import PDFA, PNFA, word_state_name
from .errors import BlockError, RankingInconsistentError
from .prefix_tree import PrefixTree
from .words import Alphabet, Word, format_word


class Partition:
    """Partition of prefix-tree states into blocks of words.

    Blocks are kept in ascending order of their name (the shortlex-minimal
    member).  Partitions themselves are not required to be
    ranking-consistent; quotient and determinization check that.
    """

    def __init__(self, alphabet: Alphabet, blocks: Iterable[Iterable[Word]]):
        self.alphabet = alphabet
        normalized = []
        seen: Set[Word] = set()
        for block in blocks:
            block = frozenset(tuple(w) for w in block)
            if not block:
                raise BlockError("empty block")
            if block & seen:
                raise BlockError("blocks are not disjoint")
            seen |= block
            normalized.append(block)
        normalized.sort(key=lambda b: min(self.alphabet.shortlex_key(w) for w in b))
        self.blocks: Tuple[FrozenSet[Word], ...] = tuple(normalized)
        self._block_of: Dict[Word, FrozenSet[Word]] = {
            w: b for b in self.blocks for w in b
        }

    @classmethod
    def singletons(cls, tree: PrefixTree) -> "Partition":
        return cls(tree.alphabet, ([w] for w in tree.words))

    def name(self, block: FrozenSet[Word]) -> Word:
        """The block-name: shortlex-minimal member word."""
        if block not in set(self.blocks):
            raise BlockError("block not in partition")
        return min(block, key=self.alphabet.shortlex_key)

    def names(self) -> Tuple[Word, ...]:
        return tuple(min(b, key=self.alphabet.shortlex_key) for b in self.blocks)

    def block_containing(self, word: Word) -> FrozenSet[Word]:
        try:
            return self._block_of[tuple(word)]
        except KeyError:
            raise BlockError(f"no block contains {format_word(word)}") from None

    def __len__(self) -> int:
        return len(self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and set(self.blocks) == set(other.blocks)

    def __repr__(self) -> str:
        shown = ", ".join(
            "{" + ",".join(sorted(map(format_word, b))) + "}" for b in self.blocks
        )
        return f"Partition({shown})"


def join(partition: Partition, block1: FrozenSet[Word], block2: FrozenSet[Word]) -> Partition:
    """Replace two blocks by their union.  No rank check happens here."""
    block1 = frozenset(tuple(w) for w in block1)
    block2 = frozenset(tuple(w) for w in block2)
    current = set(partition.blocks)
    if block1 not in current or block2 not in current:
        raise BlockError("block not in partition")
    if block1 == block2:
        raise BlockError("cannot join a block with itself")
    rest = [b for b in partition.blocks if b != block1 and b != block2]
    rest.append(block1 | block2)
    return Partition(partition.alphabet, rest)


# -- block-level quotient graph ------------------------------------------------


class _Quotient:
    """Union-find over tree states with block-level successors and ranks.

    The root of every class is its smallest state index; since tree states
    are indexed in shortlex order, root order coincides with block-name
    order.  Successor targets are stored unresolved and are mapped through
    ``find`` when inspected, so merges elsewhere never require rewriting
    other blocks.
    """

    def __init__(self, tree: PrefixTree):
        self.tree = tree
        self.parent = list(range(len(tree)))
        self.roots: Set[int] = set(range(len(tree)))
        self.succ: Dict[int, Dict[str, Set[int]]] = {
            i: {sym: {dst} for sym, dst in kids.items()}
            for i, kids in enumerate(tree.children)
        }
        self.rank: Dict[int, Optional[int]] = {
            i: rank for i, rank in enumerate(tree.ranks)
        }

    @classmethod
    def from_partition(cls, tree: PrefixTree, partition: Partition) -> "_Quotient":
        graph = cls(tree)
        covered = set()
        for block in partition.blocks:
            indices = []
            for word in block:
                if word not in tree.index:
                    raise BlockError(f"{format_word(word)} is not a prefix-tree state")
                indices.append(tree.index[word])
            covered.update(indices)
            ranks = {tree.ranks[i] for i in indices if tree.ranks[i] is not None}
            if len(ranks) > 1:
                raise RankingInconsistentError(
                    f"block {{{','.join(sorted(map(format_word, block)))}}} holds "
                    f"distinct ranks {sorted(ranks)}"
                )
            root = min(indices)
            for i in indices:
                if i != root and graph._union(root, i) is None:
                    raise AssertionError("rank conflict after consistency check")
        if covered != set(range(len(tree))):
            raise BlockError("partition does not cover the prefix-tree states")
        return graph

    def clone(self) -> "_Quotient":
        other = object.__new__(_Quotient)
        other.tree = self.tree
        other.parent = list(self.parent)
        other.roots = set(self.roots)
        other.succ = {
            r: {sym: set(ts) for sym, ts in kids.items()}
            for r, kids in self.succ.items()
        }
        other.rank = dict(self.rank)
        return other

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def _union(self, a: int, b: int) -> Optional[int]:
        """Merge roots *a* < *b*; None when their defined ranks differ."""
        ra, rb = self.rank[a], self.rank[b]
        if ra is not None and rb is not None and ra != rb:
            return None
        self.parent[b] = a
        self.roots.discard(b)
        if ra is None:
            self.rank[a] = rb
        del self.rank[b]
        into = self.succ[a]
        for sym, targets in self.succ.pop(b).items():
            into.setdefault(sym, set()).update(targets)
        return a

    def determinize(self, dirty: Iterable[int]) -> Optional[List[Tuple[int, int]]]:
        """Resolve nondeterminism by merging successor blocks.

        Returns the merge pairs in resolution order, or None when a merge
        would join two blocks with distinct defined ranks.
        """
        heap = [self.find(b) for b in dirty]
        heapq.heapify(heap)
        merges: List[Tuple[int, int]] = []
        symbols = self.tree.alphabet.symbols
        while heap:
            b = heapq.heappop(heap)
            if self.find(b) != b:
                continue
            kids = self.succ[b]
            merged_here = False
            for sym in symbols:
                targets = kids.get(sym)
                if not targets:
                    continue
                resolved = {self.find(t) for t in targets}
                if len(resolved) == 1:
                    continue
                t1, t2 = sorted(resolved)[:2]
                if self._union(t1, t2) is None:
                    return None
                merges.append((t1, t2))
                heapq.heappush(heap, t1)
                heapq.heappush(heap, self.find(b))
                merged_here = True
                break
            if merged_here:
                continue
        return merges

    def to_partition(self) -> Partition:
        members: Dict[int, List[Word]] = {r: [] for r in self.roots}
        for i, word in enumerate(self.tree.words):
            members[self.find(i)].append(word)
        return Partition(self.tree.alphabet, members.values())

    def block_rank(self, state: int) -> Optional[int]:
        return self.rank[self.find(state)]


# -- public quotient / determinize / deterministic join -------------------------


def quotient(tree: PrefixTree, partition: Partition) -> PNFA:
    """Quotient automaton over the partition blocks (may be nondeterministic)."""
    graph = _Quotient.from_partition(tree, partition)
    roots = sorted(graph.roots)
    names = {r: word_state_name(tree.words[r]) for r in roots}
    transitions: Dict[Tuple[str, str], FrozenSet[str]] = {}
    for r in roots:
        for sym, targets in graph.succ[r].items():
            resolved = frozenset(names[graph.find(t)] for t in targets)
            if resolved:
                transitions[(names[r], sym)] = resolved
    ranking = {names[r]: graph.rank[r] for r in roots if graph.rank[r] is not None}
    return PNFA(
        tree.alphabet,
        [names[r] for r in roots],
        names[graph.find(0)],
        transitions,
        tree.order,
        ranking,
    )


def determinize(tree: PrefixTree, partition: Partition) -> Optional[Partition]:
    """Recursively merge nondeterministic successors; None if ranks collide."""
    graph = _Quotient.from_partition(tree, partition)
    if graph.determinize(sorted(graph.roots)) is None:
        return None
    return graph.to_partition()


def deterministic_join(
    tree: PrefixTree,
    partition: Partition,
    block1: FrozenSet[Word],
    block2: FrozenSet[Word],
) -> Optional[Partition]:
    """Join two blocks and determinize; None when any rank conflict arises."""
    ranks = set()
    for block in (block1, block2):
        for word in block:
            rank = tree.ranks[tree.index[tuple(word)]]
            if rank is not None:
                ranks.add(rank)
    if len(ranks) > 1:
        return None
    return determinize(tree, join(partition, block1, block2))


# -- the learner ----------------------------------------------------------------


@dataclass(frozen=True)
class IterationTrace:
    """One learner iteration: which merges were tried and what was kept."""

    index: int
    word: Word
    tried: Tuple[Word, ...]
    accepted: Optional[Word]
    cascade: Tuple[Tuple[Word, Word], ...]

    def render(self) -> str:
        tried = ",".join(format_word(w) for w in self.tried)
        accepted = format_word(self.accepted) if self.accepted is not None else "none"
        return f"i={self.index} u_i={format_word(self.word)} tried=[{tried}] accepted={accepted}"


@dataclass(frozen=True)
class LearnResult:
    partition: Partition
    automaton: PDFA
    trace: Tuple[IterationTrace, ...]
    warnings: Tuple[str, ...]


def learn_pdfa(tree: PrefixTree) -> LearnResult:
    """Run the merge loop over the prefix tree and return the quotient.

    The result automaton is deterministic; its ranking and transitions may
    be partial when the sample was not informative enough, in which case
    ``warnings`` names the unranked states and missing transitions.
    """
    committed = _Quotient(tree)
    trace: List[IterationTrace] = []
    for i in range(1, len(tree)):
        word = tree.words[i]
        if committed.find(i) != i:
            trace.append(IterationTrace(i, word, (), None, ()))
            continue
        rank_i = committed.rank[i]
        tried: List[Word] = []
        accepted: Optional[Word] = None
        cascade: Tuple[Tuple[Word, Word], ...] = ()
        for candidate in sorted(r for r in committed.roots if r < i):
            rank_c = committed.rank[candidate]
            if rank_c is not None and rank_i is not None and rank_c != rank_i:
                continue
            tried.append(tree.words[candidate])
            trial = committed.clone()
            if trial._union(candidate, i) is None:
                continue
            merges = trial.determinize([candidate])
            if merges is None:
                continue
            committed = trial
            accepted = tree.words[candidate]
            cascade = tuple(
                (tree.words[a], tree.words[b]) for a, b in merges
            )
            break
        trace.append(IterationTrace(i, word, tuple(tried), accepted, cascade))

    partition = committed.to_partition()
    automaton = _automaton_from(tree, committed)
    warnings = []
    for state in automaton.unranked_states():
        warnings.append(f"state {state} has no rank (sample leaves it unconstrained)")
    for state, sym in automaton.missing_transitions():
        warnings.append(f"no transition from {state} on {sym} (not exercised by the sample)")
    return LearnResult(partition, automaton, tuple(trace), tuple(warnings))


def _automaton_from(tree: PrefixTree, graph: _Quotient) -> PDFA:
    roots = sorted(graph.roots)
    names = {r: word_state_name(tree.words[r]) for r in roots}
    transitions: Dict[Tuple[str, str], str] = {}
    for r in roots:
        for sym, targets in graph.succ[r].items():
            resolved = {graph.find(t) for t in targets}
            if not resolved:
                continue
            if len(resolved) != 1:
                raise AssertionError("committed quotient is nondeterministic")
            transitions[(names[r], sym)] = names[resolved.pop()]
    ranking = {names[r]: graph.rank[r] for r in roots if graph.rank[r] is not None}
    return PDFA(
        tree.alphabet,
        [names[r] for r in roots],
        names[graph.find(0)],
        transitions,
        tree.order,
        ranking,
    )


def render_trace(result: LearnResult) -> str:
    return "\n".join(entry.render() for entry in result.trace)
