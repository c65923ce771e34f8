"""Block-based extension of a poset without two long incomparable chains.

Starting from a Dilworth chain partition, a window of 2k-3 consecutive
elements slides up each chain.  At every step one chain owns a "good"
element (below everything still above the windows); removing it and
admitting the next element of that chain keeps the window family a valid
block.  The membership spans of the elements across the block sequence
form closed integer intervals whose interval order the input extends,
and the blocks double as a path decomposition of the incomparability
graph.  When no good element exists the certifying digraph contains a
cycle, and replaying the certification along that cycle produces two
disjoint incomparable k-chains instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import InternalError, InvalidBlock, NoUpSet
from .order import (
    Chain,
    ChainPartition,
    Graph,
    KkWitness,
    Poset,
    dilworth_partition,
    interval_order_from_intervals,
)

__all__ = [
    "Block",
    "CertEntry",
    "GoodElementCertificate",
    "GoodElement",
    "BlockMove",
    "BlockSequence",
    "IntervalRepresentation",
    "IntervalExtension",
    "PathDecomposition",
    "initial_block",
    "up_set",
    "find_good_element",
    "block_sequence",
    "interval_order_of",
    "path_decomposition_of",
    "validate_path_decomposition",
]


@dataclass(frozen=True)
class Block:
    """One contiguous run of positions per chain, plus the induced element set."""

    segments: tuple[tuple[int, int], ...]  # per chain: [lo, hi) positions
    elements: frozenset[int]

    @classmethod
    def over(cls, cp: ChainPartition, segments: tuple[tuple[int, int], ...]) -> "Block":
        elems = []
        for (lo, hi), chain in zip(segments, cp.chains):
            elems.extend(chain.elements[lo:hi])
        return cls(tuple(segments), frozenset(elems))

    def size(self) -> int:
        return len(self.elements)


def _check_block(cp: ChainPartition, block: Block) -> None:
    """Structural validity: one non-empty in-range segment per chain."""
    if len(block.segments) != len(cp.chains):
        raise InvalidBlock("segment count differs from chain count")
    elems = []
    for (lo, hi), chain in zip(block.segments, cp.chains):
        if not (0 <= lo < hi <= len(chain.elements)):
            raise InvalidBlock(f"segment [{lo},{hi}) invalid for chain of size {len(chain.elements)}")
        elems.extend(chain.elements[lo:hi])
    if frozenset(elems) != block.elements:
        raise InvalidBlock("element set inconsistent with segments")


def initial_block(cp: ChainPartition, k: int) -> Block:
    """The min(2k-3, chain length) smallest elements of every chain."""
    if k < 2:
        raise ValueError("k must be at least 2")
    width = 2 * k - 3
    return Block.over(cp, tuple((0, min(len(c.elements), width)) for c in cp.chains))


def up_set(p: Poset, cp: ChainPartition, block: Block) -> frozenset[int]:
    """Elements outside the block sitting above their chain's whole segment.

    Chains are sorted increasing, so per chain this is exactly the suffix
    beyond the segment's upper end.
    """
    _check_block(cp, block)
    ups = []
    for (lo, hi), chain in zip(block.segments, cp.chains):
        ups.extend(chain.elements[hi:])
    return frozenset(ups)


@dataclass(frozen=True)
class CertEntry:
    """Per-chain data certifying the good-element argument.

    ``lower`` is the k smallest elements of segment + {d} (so a <= b < c <= d,
    with a == b and c == d exactly when k == 2), ``upper`` the k-element
    chain used for the cross-chain comparability probes.
    """

    a: int
    b: int
    c: int
    d: int
    lower: tuple[int, ...]
    upper: tuple[int, ...]


@dataclass(frozen=True)
class GoodElementCertificate:
    """Digraph certificate: entries per participating chain, arcs, chosen sink."""

    entries: Mapping[int, CertEntry]
    arcs: frozenset[tuple[int, int]]
    sink: int


@dataclass(frozen=True)
class GoodElement:
    """A block element below every member of the up-set, with its certificate."""

    chain: int
    element: int
    certificate: GoodElementCertificate


def _entries_for(p: Poset, cp: ChainPartition, block: Block, k: int) -> dict[int, CertEntry]:
    window = 2 * k - 3
    entries: dict[int, CertEntry] = {}
    for i, ((lo, hi), chain) in enumerate(zip(block.segments, cp.chains)):
        if hi >= len(chain.elements):
            continue  # chain contributes nothing above its segment
        if hi - lo != window:
            raise InvalidBlock(
                f"chain {i} segment holds {hi - lo} elements; the certificate needs {window}"
            )
        seg = chain.elements[lo:hi]
        d = chain.elements[hi]
        lower = (seg + (d,))[:k]  # k smallest of segment + {d}
        a, c = lower[0], lower[-1]
        b = lower[-2]
        upper = seg[k - 2 :] + (d,)
        assert len(upper) == k
        assert a == b or p.less(a, b)
        assert p.less(b, c)
        assert c == d or p.less(c, d)
        entries[i] = CertEntry(a=a, b=b, c=c, d=d, lower=lower, upper=upper)
    return entries


def _least_cycle(vertices: list[int], arcs: set[tuple[int, int]]) -> list[int]:
    """Deterministic cycle in a sinkless digraph: walk min out-neighbors."""
    out: dict[int, list[int]] = {i: [] for i in vertices}
    for i, j in sorted(arcs):
        out[i].append(j)
    cur = min(vertices)
    pos = {cur: 0}
    path = [cur]
    while True:
        cur = out[cur][0]
        if cur in pos:
            cycle = path[pos[cur] :]
            break
        pos[cur] = len(path)
        path.append(cur)
    m = cycle.index(min(cycle))
    return cycle[m:] + cycle[:m]


def _witness_from_cycle(
    p: Poset, entries: dict[int, CertEntry], cycle: list[int]
) -> KkWitness:
    """Replay the acyclicity argument along a cycle until it snaps.

    Walking the cycle maintains a k-chain tied to the first vertex; at
    each hop it must meet a comparable element of the next vertex's upper
    chain, and the arc directions force that comparability downward.  On
    an input that genuinely contains two incomparable k-chains some hop
    finds no comparable pair, and that pair of chains is the witness.
    On a valid k+k-free run every hop succeeds, which contradicts the
    closing arc; reaching the end therefore signals a bug.
    """
    first = cycle[0]
    left = entries[first].lower
    for idx in range(1, len(cycle)):
        i = cycle[idx]
        right = entries[i].upper
        found = None
        for u in left:
            for v in right:
                if p.comparable(u, v):
                    found = (u, v)
                    break
            if found:
                break
        if found is None:
            witness = KkWitness(Chain(left), Chain(right))
            if not witness.is_valid(p):
                raise InternalError("replay produced an invalid witness")
            return witness
        u, v = found
        if p.less(u, v):
            raise InternalError("comparable pair points upward across an arc")
        # u > v pins c_first above this vertex's b; swap it into the chain
        left = entries[i].lower[:-1] + (entries[first].c,)
    raise InternalError("cycle replay exhausted without contradiction or witness")


def find_good_element(
    p: Poset, cp: ChainPartition, block: Block, k: int
) -> GoodElement | KkWitness:
    """Locate a chain whose segment minimum lies below the whole up-set.

    Builds the certifying digraph over chains with a non-empty up-set
    (arc i -> j when a_i is not below d_j), takes its smallest sink, and
    verifies goodness directly against every up-set member.  Without a
    sink, the cycle replay yields a genuine two-chain witness instead.
    """
    ups = up_set(p, cp, block)
    if not ups:
        raise NoUpSet("block has an empty up-set; nothing to admit")
    entries = _entries_for(p, cp, block, k)
    verts = sorted(entries)
    arcs = {
        (i, j)
        for i in verts
        for j in verts
        if i != j and not p.less(entries[i].a, entries[j].d)
    }
    has_out = {i for i, _ in arcs}
    sinks = [i for i in verts if i not in has_out]
    if not sinks:
        return _witness_from_cycle(p, entries, _least_cycle(verts, arcs))
    sink = sinks[0]
    good = entries[sink].a
    for y in ups:
        if not p.less(good, y):
            raise InternalError(f"sink element {good} is not below up-set member {y}")
    cert = GoodElementCertificate(entries=entries, arcs=frozenset(arcs), sink=sink)
    return GoodElement(chain=sink, element=good, certificate=cert)


@dataclass(frozen=True)
class BlockMove:
    removed: int
    added: int
    chain: int


@dataclass(frozen=True)
class BlockSequence:
    """The full slide: every block, every move, over one chain partition."""

    partition: ChainPartition
    blocks: tuple[Block, ...]
    moves: tuple[BlockMove, ...]

    def __len__(self) -> int:
        return len(self.blocks)

    def max_block_size(self) -> int:
        return max((b.size() for b in self.blocks), default=0)


@dataclass(frozen=True)
class IntervalRepresentation:
    """Per element, the closed 1-based range of block indices containing it."""

    intervals: tuple[tuple[int, int], ...]

    def __len__(self) -> int:
        return len(self.intervals)


@dataclass(frozen=True)
class IntervalExtension:
    """An interval order the input extends, with its representation and blocks."""

    order: Poset
    representation: IntervalRepresentation
    sequence: BlockSequence


@dataclass(frozen=True)
class PathDecomposition:
    """An ordered bag sequence; width is max bag size minus one."""

    bags: tuple[tuple[int, ...], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def __len__(self) -> int:
        return len(self.bags)


def block_sequence(p: Poset, k: int) -> BlockSequence | KkWitness:
    """Slide windows up the Dilworth chains until nothing remains above them.

    Each step removes the certified good element and admits the smallest
    element above the same chain's segment, so per-chain segment sizes
    never change.  Propagates a two-chain witness when certification
    fails.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    cp = dilworth_partition(p)
    segments = list(initial_block(cp, k).segments)
    blocks = [Block.over(cp, tuple(segments))]
    moves: list[BlockMove] = []
    while True:
        current = blocks[-1]
        if not up_set(p, cp, current):
            break
        got = find_good_element(p, cp, current, k)
        if isinstance(got, KkWitness):
            return got
        i = got.chain
        lo, hi = segments[i]
        chain = cp.chains[i]
        assert got.element == chain.elements[lo]
        admitted = chain.elements[hi]
        segments[i] = (lo + 1, hi + 1)
        moves.append(BlockMove(removed=got.element, added=admitted, chain=i))
        blocks.append(Block.over(cp, tuple(segments)))
    return BlockSequence(partition=cp, blocks=tuple(blocks), moves=tuple(moves))


def interval_order_of(p: Poset, k: int) -> IntervalExtension | KkWitness:
    """The interval order of block membership spans, which the input extends."""
    seq = block_sequence(p, k)
    if isinstance(seq, KkWitness):
        return seq
    first: dict[int, int] = {}
    last: dict[int, int] = {}
    count = [0] * p.n
    for t, blk in enumerate(seq.blocks, start=1):
        for e in blk.elements:
            first.setdefault(e, t)
            last[e] = t
            count[e] += 1
    if len(first) != p.n:
        raise InternalError("an element never entered any block")
    intervals = tuple((first[e], last[e]) for e in range(p.n))
    for e, (lo, hi) in enumerate(intervals):
        if count[e] != hi - lo + 1:
            raise InternalError(f"element {e} appears in non-consecutive blocks")
    rep = IntervalRepresentation(intervals)
    q = interval_order_from_intervals(intervals, names=p.names)
    return IntervalExtension(order=q, representation=rep, sequence=seq)


def path_decomposition_of(p: Poset, k: int) -> PathDecomposition | KkWitness:
    """The block sequence read as bags over the incomparability graph."""
    seq = block_sequence(p, k)
    if isinstance(seq, KkWitness):
        return seq
    return decomposition_from_blocks(seq)


def decomposition_from_blocks(seq: BlockSequence) -> PathDecomposition:
    return PathDecomposition(tuple(tuple(sorted(b.elements)) for b in seq.blocks))


def validate_path_decomposition(g: Graph, pd: PathDecomposition) -> bool:
    """Consecutive occurrence of every vertex and coverage of every edge."""
    occurrences: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for t, bag in enumerate(pd.bags):
        for v in bag:
            if not 0 <= v < g.n:
                return False
            occurrences[v].append(t)
    for v, occ in occurrences.items():
        if not occ:
            return False
        if occ[-1] - occ[0] + 1 != len(set(occ)):
            return False
    bag_sets = [set(b) for b in pd.bags]
    for u, v in g.edges:
        if not any(u in b and v in b for b in bag_sets):
            return False
    return True
