"""Posets as dense bit relations, plus the order machinery everything else rides on.

Elements are dense integer ids 0..n-1.  The strict order is stored fully
transitively closed, one successor bitmask per element, so a comparability
test is a single shift-and-test and the heavy algorithms downstream
(Dilworth matching, two-chain pattern search, incomparability graphs)
reduce to integer set algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    BudgetExhausted,
    CycleError,
    IdOutOfRange,
    MalformedInterval,
    SizeMismatch,
)

__all__ = [
    "Poset",
    "Chain",
    "Antichain",
    "ChainPartition",
    "KkWitness",
    "Graph",
    "iter_bits",
    "build_poset",
    "width_with_witness",
    "dilworth_partition",
    "incomparability_graph",
    "find_k_plus_k",
    "is_extension",
    "interval_order_from_intervals",
    "is_interval_order",
    "chain_poset",
    "antichain_poset",
    "empty_graph",
    "complete_graph",
    "path_graph",
    "cycle_graph",
    "complete_bipartite_graph",
    "complete_multipartite_graph",
]


def iter_bits(mask: int) -> Iterator[int]:
    """Positions of set bits, lowest first."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Poset:
    """A finite strict partial order, immutable after construction.

    ``succ_mask(u)`` has bit v set iff u < v; ``pred_mask`` is the mirror.
    The constructor checks the three order axioms (irreflexive,
    antisymmetric, transitive) on the masks it is given, so every live
    instance is a genuine closed order.
    """

    __slots__ = ("n", "names", "_succ", "_pred", "_inc")

    def __init__(self, n: int, succ: Sequence[int], names: Sequence[str] | None = None):
        if len(succ) != n:
            raise SizeMismatch(f"expected {n} masks, got {len(succ)}")
        self.n = n
        self._succ = tuple(succ)
        pred = [0] * n
        for u in range(n):
            for v in iter_bits(self._succ[u]):
                pred[v] |= 1 << u
        self._pred = tuple(pred)
        self._inc: tuple[int, ...] | None = None
        self.names = tuple(names) if names is not None else None
        if self.names is not None and len(self.names) != n:
            raise SizeMismatch("names must match element count")
        self._check_axioms()

    def _check_axioms(self) -> None:
        full = (1 << self.n) - 1
        for u in range(self.n):
            m = self._succ[u]
            if m & ~full:
                raise IdOutOfRange(f"mask of {u} mentions ids >= {self.n}")
            if (m >> u) & 1:
                raise CycleError(f"element {u} below itself")
            if m & self._pred[u]:
                v = next(iter_bits(m & self._pred[u]))
                raise CycleError(f"both {u} < {v} and {v} < {u}")
            reach = 0
            for v in iter_bits(m):
                reach |= self._succ[v]
            if reach & ~m:
                raise CycleError(f"relation below {u} is not transitively closed")

    # -- elementary queries -------------------------------------------------

    def less(self, u: int, v: int) -> bool:
        return (self._succ[u] >> v) & 1 == 1

    def comparable(self, u: int, v: int) -> bool:
        return u != v and (self.less(u, v) or self.less(v, u))

    def incomparable(self, u: int, v: int) -> bool:
        return u != v and not self.less(u, v) and not self.less(v, u)

    def succ_mask(self, u: int) -> int:
        return self._succ[u]

    def pred_mask(self, u: int) -> int:
        return self._pred[u]

    def comp_mask(self, u: int) -> int:
        return self._succ[u] | self._pred[u]

    def inc_mask(self, u: int) -> int:
        if self._inc is None:
            full = (1 << self.n) - 1
            self._inc = tuple(
                full & ~(self._succ[v] | self._pred[v] | (1 << v)) for v in range(self.n)
            )
        return self._inc[u]

    def relation_pairs(self) -> Iterator[tuple[int, int]]:
        """All ordered pairs (u, v) with u < v, in lexicographic order."""
        for u in range(self.n):
            for v in iter_bits(self._succ[u]):
                yield (u, v)

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Transitive reduction: pairs u < v with nothing strictly between."""
        out = []
        for u in range(self.n):
            m = self._succ[u]
            via = 0
            for v in iter_bits(m):
                via |= self._succ[v]
            out.extend((u, v) for v in iter_bits(m & ~via))
        return out

    def sort_chain(self, elems: Iterable[int]) -> tuple[int, ...]:
        """Sort a set of pairwise comparable elements into increasing order."""
        elems = list(elems)
        mask = 0
        for e in elems:
            mask |= 1 << e
        return tuple(sorted(elems, key=lambda e: (self._pred[e] & mask).bit_count()))

    def name_of(self, u: int) -> str:
        return self.names[u] if self.names is not None else str(u)

    def __eq__(self, other: object) -> bool:
        # names are reporting sugar, not identity
        if not isinstance(other, Poset):
            return NotImplemented
        return self.n == other.n and self._succ == other._succ

    def __hash__(self) -> int:
        return hash((self.n, self._succ))

    def __repr__(self) -> str:
        pairs = sum(m.bit_count() for m in self._succ)
        return f"Poset(n={self.n}, pairs={pairs})"


@dataclass(frozen=True)
class Chain:
    """Pairwise comparable elements, listed in increasing order."""

    elements: tuple[int, ...]

    def is_valid(self, p: Poset) -> bool:
        e = self.elements
        return all(p.less(e[i], e[i + 1]) for i in range(len(e) - 1))

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class Antichain:
    """Pairwise incomparable elements."""

    elements: tuple[int, ...]

    def is_valid(self, p: Poset) -> bool:
        e = self.elements
        return all(p.incomparable(e[i], e[j]) for i in range(len(e)) for j in range(i + 1, len(e)))

    def __len__(self) -> int:
        return len(self.elements)


@dataclass(frozen=True)
class ChainPartition:
    """Disjoint non-empty chains covering every element."""

    chains: tuple[Chain, ...]

    def is_valid(self, p: Poset) -> bool:
        seen: set[int] = set()
        for c in self.chains:
            if not c.elements or not c.is_valid(p):
                return False
            for e in c.elements:
                if e in seen or not 0 <= e < p.n:
                    return False
                seen.add(e)
        return len(seen) == p.n

    def chain_of(self) -> dict[int, int]:
        """Element -> 0-based chain index."""
        return {e: i for i, c in enumerate(self.chains) for e in c.elements}

    def __len__(self) -> int:
        return len(self.chains)


@dataclass(frozen=True)
class KkWitness:
    """Two disjoint k-chains with every cross pair incomparable."""

    a: Chain
    b: Chain

    @property
    def k(self) -> int:
        return len(self.a)

    def is_valid(self, p: Poset) -> bool:
        if len(self.a) != len(self.b) or not self.a.elements:
            return False
        if set(self.a.elements) & set(self.b.elements):
            return False
        if not (self.a.is_valid(p) and self.b.is_valid(p)):
            return False
        return all(p.incomparable(u, v) for u in self.a.elements for v in self.b.elements)


class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitmask adjacency."""

    __slots__ = ("n", "edges", "_nbr")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        self.n = n
        norm = set()
        nbr = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IdOutOfRange(f"edge ({u},{v}) outside [0,{n})")
            if u == v:
                raise ValueError(f"loop at {u}")
            a, b = (u, v) if u < v else (v, u)
            norm.add((a, b))
            nbr[a] |= 1 << b
            nbr[b] |= 1 << a
        self.edges = frozenset(norm)
        self._nbr = tuple(nbr)

    def nbr_mask(self, v: int) -> int:
        return self._nbr[v]

    def adjacent(self, u: int, v: int) -> bool:
        return (self._nbr[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self._nbr[v].bit_count()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


# -- construction -----------------------------------------------------------


def build_poset(
    n: int, relations: Iterable[tuple[int, int]], names: Sequence[str] | None = None
) -> Poset:
    """Transitively close generator pairs (u < v) and validate the order axioms.

    Raises CycleError when the generators admit a directed cycle (including
    a self pair), IdOutOfRange on ids outside [0, n).
    """
    if n < 0:
        raise IdOutOfRange("negative element count")
    adj: list[list[int]] = [[] for _ in range(n)]
    indeg = [0] * n
    seen = set()
    for u, v in relations:
        if not (0 <= u < n and 0 <= v < n):
            raise IdOutOfRange(f"pair ({u},{v}) outside [0,{n})")
        if u == v:
            raise CycleError(f"element {u} related to itself")
        if (u, v) in seen:
            continue
        seen.add((u, v))
        adj[u].append(v)
        indeg[v] += 1
    order = [u for u in range(n) if indeg[u] == 0]
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        for v in adj[u]:
            indeg[v] -= 1
            if indeg[v] == 0:
                order.append(v)
    if len(order) < n:
        raise CycleError("generator pairs contain a directed cycle")
    succ = [0] * n
    for u in reversed(order):
        m = 0
        for v in adj[u]:
            m |= succ[v] | (1 << v)
        succ[u] = m
    return Poset(n, succ, names)


def interval_order_from_intervals(
    intervals: Sequence[tuple[float, float]], names: Sequence[str] | None = None
) -> Poset:
    """Poset of closed intervals: u < v iff u's interval ends before v's begins.

    Endpoints may be any comparable numbers (ints, Fractions, floats).
    The resulting relation is automatically a valid strict order.
    """
    spans = []
    for t in intervals:
        left, right = t
        if left > right:
            raise MalformedInterval(f"interval {t!r} has left > right")
        spans.append((left, right))
    n = len(spans)
    succ = []
    for _, right in spans:
        m = 0
        for v, (left_v, _) in enumerate(spans):
            if right < left_v:
                m |= 1 << v
        succ.append(m)
    return Poset(n, succ, names)


def chain_poset(n: int, names: Sequence[str] | None = None) -> Poset:
    """Total order 0 < 1 < ... < n-1."""
    full = (1 << n) - 1
    return Poset(n, [full & ~((1 << (u + 1)) - 1) for u in range(n)], names)


def antichain_poset(n: int, names: Sequence[str] | None = None) -> Poset:
    """n pairwise incomparable elements."""
    return Poset(n, [0] * n, names)


# -- width, Dilworth --------------------------------------------------------


def _maximum_matching(p: Poset) -> tuple[list[int], list[int]]:
    """Maximum bipartite matching on the split-vertex graph of the closed relation.

    Left copy of u connects to right copies of all v with u < v.  A greedy
    pass seeds the matching, then BFS augmentation finishes it.  Returns
    (match_l, match_r) with -1 for unmatched.
    """
    n = p.n
    match_l = [-1] * n
    match_r = [-1] * n
    taken = 0
    for u in range(n):
        free = p.succ_mask(u) & ~taken
        if free:
            v = (free & -free).bit_length() - 1
            match_l[u] = v
            match_r[v] = u
            taken |= 1 << v
    for root in range(n):
        if match_l[root] != -1:
            continue
        prev: dict[int, int] = {}
        visited_r = 0
        frontier = [root]
        goal = -1
        while frontier and goal == -1:
            nxt = []
            for u in frontier:
                fresh = p.succ_mask(u) & ~visited_r
                visited_r |= fresh
                for v in iter_bits(fresh):
                    prev[v] = u
                    w = match_r[v]
                    if w == -1:
                        goal = v
                        break
                    nxt.append(w)
                if goal != -1:
                    break
            frontier = nxt
        if goal == -1:
            continue
        v = goal
        while True:
            u = prev[v]
            nxt_v = match_l[u]
            match_l[u] = v
            match_r[v] = u
            if nxt_v == -1:
                break
            v = nxt_v
    return match_l, match_r


def width_with_witness(p: Poset) -> tuple[int, Antichain]:
    """Maximum antichain size plus a witness, via matching and Koenig duality."""
    n = p.n
    if n == 0:
        return 0, Antichain(())
    match_l, match_r = _maximum_matching(p)
    zl = 0
    frontier = [u for u in range(n) if match_l[u] == -1]
    for u in frontier:
        zl |= 1 << u
    zr = 0
    while frontier:
        nxt = []
        for u in frontier:
            edges = p.succ_mask(u)
            if match_l[u] != -1:
                edges &= ~(1 << match_l[u])
            fresh = edges & ~zr
            zr |= fresh
            for v in iter_bits(fresh):
                w = match_r[v]
                # w == -1 would mean an augmenting path survived
                assert w != -1
                if not (zl >> w) & 1:
                    zl |= 1 << w
                    nxt.append(w)
        frontier = nxt
    matched = sum(1 for v in match_r if v != -1)
    width = n - matched
    witness = tuple(x for x in range(n) if (zl >> x) & 1 and not (zr >> x) & 1)
    assert len(witness) == width
    return width, Antichain(witness)


def dilworth_partition(p: Poset) -> ChainPartition:
    """Partition into width(p) chains, read off the matching paths."""
    match_l, match_r = _maximum_matching(p)
    chains = []
    for start in range(p.n):
        if match_r[start] != -1:
            continue
        path = [start]
        while match_l[path[-1]] != -1:
            path.append(match_l[path[-1]])
        chains.append(Chain(tuple(path)))
    chains.sort(key=lambda c: c.elements[0])
    return ChainPartition(tuple(chains))


# -- graphs from posets -----------------------------------------------------


def incomparability_graph(p: Poset) -> Graph:
    """Graph joining every incomparable pair of distinct elements."""
    edges = []
    for u in range(p.n):
        above_u = p.inc_mask(u) >> (u + 1)
        for off in iter_bits(above_u):
            edges.append((u, u + 1 + off))
    return Graph(p.n, edges)


# -- forbidden pattern search -----------------------------------------------


def find_k_plus_k(p: Poset, k: int, budget: int | None = None) -> KkWitness | None:
    """Search for two disjoint k-chains with all cross pairs incomparable.

    Exhaustive backtracking over candidate assignments, extending in
    increasing id order; ``budget`` caps the number of search tree nodes
    and exceeding it raises BudgetExhausted (distinct from a completed
    search returning None).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = p.n
    if 2 * k > n:
        return None
    full = (1 << n) - 1
    comp = [p.comp_mask(u) for u in range(n)]
    inc = [p.inc_mask(u) for u in range(n)]
    nodes = 0

    def rec(last, cand_a, cand_b, need_a, need_b, a, b):
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExhausted(f"k+k search exceeded {budget} nodes")
        if not need_a and not need_b:
            return a, b
        gt = full & ~((1 << (last + 1)) - 1)
        avail_a = cand_a & gt if need_a else 0
        avail_b = cand_b & gt if need_b else 0
        if avail_a.bit_count() < need_a or avail_b.bit_count() < need_b:
            return None
        if (avail_a | avail_b).bit_count() < need_a + need_b:
            return None
        for v in iter_bits(avail_a | avail_b):
            bit = 1 << v
            if avail_a & bit:
                got = rec(v, cand_a & comp[v], cand_b & inc[v], need_a - 1, need_b, a + (v,), b)
                if got is not None:
                    return got
            # first placed element always goes to chain a (symmetry break)
            if avail_b & bit and a:
                got = rec(v, cand_a & inc[v], cand_b & comp[v], need_a, need_b - 1, a, b + (v,))
                if got is not None:
                    return got
        return None

    got = rec(-1, full, full, k, k, (), ())
    if got is None:
        return None
    a, b = got
    witness = KkWitness(Chain(p.sort_chain(a)), Chain(p.sort_chain(b)))
    assert witness.is_valid(p)
    return witness


def is_interval_order(p: Poset) -> bool:
    """True iff the poset has no pair of disjoint incomparable 2-chains.

    Complete polynomial scan: for every comparable pair (a, b), look for a
    second comparable pair inside the elements incomparable to both.
    """
    n = p.n
    for a in range(n):
        for b in iter_bits(p.succ_mask(a)):
            both = p.inc_mask(a) & p.inc_mask(b)
            for c in iter_bits(both):
                if p.succ_mask(c) & both:
                    return False
    return True


def is_extension(p: Poset, q: Poset) -> bool:
    """True iff every relation of q also holds in p (p extends q)."""
    if p.n != q.n:
        raise SizeMismatch(f"element counts differ: {p.n} vs {q.n}")
    return all(q.succ_mask(u) & ~p.succ_mask(u) == 0 for u in range(p.n))


# -- small graph builders ----------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n, [])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def complete_multipartite_graph(sizes: Sequence[int]) -> Graph:
    bounds = [0]
    for s in sizes:
        bounds.append(bounds[-1] + s)
    n = bounds[-1]
    edges = []
    for i in range(len(sizes)):
        for j in range(i + 1, len(sizes)):
            for u in range(bounds[i], bounds[i + 1]):
                for v in range(bounds[j], bounds[j + 1]):
                    edges.append((u, v))
    return Graph(n, edges)
