"""Collapsing greedy color classes inside an interval completion.

A path decomposition turns a graph into a spanning subgraph of an
interval graph (vertex intervals are bag spans).  Within each greedy
color class, the components of the completed graph merge into single
interval vertices; the quotient is an interval graph with no larger
clique than the completion, the quotient map preserves edges, and the
transported classes are again a valid greedy coloring.  The module also
carries the exact oracles used to certify all of this: interval clique
number by sweep and pathwidth by a vertex-separation subset DP.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidColoring, InvalidDecomposition, TooLarge
from .extension import PathDecomposition, validate_path_decomposition
from .firstfit import FFColoring, validate_ff_coloring
from .order import Graph, iter_bits

__all__ = [
    "IntervalCompletion",
    "Homomorphism",
    "FFImage",
    "interval_completion",
    "build_ff_image",
    "interval_clique_number",
    "pathwidth_exact",
    "path_decomposition_exact",
    "validate_homomorphism",
]

PATHWIDTH_DEFAULT_LIMIT = 14


@dataclass(frozen=True)
class IntervalCompletion:
    """Vertex intervals (1-based bag spans) implying an interval supergraph."""

    n: int
    bag_count: int
    intervals: tuple[tuple[int, int], ...]

    def graph(self) -> Graph:
        """The implied interval graph: adjacency is interval intersection."""
        edges = []
        for u in range(self.n):
            au, bu = self.intervals[u]
            for v in range(u + 1, self.n):
                av, bv = self.intervals[v]
                if au <= bv and av <= bu:
                    edges.append((u, v))
        return Graph(self.n, edges)

    def clique_number(self) -> int:
        return interval_clique_number(self.intervals)


@dataclass(frozen=True)
class Homomorphism:
    """A vertex map; validity (edge preservation, surjectivity) checked separately."""

    mapping: tuple[int, ...]


@dataclass(frozen=True)
class FFImage:
    """The quotient interval graph with its intervals, classes, and components."""

    h: Graph
    intervals: tuple[tuple[int, int], ...]
    classes: tuple[tuple[int, ...], ...]  # per input class: the quotient vertices
    components: tuple[tuple[tuple[int, ...], ...], ...]  # [class][component] -> members

    def coloring(self) -> FFColoring:
        return FFColoring(tuple(frozenset(z) for z in self.classes))


def interval_completion(g: Graph, pd: PathDecomposition) -> IntervalCompletion:
    """Read off each vertex's first and last bag as its interval."""
    if not validate_path_decomposition(g, pd):
        raise InvalidDecomposition("path decomposition invalid for this graph")
    first = [0] * g.n
    last = [0] * g.n
    for t, bag in enumerate(pd.bags, start=1):
        for v in bag:
            if first[v] == 0:
                first[v] = t
            last[v] = t
    return IntervalCompletion(
        n=g.n, bag_count=len(pd.bags), intervals=tuple(zip(first, last))
    )


def interval_clique_number(intervals: Sequence[tuple[int, int]]) -> int:
    """Maximum point load of closed integer intervals (sweep at left endpoints)."""
    best = 0
    for start, _ in intervals:
        load = sum(1 for a, b in intervals if a <= start <= b)
        best = max(best, load)
    return best


def build_ff_image(
    g: Graph, ic: IntervalCompletion, coloring: FFColoring
) -> tuple[FFImage, Homomorphism]:
    """Merge completion components of every color class into interval vertices.

    The resulting map is a surjective homomorphism, the image's clique
    number is at most the completion's, and the transported classes form
    a valid greedy coloring of the image with the same class count; all
    three facts are checked before returning.
    """
    if ic.n != g.n:
        raise InvalidColoring("completion and graph sizes differ")
    if not validate_ff_coloring(g, coloring):
        raise InvalidColoring("input classes are not a First-Fit coloring")
    spans = ic.intervals
    mapping = [-1] * g.n
    h_intervals: list[tuple[int, int]] = []
    classes: list[tuple[int, ...]] = []
    components: list[tuple[tuple[int, ...], ...]] = []
    for cls in coloring.classes:
        verts = sorted(cls)
        comp_of: dict[int, int] = {}
        comps: list[list[int]] = []
        for v in verts:
            if v in comp_of:
                continue
            comp = [v]
            comp_of[v] = len(comps)
            stack = [v]
            while stack:
                x = stack.pop()
                ax, bx = spans[x]
                for w in verts:
                    if w in comp_of:
                        continue
                    aw, bw = spans[w]
                    if ax <= bw and aw <= bx:
                        comp_of[w] = len(comps)
                        comp.append(w)
                        stack.append(w)
            comps.append(sorted(comp))
        ids = []
        members: list[tuple[int, ...]] = []
        for comp in comps:
            lo = min(spans[v][0] for v in comp)
            hi = max(spans[v][1] for v in comp)
            # connectivity means the member spans tile [lo, hi] without a gap
            reach = lo - 1
            for a, b in sorted(spans[v] for v in comp):
                assert a <= reach + 1
                reach = max(reach, b)
            assert reach == hi
            hid = len(h_intervals)
            h_intervals.append((lo, hi))
            for v in comp:
                mapping[v] = hid
            ids.append(hid)
            members.append(tuple(comp))
        classes.append(tuple(ids))
        components.append(tuple(members))
    edges = []
    for x in range(len(h_intervals)):
        ax, bx = h_intervals[x]
        for y in range(x + 1, len(h_intervals)):
            ay, by = h_intervals[y]
            if ax <= by and ay <= bx:
                edges.append((x, y))
    h = Graph(len(h_intervals), edges)
    image = FFImage(
        h=h,
        intervals=tuple(h_intervals),
        classes=tuple(classes),
        components=tuple(components),
    )
    hom = Homomorphism(tuple(mapping))
    assert validate_homomorphism(g, h, hom)
    assert interval_clique_number(image.intervals) <= ic.clique_number()
    assert validate_ff_coloring(h, image.coloring())
    assert len(image.classes) == len(coloring.classes)
    return image, hom


def validate_homomorphism(g: Graph, h: Graph, f: Homomorphism) -> bool:
    """Edge preservation plus surjectivity onto the image's vertices."""
    m = f.mapping
    if len(m) != g.n:
        return False
    if any(not 0 <= x < h.n for x in m):
        return False
    for u, v in g.edges:
        fu, fv = m[u], m[v]
        if fu == fv or not h.adjacent(fu, fv):
            return False
    return set(m) == set(range(h.n)) if h.n else not g.n


def _separation_costs(g: Graph) -> list[int]:
    n = g.n
    nbr = [g.nbr_mask(v) for v in range(n)]
    size = 1 << n
    cost = [0] * size
    for mask in range(1, size):
        boundary = 0
        rest = ~mask
        best = None
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            if nbr[v] & rest:
                boundary += 1
            prev = cost[mask ^ low]
            if best is None or prev < best:
                best = prev
        cost[mask] = boundary if boundary > best else best
    return cost


def pathwidth_exact(g: Graph, limit: int = PATHWIDTH_DEFAULT_LIMIT) -> int:
    """Exact pathwidth via the vertex-separation dynamic program over subsets."""
    if g.n > limit:
        raise TooLarge(f"subset DP limited to {limit} vertices, got {g.n}")
    if g.n == 0:
        return 0
    return _separation_costs(g)[(1 << g.n) - 1]


def path_decomposition_exact(
    g: Graph, limit: int = PATHWIDTH_DEFAULT_LIMIT
) -> PathDecomposition:
    """An optimal path decomposition recovered from the separation DP."""
    if g.n > limit:
        raise TooLarge(f"subset DP limited to {limit} vertices, got {g.n}")
    n = g.n
    if n == 0:
        return PathDecomposition(())
    cost = _separation_costs(g)
    nbr = [g.nbr_mask(v) for v in range(n)]
    layout: list[int] = []
    mask = (1 << n) - 1
    while mask:
        target = cost[mask]
        for v in iter_bits(mask):
            if cost[mask ^ (1 << v)] <= target:
                layout.append(v)
                mask ^= 1 << v
                break
    layout.reverse()
    bags = []
    placed = 0
    for v in layout:
        # carry along every placed vertex that still has unplaced neighbors
        # (v itself is unplaced here, so its placed neighbors ride along)
        bag = [v]
        for u in iter_bits(placed):
            if nbr[u] & ~placed:
                bag.append(u)
        placed |= 1 << v
        bags.append(tuple(sorted(bag)))
    pd = PathDecomposition(tuple(bags))
    assert validate_path_decomposition(g, pd)
    assert pd.width == cost[(1 << n) - 1]
    return pd
