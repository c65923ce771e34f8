"""Seeded instance generation for the property suites and the bench sweep.

All randomness flows through splitmix64 so identical configs reproduce
bit-identical instances on any platform.  Random posets come from a
permutation skeleton (a linear extension) with forward pairs kept at a
fixed rate, then closed; k+k-free instances are rejection-sampled against
the complete pattern search.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GaveUp
from .order import Graph, Poset, build_poset, find_k_plus_k, interval_order_from_intervals

__all__ = [
    "SplitMix64",
    "GenConfig",
    "gen_interval_order",
    "gen_kk_free",
    "gen_random_poset",
    "gen_graph",
]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator: 64-bit state, fixed multiplicative mixing."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs a positive bound")
        return self.next_u64() % n

    def chance(self, threshold: int) -> bool:
        """True with probability threshold / 2^64."""
        return self.next_u64() < threshold

    def shuffle(self, items: list) -> list:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items

    def permutation(self, n: int) -> list[int]:
        return self.shuffle(list(range(n)))


def _threshold(density: float) -> int:
    if not 0.0 <= density <= 1.0:
        raise ValueError("density must lie in [0, 1]")
    return min(_MASK64 + 1, int(density * (_MASK64 + 1)))


@dataclass(frozen=True)
class GenConfig:
    """Echoed into output metadata so every instance can be regenerated."""

    seed: int
    kind: str
    n: int
    params: dict = field(default_factory=dict)

    def to_meta(self) -> dict:
        meta = {"seed": self.seed, "kind": self.kind, "n": self.n}
        meta.update(self.params)
        return meta


def gen_interval_order(seed: int, n: int, coordinate_range: int | None = None) -> Poset:
    """n random closed integer intervals, read as a poset (2+2-free by construction)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if coordinate_range is None:
        coordinate_range = max(1, 2 * n)
    rng = SplitMix64(seed)
    intervals = []
    for _ in range(n):
        a = rng.below(coordinate_range)
        b = rng.below(coordinate_range)
        intervals.append((min(a, b), max(a, b)))
    return interval_order_from_intervals(intervals)


def gen_random_poset(rng: SplitMix64, n: int, density: float = 0.5) -> Poset:
    """Permutation skeleton + forward pairs at the given rate, closed."""
    thr = _threshold(density)
    perm = rng.permutation(n)
    pairs = []
    for s in range(n):
        for t in range(s + 1, n):
            if rng.chance(thr):
                pairs.append((perm[s], perm[t]))
    return build_poset(n, pairs)


def gen_kk_free(
    seed: int,
    n: int,
    k: int,
    max_tries: int = 100,
    density: float = 0.5,
    budget: int | None = None,
) -> Poset:
    """Rejection-sample random posets until the complete k+k search returns none.

    Raises GaveUp after max_tries rejected candidates.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    rng = SplitMix64(seed)
    for _ in range(max_tries):
        p = gen_random_poset(rng, n, density)
        if find_k_plus_k(p, k, budget=budget) is None:
            return p
    raise GaveUp(f"no {k}+{k}-free instance within {max_tries} tries")


def gen_graph(seed: int, n: int, density: float) -> Graph:
    """Erdos-Renyi style simple graph, deterministic per seed."""
    if n < 0:
        raise ValueError("n must be non-negative")
    thr = _threshold(density)
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.chance(thr):
                edges.append((u, v))
    return Graph(n, edges)
