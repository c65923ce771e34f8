"""Lower-bound generators: posets that force First-Fit to open many chains.

``kierstead(q)`` builds the classic width-2 ladder on rows 1..q (row i has
i elements) whose natural presentation order forces exactly q chains.
``stacked(k, w)`` glues w-1 such ladders (parameter k-1) on top of each
other, keeping the top rows incomparable across copies; the concatenated
natural order then forces (k-1)(w-1) chains while the result has width w
and no two disjoint incomparable k-chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import OutOfRange, ParamError
from .firstfit import PresentationOrder
from .order import Poset, antichain_poset

__all__ = [
    "KiersteadPoset",
    "StackedPoset",
    "kierstead",
    "stacked",
    "stacked_degenerate",
    "predicted_assignment",
]


def _row_start(i: int) -> int:
    # rows are 1-based; row i occupies ids [i(i-1)/2, i(i+1)/2)
    return i * (i - 1) // 2


def _row_of(element: int) -> tuple[int, int]:
    """Invert the row-major layout: id -> (i, j), both 1-based."""
    i = (isqrt(8 * element + 1) + 1) // 2
    while _row_start(i) > element:
        i -= 1
    while _row_start(i + 1) <= element:
        i += 1
    return i, element - _row_start(i) + 1


def _range_mask(a: int, b: int) -> int:
    return ((1 << (b - a)) - 1) << a if b > a else 0


def _ladder_succ(q: int) -> list[int]:
    """Successor masks for the ladder rule.

    v(i,j) < v(i',j') iff i' >= i+2, or i' in {i, i+1} with j' >= j+1.
    The rule is already transitively closed; the Poset constructor
    re-checks that.
    """
    n = _row_start(q + 1)
    succ = [0] * n
    for i in range(1, q + 1):
        rs = _row_start(i)
        far_above = _range_mask(_row_start(i + 2), n) if i + 2 <= q else 0
        for j in range(1, i + 1):
            m = far_above
            m |= _range_mask(rs + j, rs + i)  # rest of row i, from j+1 up
            if i + 1 <= q:
                m |= _range_mask(_row_start(i + 1) + j, _row_start(i + 1) + i + 1)
            succ[rs + j - 1] = m
    return succ


@dataclass(frozen=True)
class KiersteadPoset:
    q: int
    poset: Poset
    natural_order: PresentationOrder

    def element_id(self, i: int, j: int) -> int:
        if not (1 <= j <= i <= self.q):
            raise OutOfRange(f"no element v({i},{j}) for q={self.q}")
        return _row_start(i) + j - 1

    def indices(self, element: int) -> tuple[int, int]:
        if not 0 <= element < self.poset.n:
            raise OutOfRange(f"element {element} outside 0..{self.poset.n - 1}")
        return _row_of(element)

    def predicted_chain(self, element: int) -> int:
        i, j = self.indices(element)
        return i - j + 1


def kierstead(q: int) -> KiersteadPoset:
    """The ladder P on q rows: q(q+1)/2 elements, width 2 for q >= 2."""
    if q < 1:
        raise ParamError("q must be at least 1")
    n = _row_start(q + 1)
    names = []
    for i in range(1, q + 1):
        names.extend(f"v[{i},{j}]" for j in range(1, i + 1))
    poset = Poset(n, _ladder_succ(q), names)
    return KiersteadPoset(q=q, poset=poset, natural_order=PresentationOrder.identity(n))


@dataclass(frozen=True)
class StackedPoset:
    k: int
    w: int
    poset: Poset
    natural_order: PresentationOrder

    @property
    def copy_size(self) -> int:
        return _row_start(self.k)

    def element_id(self, copy: int, i: int, j: int) -> int:
        if not (1 <= copy <= self.w - 1 and 1 <= j <= i <= self.k - 1):
            raise OutOfRange(f"no element v{copy}({i},{j}) for k={self.k}, w={self.w}")
        return (copy - 1) * self.copy_size + _row_start(i) + j - 1

    def indices(self, element: int) -> tuple[int, int, int]:
        if not 0 <= element < self.poset.n:
            raise OutOfRange(f"element {element} outside 0..{self.poset.n - 1}")
        copy, local = divmod(element, self.copy_size)
        i, j = _row_of(local)
        return copy + 1, i, j

    def predicted_chain(self, element: int) -> int:
        copy, i, j = self.indices(element)
        return (self.k - 1) * (copy - 1) + (i - j + 1)


def stacked(k: int, w: int) -> StackedPoset:
    """w-1 ladders with parameter k-1, every non-top-row element below later copies.

    Width is exactly w and no two disjoint incomparable k-chains exist.
    Raises ParamError for k < 3 (see ``stacked_degenerate`` for the k=2
    stand-in) or w < 2.
    """
    if k < 3:
        raise ParamError("k must be at least 3; use stacked_degenerate for k=2")
    if w < 2:
        raise ParamError("w must be at least 2")
    q = k - 1
    copy_n = _row_start(q + 1)
    n = (w - 1) * copy_n
    base = _ladder_succ(q)
    top_start = _row_start(q)  # local ids >= this sit in the top row
    succ = [0] * n
    names = []
    for copy in range(1, w):
        off = (copy - 1) * copy_n
        later = _range_mask(copy * copy_n, n)
        for local in range(copy_n):
            m = base[local] << off
            if local < top_start:
                m |= later
            succ[off + local] = m
        for i in range(1, q + 1):
            names.extend(f"v{copy}[{i},{j}]" for j in range(1, i + 1))
    poset = Poset(n, succ, names)
    return StackedPoset(k=k, w=w, poset=poset, natural_order=PresentationOrder.identity(n))


def stacked_degenerate(w: int) -> tuple[Poset, PresentationOrder]:
    """The documented k=2 stand-in: an antichain of w elements.

    With k=2 the stacking recipe collapses (single-row ladders are their
    own top row, so no cross relations survive) and yields width w-1, not
    w.  An antichain of w elements has width w, no incomparable pair of
    2-chains, and forces First-Fit to w chains in any order.
    """
    if w < 1:
        raise ParamError("w must be at least 1")
    return antichain_poset(w), PresentationOrder.identity(w)


def predicted_assignment(kind: str, params: dict, element: int) -> int:
    """Closed-form chain index for an adversary element.

    ``kind`` is "kierstead" (params: q) or "stacked" (params: k, w).
    Raises OutOfRange when the element id is outside the family's universe.
    """
    if kind == "kierstead":
        q = params["q"]
        n = _row_start(q + 1)
        if not 0 <= element < n:
            raise OutOfRange(f"element {element} outside 0..{n - 1}")
        i, j = _row_of(element)
        return i - j + 1
    if kind == "stacked":
        k, w = params["k"], params["w"]
        copy_n = _row_start(k)
        n = (w - 1) * copy_n
        if not 0 <= element < n:
            raise OutOfRange(f"element {element} outside 0..{n - 1}")
        copy, local = divmod(element, copy_n)
        i, j = _row_of(local)
        return (k - 1) * copy + (i - j + 1)
    raise ValueError(f"unknown adversary kind {kind!r}")
