"""Canonical JSON formats for every artifact the tools exchange.

Poset files carry generator pairs (the transitive reduction on save) and
are closed again on load.  Dumps are canonical (sorted keys, tight
separators, trailing newline) so identical inputs give byte-identical
files.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .extension import BlockSequence, IntervalRepresentation, PathDecomposition
from .firstfit import FFChainResult, PresentationOrder
from .homomorphism import Homomorphism
from .order import Graph, KkWitness, Poset, build_poset

__all__ = [
    "canonical_dumps",
    "write_json",
    "read_json",
    "poset_to_dict",
    "poset_from_dict",
    "graph_to_dict",
    "graph_from_dict",
    "order_to_dict",
    "order_from_dict",
    "ff_result_to_dict",
    "intervals_to_dict",
    "intervals_from_dict",
    "block_trace_to_list",
    "pd_to_dict",
    "pd_from_dict",
    "homomorphism_to_dict",
    "homomorphism_from_dict",
    "witness_to_dict",
]


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def write_json(obj: Any, path: str | Path) -> None:
    Path(path).write_text(canonical_dumps(obj))


def read_json(path: str | Path) -> Any:
    return json.loads(Path(path).read_text())


def poset_to_dict(p: Poset, meta: dict | None = None) -> dict:
    d: dict[str, Any] = {
        "n": p.n,
        "relations": [list(pair) for pair in sorted(p.cover_pairs())],
    }
    if p.names is not None:
        d["names"] = list(p.names)
    if meta is not None:
        d["meta"] = meta
    return d


def poset_from_dict(d: dict) -> Poset:
    return build_poset(
        d["n"], [tuple(pair) for pair in d["relations"]], d.get("names")
    )


def graph_to_dict(g: Graph, meta: dict | None = None) -> dict:
    d: dict[str, Any] = {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}
    if meta is not None:
        d["meta"] = meta
    return d


def graph_from_dict(d: dict) -> Graph:
    return Graph(d["n"], [tuple(e) for e in d["edges"]])


def order_to_dict(order: PresentationOrder) -> dict:
    return {"order": list(order.order)}


def order_from_dict(d: dict) -> PresentationOrder:
    return PresentationOrder(tuple(d["order"]))


def ff_result_to_dict(res: FFChainResult) -> dict:
    return {
        "chains": [list(c.elements) for c in res.partition.chains],
        "assignment": list(res.assignment),
    }


def intervals_to_dict(rep: IntervalRepresentation) -> dict:
    return {"intervals": [list(iv) for iv in rep.intervals]}


def intervals_from_dict(d: dict) -> IntervalRepresentation:
    return IntervalRepresentation(tuple(tuple(iv) for iv in d["intervals"]))


def block_trace_to_list(seq: BlockSequence) -> list[dict]:
    return [
        {"removed": mv.removed, "added": mv.added, "chain": mv.chain} for mv in seq.moves
    ]


def pd_to_dict(pd: PathDecomposition) -> dict:
    return {"bags": [list(bag) for bag in pd.bags]}


def pd_from_dict(d: dict) -> PathDecomposition:
    return PathDecomposition(tuple(tuple(bag) for bag in d["bags"]))


def homomorphism_to_dict(f: Homomorphism) -> dict:
    return {"map": list(f.mapping)}


def homomorphism_from_dict(d: dict) -> Homomorphism:
    return Homomorphism(tuple(d["map"]))


def witness_to_dict(w: KkWitness) -> dict:
    return {"k": w.k, "a": list(w.a.elements), "b": list(w.b.elements)}
