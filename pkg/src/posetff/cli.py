"""Command-line surface: generate instances, run First-Fit, build certificates, sweep bounds.

Exit codes are uniform across subcommands: 0 success, 1 a certified
property was violated (a machine-readable witness goes to stdout),
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

from .adversary import kierstead, stacked
from .errors import PosetFFError
from .extension import decomposition_from_blocks, interval_order_of
from .firstfit import PresentationOrder, first_fit_chains, validate_ff_partition
from .generators import GenConfig, SplitMix64, gen_interval_order, gen_kk_free
from .jsonio import (
    canonical_dumps,
    ff_result_to_dict,
    intervals_to_dict,
    order_from_dict,
    order_to_dict,
    pd_to_dict,
    poset_from_dict,
    poset_to_dict,
    read_json,
    witness_to_dict,
    write_json,
)
from .order import KkWitness, width_with_witness

BUDGET_ENV = "POSETFF_BUDGET"
CSV_COLUMNS = ["kind", "params", "n", "width", "k", "ff_chains", "bound", "pd_width", "seconds"]
DEFAULT_KKFREE_DENSITY = 0.5


def _budget() -> int | None:
    raw = os.environ.get(BUDGET_ENV)
    return int(raw) if raw else None


def _emit(obj: dict, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(canonical_dumps(obj))
    else:
        write_json(obj, path)


def cmd_gen(args: argparse.Namespace) -> int:
    if args.family == "kierstead":
        kp = kierstead(args.q)
        meta = {"kind": "kierstead", "q": args.q}
        _emit(poset_to_dict(kp.poset, meta=meta), args.out)
        if args.out_order:
            write_json(order_to_dict(kp.natural_order), args.out_order)
    elif args.family == "stacked":
        sp = stacked(args.k, args.w)
        meta = {"kind": "stacked", "k": args.k, "w": args.w}
        _emit(poset_to_dict(sp.poset, meta=meta), args.out)
        if args.out_order:
            write_json(order_to_dict(sp.natural_order), args.out_order)
    elif args.family == "interval":
        cfg = GenConfig(seed=args.seed, kind="interval", n=args.n,
                        params={"range": args.range} if args.range else {})
        p = gen_interval_order(args.seed, args.n, args.range)
        _emit(poset_to_dict(p, meta=cfg.to_meta()), args.out)
    elif args.family == "kkfree":
        cfg = GenConfig(seed=args.seed, kind="kkfree", n=args.n,
                        params={"k": args.k, "density": args.density})
        p = gen_kk_free(args.seed, args.n, args.k, max_tries=args.max_tries,
                        density=args.density, budget=_budget())
        _emit(poset_to_dict(p, meta=cfg.to_meta()), args.out)
    return 0


def cmd_ff(args: argparse.Namespace) -> int:
    p = poset_from_dict(read_json(args.poset))
    order = order_from_dict(read_json(args.order))
    res = first_fit_chains(p, order)
    print(f"ff chains={res.chain_count} n={p.n}")
    if args.out:
        write_json(ff_result_to_dict(res), args.out)
    else:
        sys.stdout.write(canonical_dumps(ff_result_to_dict(res)))
    if args.validate and not validate_ff_partition(p, res.partition):
        print("validation failed: output is not a First-Fit chain partition", file=sys.stderr)
        return 1
    if args.expect is not None and res.chain_count != args.expect:
        print(f"expected {args.expect} chains, got {res.chain_count}", file=sys.stderr)
        return 1
    return 0


def cmd_extend(args: argparse.Namespace) -> int:
    p = poset_from_dict(read_json(args.poset))
    got = interval_order_of(p, args.k)
    if isinstance(got, KkWitness):
        payload = witness_to_dict(got)
        sys.stdout.write(canonical_dumps(payload))
        if args.out_witness:
            write_json(payload, args.out_witness)
        return 1
    w, _ = width_with_witness(p)
    wq, _ = width_with_witness(got.order)
    pd = decomposition_from_blocks(got.sequence)
    print(f"width_q={wq} bound={(2 * args.k - 3) * w} pd_width={pd.width}")
    if args.out_order:
        write_json(poset_to_dict(got.order), args.out_order)
    if args.out_intervals:
        write_json(intervals_to_dict(got.representation), args.out_intervals)
    if args.out_pd:
        write_json(pd_to_dict(pd), args.out_pd)
    return 0


def _bench_size(k: int, w: int) -> int:
    # desk-scale defaults: interval orders can run larger, rejection-sampled
    # k+k-free posets stay inside the complete search's comfort zone
    if k == 2:
        return 8 * w
    return min(4 * w + 2 * (k - 2), 20)


def cmd_bench(args: argparse.Namespace) -> int:
    k, w = args.k, args.w
    if k < 2:
        print("bench needs k >= 2", file=sys.stderr)
        return 2
    master = SplitMix64(args.seed)
    seeds = sorted(master.next_u64() for _ in range(args.trials))
    rows = []
    violation = None
    n = _bench_size(k, w)
    for inst_seed in seeds:
        t0 = time.perf_counter()
        if k == 2:
            kind = "interval"
            p = gen_interval_order(inst_seed, n)
            params = f"w={w};orders={args.orders};instance_seed={inst_seed}"
        else:
            kind = "kkfree"
            p = gen_kk_free(inst_seed, n, k, density=DEFAULT_KKFREE_DENSITY,
                            budget=_budget())
            params = (f"w={w};orders={args.orders};instance_seed={inst_seed};"
                      f"density={DEFAULT_KKFREE_DENSITY}")
        width, _ = width_with_witness(p)
        bound = 8 * (2 * k - 3) * width
        pd = decomposition_from_blocks_or_fail(p, k)
        orders_rng = SplitMix64(inst_seed + 1)
        worst = 0
        worst_order = None
        for _ in range(args.orders):
            order = PresentationOrder(tuple(orders_rng.permutation(p.n)))
            used = first_fit_chains(p, order).chain_count
            if used > worst:
                worst = used
                worst_order = order
        seconds = time.perf_counter() - t0
        rows.append({
            "kind": kind, "params": params, "n": p.n, "width": width, "k": k,
            "ff_chains": worst, "bound": bound, "pd_width": pd.width,
            "seconds": f"{seconds:.6f}",
        })
        if worst > bound and violation is None:
            violation = {
                "instance_seed": inst_seed, "ff_chains": worst, "bound": bound,
                "order": list(worst_order.order) if worst_order else [],
            }
    with open(args.csv, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        writer.writerows(rows)
    if violation is not None:
        sys.stdout.write(canonical_dumps(violation))
        if args.out_witness:
            write_json(violation, args.out_witness)
        return 1
    return 0


def decomposition_from_blocks_or_fail(p, k):
    got = interval_order_of(p, k)
    if isinstance(got, KkWitness):
        raise PosetFFError("certified k+k-free instance produced a witness")
    return decomposition_from_blocks(got.sequence)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetff")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate instance files")
    fam = gen.add_subparsers(dest="family", required=True)
    g_k = fam.add_parser("kierstead", help="width-2 ladder forcing q chains")
    g_k.add_argument("--q", type=int, required=True)
    g_s = fam.add_parser("stacked", help="stacked ladders forcing (k-1)(w-1) chains")
    g_s.add_argument("--k", type=int, required=True)
    g_s.add_argument("--w", type=int, required=True)
    for sp in (g_k, g_s):
        sp.add_argument("--out", default=None, help="poset JSON path (default stdout)")
        sp.add_argument("--out-order", default=None, help="natural order JSON path")
    g_i = fam.add_parser("interval", help="random interval order")
    g_i.add_argument("--n", type=int, required=True)
    g_i.add_argument("--seed", type=int, default=0)
    g_i.add_argument("--range", type=int, default=None)
    g_i.add_argument("--out", default=None)
    g_f = fam.add_parser("kkfree", help="rejection-sampled k+k-free poset")
    g_f.add_argument("--n", type=int, required=True)
    g_f.add_argument("--k", type=int, required=True)
    g_f.add_argument("--seed", type=int, default=0)
    g_f.add_argument("--max-tries", type=int, default=100)
    g_f.add_argument("--density", type=float, default=DEFAULT_KKFREE_DENSITY)
    g_f.add_argument("--out", default=None)
    gen.set_defaults(func=cmd_gen)

    ff = sub.add_parser("ff", help="run First-Fit on a poset file")
    ff.add_argument("--poset", required=True)
    ff.add_argument("--order", required=True)
    ff.add_argument("--expect", type=int, default=None)
    ff.add_argument("--validate", action="store_true")
    ff.add_argument("--out", default=None, help="assignment JSON path (default stdout)")
    ff.set_defaults(func=cmd_ff)

    ext = sub.add_parser("extend", help="build the interval extension and decomposition")
    ext.add_argument("--poset", required=True)
    ext.add_argument("--k", type=int, required=True)
    ext.add_argument("--out-order", default=None, help="interval order poset JSON")
    ext.add_argument("--out-intervals", default=None)
    ext.add_argument("--out-pd", default=None)
    ext.add_argument("--out-witness", default=None)
    ext.set_defaults(func=cmd_extend)

    bench = sub.add_parser("bench", help="sweep First-Fit against the 8(2k-3)w bound")
    bench.add_argument("--k", type=int, required=True)
    bench.add_argument("--w", type=int, required=True)
    bench.add_argument("--trials", type=int, required=True)
    bench.add_argument("--orders", type=int, required=True)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--csv", required=True)
    bench.add_argument("--out-witness", default=None)
    bench.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (OSError, json.JSONDecodeError, ValueError, PosetFFError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
