#!/usr/bin/env python3
"""Grid bench: worst observed First-Fit chains vs the 8(2k-3)w guarantee.

Writes one CSV per (k, w) cell via the CLI, then prints a summary table of
the largest observed chain count, the certified bound, and their ratio.

Usage: python scripts/sweep_bounds.py [--outdir DIR] [--trials N] [--orders R] [--seed S]
"""

import argparse
import csv
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from posetff.cli import main as cli_main  # noqa: E402


def run(args):
    args.outdir.mkdir(parents=True, exist_ok=True)
    print(f"{'k':>3} {'w':>3} {'n':>4} {'max_ff':>7} {'bound':>6} {'ratio':>6}")
    worst_ratio = 0.0
    for k in (2, 3, 4, 5):
        for w in (2, 3, 4):
            out = args.outdir / f"bench_k{k}_w{w}.csv"
            code = cli_main([
                "bench", "--k", str(k), "--w", str(w),
                "--trials", str(args.trials), "--orders", str(args.orders),
                "--seed", str(args.seed + 10 * k + w), "--csv", str(out),
            ])
            if code != 0:
                print(f"bench failed for k={k} w={w} (exit {code})", file=sys.stderr)
                return code
            with open(out, newline="") as fh:
                rows = list(csv.DictReader(fh))
            if not rows:
                continue
            top = max(rows, key=lambda r: int(r["ff_chains"]) / int(r["bound"]))
            ff, bound = int(top["ff_chains"]), int(top["bound"])
            ratio = ff / bound
            worst_ratio = max(worst_ratio, ratio)
            print(f"{k:>3} {w:>3} {top['n']:>4} {ff:>7} {bound:>6} {ratio:>6.3f}")
    print(f"\nlargest observed fraction of the guarantee: {worst_ratio:.3f}")
    return 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", type=Path, default=Path("bench_out"))
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--orders", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    sys.exit(run(ap.parse_args()))
