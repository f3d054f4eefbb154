"""Exact maximum sizes for 5 <= k <= n-1 on small orders, next to the chain-of-cliques
lower bound. No closed form is known here; the output is empirical data only."""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass

from genconn.extremal import ORACLE, compute_f
from genconn.families import lower_bound_value


@dataclass
class Config:
    n_max: int = 7
    ks: tuple[int, ...] = (5, 6)
    workers: int | None = None
    csv_path: str | None = None


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=Config.n_max)
    parser.add_argument("--k", type=int, nargs="+", default=list(Config.ks))
    parser.add_argument("--workers", type=int)
    parser.add_argument("--csv", dest="csv_path")
    args = parser.parse_args(argv)
    cfg = Config(args.n_max, tuple(args.k), args.workers, args.csv_path)

    table = []
    for k in cfg.ks:
        for n in range(k + 1, cfg.n_max + 1):
            rep = compute_f(n, k, ORACLE, cfg.workers)
            lb = lower_bound_value(n, k)
            table.append((n, k, rep.f_value, lb, len(rep.extremal_graphs), " ".join(rep.extremal_graphs)))
            print(f"k={k} n={n} f={rep.f_value} lower_bound={lb} extremal={len(rep.extremal_graphs)} "
                  f"({rep.elapsed:.1f}s)", flush=True)
    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["n", "k", "f", "lower_bound", "count", "graph6"])
            writer.writerows(table)
    return 0


if __name__ == "__main__":
    sys.exit(main())
