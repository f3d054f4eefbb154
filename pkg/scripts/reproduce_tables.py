"""Recompute the extremal sizes for k = 3, 4 and n, compare them with the closed forms,
and write a table (plus optional JSON) of the results."""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from genconn.extremal import MAX_ORACLE_ORDER, ORACLE, STRUCTURAL, compute_f
from genconn.families import G_CLASS, H_CLASS, K_CLASS, extremal_size, generate_class
from genconn.graph6 import encode


@dataclass
class Config:
    n_max: int = 8
    oracle_max: int = MAX_ORACLE_ORDER
    workers: int | None = None
    json_path: str | None = None


@dataclass
class Row:
    n: int
    k: str
    f: int
    closed_form: int
    count: int
    class_size: int
    sets_equal: bool
    method: str
    seconds: float

    @property
    def ok(self) -> bool:
        return self.f == self.closed_form and self.sets_equal


def rows(cfg: Config):
    plan = [("3", 3, G_CLASS), ("4", 4, H_CLASS), ("n", None, K_CLASS)]
    for label, k, cls in plan:
        for n in range(max(3, k or 5), cfg.n_max + 1):
            kk = n if k is None else k
            method = ORACLE if n <= cfg.oracle_max and (k is not None or n <= 6) else STRUCTURAL
            rep = compute_f(n, kk, method, cfg.workers)
            members = sorted(encode(g) for g in generate_class(cls, n))
            yield Row(n, label, rep.f_value, extremal_size(cls, n), len(rep.extremal_graphs),
                      len(members), sorted(rep.extremal_graphs) == members, method, rep.elapsed)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=Config.n_max)
    parser.add_argument("--oracle-max", type=int, default=Config.oracle_max)
    parser.add_argument("--workers", type=int)
    parser.add_argument("--json", dest="json_path", help="also write rows to this file")
    cfg = Config(**vars(parser.parse_args(argv)))

    out = []
    print(f"{'k':>2} {'n':>2} {'f':>3} {'formula':>7} {'count':>5} {'class':>5} {'method':>10} {'sec':>7}")
    for row in rows(cfg):
        out.append(row)
        mark = "" if row.ok else "  MISMATCH"
        print(f"{row.k:>2} {row.n:>2} {row.f:>3} {row.closed_form:>7} {row.count:>5} "
              f"{row.class_size:>5} {row.method:>10} {row.seconds:>7.2f}{mark}", flush=True)
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            json.dump([asdict(r) for r in out], fh, indent=2)
    return 0 if all(r.ok for r in out) else 1


if __name__ == "__main__":
    sys.exit(main())
