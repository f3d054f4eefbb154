"""Exhaustive search for the largest size of an n-vertex connected graph in which
every k vertices are joined by only one internally disjoint Steiner tree."""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from math import comb
from typing import Callable

from .ears import kappa3_equals_one, kappa4_equals_one
from .families import G_CLASS, H_CLASS, K_CLASS, is_member
from .generate import graphs_with_size
from .graph import BudgetExceeded, Graph, is_connected
from .graph6 import encode
from .packing import kappa_n_equals_one
from .steiner import kappa_bar_equals_one

ORACLE = "oracle"
STRUCTURAL = "structural"
MAX_ORACLE_ORDER = 7
MAX_STRUCTURAL_ORDER = 8


def default_workers() -> int:
    """$GENCONN_WORKERS if set, otherwise the available parallelism."""
    env = os.environ.get("GENCONN_WORKERS")
    return int(env) if env else (os.cpu_count() or 1)


@dataclass
class ExtremalReport:
    n: int
    k: int
    f_value: int
    extremal_graphs: list[str]
    family: str | None
    family_verdict: dict[str, bool]
    method: str
    elapsed: float
    examined: int
    levels: list[int] = field(default_factory=list)  # edge counts examined, top down
    conjecture: bool = False

    def to_dict(self) -> dict:
        return asdict(self)


def family_for(n: int, k: int) -> str | None:
    if k == n and n >= 5:
        return K_CLASS
    if k == 3:
        return G_CLASS
    if k == 4:
        return H_CLASS
    return None


def _oracle(k: int) -> Callable[[Graph], bool]:
    return lambda g: kappa_bar_equals_one(g, k)


def _structural(n: int, k: int) -> Callable[[Graph], bool]:
    if k == n:
        return kappa_n_equals_one
    if k == 3:
        return kappa3_equals_one
    if k == 4:
        return kappa4_equals_one
    raise ValueError(f"no structural classifier for k={k} at n={n}")


def _classify_chunk(args):
    n, k, method, codes = args
    from .graph6 import decode

    test = _oracle(k) if method == ORACLE else _structural(n, k)
    return [test(decode(c)) for c in codes]


def _classify(graphs: list[Graph], n: int, k: int, method: str, workers: int) -> list[bool]:
    if workers <= 1 or len(graphs) < 64:
        test = _oracle(k) if method == ORACLE else _structural(n, k)
        return [test(g) for g in graphs]
    codes = [encode(g) for g in graphs]
    step = (len(codes) + workers - 1) // workers
    chunks = [(n, k, method, codes[i:i + step]) for i in range(0, len(codes), step)]
    with ProcessPoolExecutor(workers) as pool:
        out: list[bool] = []
        for part in pool.map(_classify_chunk, chunks):
            out.extend(part)
    return out


def compute_f(
    n: int,
    k: int,
    method: str = STRUCTURAL,
    workers: int | None = None,
    max_oracle_order: int = MAX_ORACLE_ORDER,
    max_structural_order: int = MAX_STRUCTURAL_ORDER,
) -> ExtremalReport:
    """Maximum size of a connected n-vertex graph with kappa-bar_k = 1, and all graphs attaining it.

    Edge counts are scanned from the top down; every connected graph at or above
    the answer is classified. For k = n with the structural method the scan runs
    over complements, which keeps it to a handful of sparse graphs.
    """
    if not 2 <= k <= n:
        raise ValueError(f"need 2 <= k <= n, got k={k}, n={n}")
    if method == ORACLE:
        if n > max_oracle_order:
            raise BudgetExceeded(f"oracle method supports n <= {max_oracle_order}")
    elif method == STRUCTURAL:
        if k not in (3, 4) and k != n:
            raise ValueError(f"structural method covers k in {{3, 4, n}}, got k={k}")
        if n > max_structural_order:
            raise BudgetExceeded(f"structural method supports n <= {max_structural_order}")
    else:
        raise ValueError(f"unknown method {method!r}")
    workers = default_workers() if workers is None else workers
    budget = max_oracle_order if method == ORACLE else max_structural_order
    start = time.perf_counter()
    examined = 0
    levels = []
    total = comb(n, 2)
    for m in range(total, n - 2, -1):
        graphs = [g for g in graphs_with_size(n, m, budget) if is_connected(g)]
        examined += len(graphs)
        levels.append(m)
        verdicts = _classify(graphs, n, k, method, workers)
        hits = [g for g, ok in zip(graphs, verdicts) if ok]
        if hits:
            break
    else:  # pragma: no cover - trees always qualify
        raise AssertionError("no connected graph qualified")
    family = family_for(n, k)
    codes = [encode(g) for g in hits]
    verdict = {c: is_member(family, None, g) for c, g in zip(codes, hits)} if family else {}
    return ExtremalReport(
        n=n,
        k=k,
        f_value=m,
        extremal_graphs=codes,
        family=family,
        family_verdict=verdict,
        method=method,
        elapsed=round(time.perf_counter() - start, 3),
        examined=examined,
        levels=levels,
        conjecture=family is None,
    )
