"""Derive the order-5 and order-6 blocks from scratch and print the catalog with its
invariants: bridgeless candidates of each size and the ones with kappa-bar_4 = 1."""

from __future__ import annotations

import argparse

from genconn.families import catalog
from genconn.generate import enumerate_connected
from genconn.graph import bridges
from genconn.graph6 import encode
from genconn.steiner import kappa_bar_equals_one


def main(argv=None) -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.parse_args(argv)
    for order, size in ((4, 5), (5, 6), (6, 7)):
        cands = [g for g in enumerate_connected(order, size, size) if not bridges(g)]
        keep = [encode(g) for g in cands if kappa_bar_equals_one(g, 4)]
        print(f"order {order} size {size}: {len(cands)} bridgeless, {len(keep)} qualify: {' '.join(keep)}")
    for name, g in catalog().items():
        print(f"{name:<3} {encode(g):<6} edges={g.edges()}")


if __name__ == "__main__":
    main()
