#!/usr/bin/env python3
"""Write every connected graph of order n (one per isomorphism class) as graph6.

Builds all graphs of order k+1 from those of order k by adding a vertex with
every possible neighbourhood, keeping one representative per nauty
certificate. Needs ``pynauty``. Order 9 takes a few minutes.

    python tools/connected_catalog.py 9 conn9.g6
"""

from __future__ import annotations

import argparse
import sys

import pynauty

from centerset.codec import graph6_encode
from centerset.graph import Graph, is_connected


def _certificate(n: int, rows: list[int]) -> bytes:
    adj = {v: [u for u in range(n) if rows[v] >> u & 1] for v in range(n)}
    return pynauty.certificate(pynauty.Graph(n, adjacency_dict=adj))


def all_graphs(n: int) -> list[list[int]]:
    """Adjacency rows of one graph per isomorphism class of order ``n``."""
    level = [[0]]
    for k in range(1, n):
        seen: dict[bytes, list[int]] = {}
        for rows in level:
            for nbhd in range(1 << k):
                new = [row | ((nbhd >> v & 1) << k) for v, row in enumerate(rows)] + [nbhd]
                cert = _certificate(k + 1, new)
                if cert not in seen:
                    seen[cert] = new
        level = list(seen.values())
        print(f"order {k + 1}: {len(level)} graphs", file=sys.stderr)
    return level


def connected_catalog(n: int) -> list[str]:
    out = []
    for rows in all_graphs(n):
        g = Graph(n, rows)
        if is_connected(g):
            out.append(graph6_encode(g))
    return out


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("n", type=int)
    parser.add_argument("output")
    args = parser.parse_args()
    records = connected_catalog(args.n)
    with open(args.output, "w") as fh:
        fh.write("\n".join(records) + "\n")
    print(f"wrote {len(records)} connected graphs of order {args.n}", file=sys.stderr)


if __name__ == "__main__":
    main()
