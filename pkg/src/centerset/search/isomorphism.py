"""Exact isomorphism test for small graphs by pruned backtracking."""

from __future__ import annotations

from ..errors import OrderTooLarge
from ..graph import Graph, bits

MAX_ISO_ORDER = 12


def _refined_colors(g: Graph, rounds: int = 2) -> list[tuple]:
    # colour refinement seeded by degree; tuples (not hashes) stay comparable across graphs
    colors: list[tuple] = [(d,) for d in g.degrees()]
    for _ in range(rounds):
        colors = [(colors[v], tuple(sorted(colors[u] for u in g.neighbors(v)))) for v in range(g.order)]
    return colors


def _search_order(g: Graph, colors: list[tuple]) -> list[int]:
    # rarest colour first, then grow along edges so adjacency checks bite early
    freq: dict[tuple, int] = {}
    for c in colors:
        freq[c] = freq.get(c, 0) + 1
    remaining = set(range(g.order))
    order: list[int] = []
    placed = 0
    while remaining:
        frontier = [v for v in remaining if g.rows[v] & placed]
        pool = frontier or list(remaining)
        v = min(pool, key=lambda x: (freq[colors[x]], -(g.rows[x] & placed).bit_count(), x))
        order.append(v)
        remaining.discard(v)
        placed |= 1 << v
    return order


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A bijection ``phi`` with ``uv in E(g) <=> phi[u]phi[v] in E(h)``, or None."""
    if max(g.order, h.order) > MAX_ISO_ORDER:
        raise OrderTooLarge(f"isomorphism test is capped at {MAX_ISO_ORDER} vertices")
    if g.order != h.order or g.edge_count != h.edge_count:
        return None
    if sorted(g.degrees()) != sorted(h.degrees()):
        return None
    cg, ch = _refined_colors(g), _refined_colors(h)
    if sorted(cg) != sorted(ch):
        return None

    n = g.order
    order = _search_order(g, cg)
    candidates = [[y for y in range(n) if ch[y] == cg[x]] for x in order]
    phi = [-1] * n
    g_rows, h_rows = g.rows, h.rows

    def extend(depth: int, used: int) -> bool:
        if depth == n:
            return True
        x = order[depth]
        # images of already-mapped neighbours of x, and of already-mapped non-neighbours
        mapped_nbrs = 0
        for u in bits(g_rows[x]):
            if phi[u] >= 0:
                mapped_nbrs |= 1 << phi[u]
        for y in candidates[depth]:
            if used >> y & 1:
                continue
            if h_rows[y] & used != mapped_nbrs:
                continue
            phi[x] = y
            if extend(depth + 1, used | 1 << y):
                return True
            phi[x] = -1
        return False

    return list(phi) if extend(0, 0) else None


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return find_isomorphism(g, h) is not None
