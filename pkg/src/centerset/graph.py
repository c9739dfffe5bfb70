"""Immutable simple graphs on vertices ``0..n-1`` with bitset adjacency rows.

Row ``v`` is a Python int whose bit ``u`` is set iff ``uv`` is an edge, so
neighbourhood unions and intersections are single big-int operations.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .errors import CycleTooShort, DuplicateEdge, LoopEdge, OrderTooLarge, VertexOutOfRange

MAX_ORDER = 4096


class Graph:
    """A finite simple graph. Instances are never mutated after construction."""

    __slots__ = ("_order", "_rows", "_edge_count")

    def __init__(self, order: int, rows: Iterable[int]):
        # Trusted constructor: callers are responsible for symmetry and
        # irreflexivity. Use build_graph() for checked construction.
        self._order = order
        self._rows = tuple(rows)
        self._edge_count = sum(r.bit_count() for r in self._rows) // 2

    @property
    def order(self) -> int:
        return self._order

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def __len__(self) -> int:
        return self._order

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self._rows[v])

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        for u, row in enumerate(self._rows):
            for v in bits(row >> (u + 1)):
                yield u, u + 1 + v

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> Graph:
        rows = list(self._rows)
        for u, v in removed:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self._order, rows)

    def relabel(self, perm: list[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        rows = [0] * self._order
        for u, v in self.edges():
            a, b = perm[u], perm[v]
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return Graph(self._order, rows)

    def check_invariants(self) -> None:
        if self._order < 1 or len(self._rows) != self._order:
            raise AssertionError("bad order")
        full = (1 << self._order) - 1
        for v, row in enumerate(self._rows):
            if row >> v & 1:
                raise AssertionError(f"loop at {v}")
            if row & ~full:
                raise AssertionError(f"row {v} has bits beyond the order")
            for u in bits(row):
                if not self._rows[u] >> v & 1:
                    raise AssertionError(f"asymmetric pair ({v}, {u})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._order, self._rows))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={list(self.edges())})"


def bits(x: int) -> list[int]:
    """Indices of the set bits of ``x``, ascending."""
    out = []
    while x:
        low = x & -x
        out.append(low.bit_length() - 1)
        x ^= low
    return out


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 1:
        raise VertexOutOfRange(f"order must be positive, got {n}")
    if n > MAX_ORDER:
        raise OrderTooLarge(f"order {n} exceeds the supported maximum {MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if rows[u] >> v & 1:
            raise DuplicateEdge(f"edge ({u}, {v}) given twice")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def standard(kind: str, t: int) -> Graph:
    """``path``, ``cycle``, ``complete`` or ``empty`` graph on ``t`` vertices."""
    if t < 1:
        raise VertexOutOfRange(f"order must be positive, got {t}")
    if kind == "path":
        return build_graph(t, [(i, i + 1) for i in range(t - 1)])
    if kind == "cycle":
        if t < 3:
            raise CycleTooShort(f"a cycle needs at least 3 vertices, got {t}")
        return build_graph(t, [(i, (i + 1) % t) for i in range(t)])
    if kind == "complete":
        full = (1 << t) - 1
        return Graph(t, [full & ~(1 << v) for v in range(t)])
    if kind == "empty":
        return Graph(t, [0] * t)
    raise ValueError(f"unknown graph kind {kind!r}")


def path(t: int) -> Graph:
    return standard("path", t)


def cycle(t: int) -> Graph:
    return standard("cycle", t)


def complete(t: int) -> Graph:
    return standard("complete", t)


def empty(t: int) -> Graph:
    return standard("empty", t)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them.

    ``g`` keeps labels ``0..|g|-1``; ``h`` is shifted up by ``|g|``.
    """
    a, b = g.order, h.order
    g_mask = (1 << a) - 1
    h_mask = ((1 << b) - 1) << a
    rows = [row | h_mask for row in g.rows]
    rows += [(row << a) | g_mask for row in h.rows]
    return Graph(a + b, rows)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    a = g.order
    return Graph(a + h.order, list(g.rows) + [row << a for row in h.rows])


def identify(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """Glue ``h`` onto ``g`` by merging vertex ``v`` of ``h`` into ``u`` of ``g``.

    The merged vertex keeps label ``u``; the other vertices of ``h`` follow
    those of ``g`` in their original relative order.
    """
    if not 0 <= u < g.order:
        raise VertexOutOfRange(f"vertex {u} not in first graph of order {g.order}")
    if not 0 <= v < h.order:
        raise VertexOutOfRange(f"vertex {v} not in second graph of order {h.order}")
    label = {}
    nxt = g.order
    for w in range(h.order):
        if w == v:
            label[w] = u
        else:
            label[w] = nxt
            nxt += 1
    rows = list(g.rows) + [0] * (h.order - 1)
    for a, b in h.edges():
        x, y = label[a], label[b]
        rows[x] |= 1 << y
        rows[y] |= 1 << x
    return Graph(nxt, rows)


def reachable(g: Graph, source: int = 0) -> int:
    """Bitmask of the vertices reachable from ``source``."""
    rows = g.rows
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return reachable(g, 0) == (1 << g.order) - 1
