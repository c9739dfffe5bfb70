"""Edge deletion that turns every edge leaving an induced cycle into a bridge."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from ..errors import Disconnected, NotInducedCycle, VertexOutOfRange
from ..graph import Graph, bits, is_connected
from ..metrics import bfs_distances, eccentricities


@dataclass(frozen=True)
class ReductionReport:
    cycle: list[int]
    cut_edges: list[tuple[int, int]]
    branches: list[list[int]]
    depths: list[int]
    bound: int
    deleted_edges: list[tuple[int, int]] = field(default_factory=list)

    @property
    def p(self) -> int:
        return len(self.cut_edges)


def _edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def check_induced_cycle(g: Graph, cycle: list[int]) -> None:
    k = len(cycle)
    if k < 3:
        raise NotInducedCycle(f"a cycle needs at least 3 vertices, got {k}")
    if any(not 0 <= v < g.order for v in cycle):
        raise VertexOutOfRange(f"cycle {cycle} leaves 0..{g.order - 1}")
    if len(set(cycle)) != k:
        raise NotInducedCycle("cycle repeats a vertex")
    mask = sum(1 << v for v in cycle)
    for i, v in enumerate(cycle):
        nxt, prv = cycle[(i + 1) % k], cycle[i - 1]
        if not g.has_edge(v, nxt):
            raise NotInducedCycle(f"{v} and {nxt} are consecutive on the cycle but not adjacent")
        if g.rows[v] & mask != (1 << nxt) | (1 << prv):
            raise NotInducedCycle(f"vertex {v} has a chord")


def _path_avoiding_edge(rows: list[int], src: int, dst: int, banned: tuple[int, int]) -> list[int] | None:
    # BFS with smallest-label parents; returns src..dst or None
    parent = {src: src}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in bits(rows[x]):
            if y in parent or _edge(x, y) == banned:
                continue
            parent[y] = x
            if y == dst:
                walk = [dst]
                while walk[-1] != src:
                    walk.append(parent[walk[-1]])
                return walk[::-1]
            queue.append(y)
    return None


def reduce_to_bridges(g: Graph, cycle: list[int]) -> tuple[Graph, ReductionReport]:
    """Delete edges off ``cycle`` until each edge with one end on it is a bridge.

    While some leaving edge ``uv`` lies on a cycle, take the first such edge in
    lexicographic order, find a shortest cycle through it by BFS, and delete
    the smallest edge of that cycle that is neither ``uv`` nor a cycle edge.
    Such an edge always exists because the cycle must leave ``v`` by a second
    edge, which cannot belong to the induced cycle.
    """
    check_induced_cycle(g, cycle)
    if not is_connected(g):
        raise Disconnected("reduction needs a connected graph")
    on_cycle = sum(1 << v for v in cycle)
    k = len(cycle)
    cycle_edges = {_edge(cycle[i], cycle[(i + 1) % k]) for i in range(k)}
    rows = list(g.rows)
    deleted: list[tuple[int, int]] = []

    def leaving_edges() -> list[tuple[int, int]]:
        out = []
        for u in sorted(cycle):
            for v in bits(rows[u] & ~on_cycle):
                out.append((u, v))
        return out

    progress = True
    while progress:
        progress = False
        for u, v in leaving_edges():
            back = _path_avoiding_edge(rows, v, u, _edge(u, v))
            if back is None:
                continue
            around = [_edge(a, b) for a, b in zip(back, back[1:])]
            victim = min(e for e in around if e not in cycle_edges)
            a, b = victim
            rows[a] &= ~(1 << b)
            rows[b] &= ~(1 << a)
            deleted.append(victim)
            progress = True
            break

    reduced = Graph(g.order, rows)
    cut_edges = leaving_edges()
    branches, depths = [], []
    for u, v in cut_edges:
        # component of R - uv containing v; as uv is a bridge, u is its only exit
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nxt |= rows[x]
            frontier = nxt & ~comp & ~(1 << u)
            comp |= frontier
        members = bits(comp)
        dist = bfs_distances(reduced, u)
        branches.append(members)
        depths.append(max(dist[x] for x in members))
    bound = 2 * sum(depths) - len(cut_edges)
    report = ReductionReport(list(cycle), cut_edges, branches, depths, bound, deleted)
    return reduced, report


def cycle_excess(g: Graph, cycle: list[int], r: int) -> int:
    """Number of cycle vertices whose eccentricity exceeds ``r``."""
    ecc = eccentricities(g)
    return sum(1 for v in cycle if ecc[v] > r)


def is_bridge(g: Graph, u: int, v: int) -> bool:
    """Oracle: ``uv`` is a bridge iff deleting it disconnects ``u`` from ``v``."""
    h = g.without_edges([(u, v)])
    return bfs_distances(h, u)[v] < 0
