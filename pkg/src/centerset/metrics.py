"""Eccentricity, radius, diameter, center and periphery of connected graphs."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import Disconnected, VertexOutOfRange
from .graph import Graph, bits

#: Distance marker for vertices in a different component.
UNREACHABLE = -1


@dataclass(frozen=True)
class MetricProfile:
    eccentricities: tuple[int, ...]
    radius: int
    diameter: int
    center: tuple[int, ...]
    periphery: tuple[int, ...]
    central_ratio: Fraction

    @property
    def order(self) -> int:
        return len(self.eccentricities)

    @property
    def is_self_centered(self) -> bool:
        return self.radius == self.diameter


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.order:
        raise VertexOutOfRange(f"vertex {v} not in graph of order {g.order}")


def bfs_distances(g: Graph, v: int) -> list[int]:
    """Hop distances from ``v``; ``UNREACHABLE`` marks other components."""
    _check_vertex(g, v)
    rows = g.rows
    dist = [UNREACHABLE] * g.order
    dist[v] = 0
    seen = frontier = 1 << v
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for u in bits(frontier):
            nxt |= rows[u]
        frontier = nxt & ~seen
        seen |= frontier
        for u in bits(frontier):
            dist[u] = d
    return dist


def eccentricity(g: Graph, v: int) -> int:
    """Eccentricity of ``v``, computed level by level on bitsets."""
    _check_vertex(g, v)
    rows = g.rows
    full = (1 << g.order) - 1
    seen = frontier = 1 << v
    d = 0
    while seen != full:
        nxt = 0
        while frontier:
            low = frontier & -frontier
            nxt |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = nxt & ~seen
        if not frontier:
            raise Disconnected("graph is disconnected; eccentricity is undefined")
        seen |= frontier
        d += 1
    return d


def eccentricities(g: Graph) -> list[int]:
    return [eccentricity(g, v) for v in range(g.order)]


def metric_profile(g: Graph) -> MetricProfile:
    ecc = eccentricities(g)
    rad, diam = min(ecc), max(ecc)
    center = tuple(v for v, e in enumerate(ecc) if e == rad)
    periphery = tuple(v for v, e in enumerate(ecc) if e == diam)
    return MetricProfile(
        eccentricities=tuple(ecc),
        radius=rad,
        diameter=diam,
        center=center,
        periphery=periphery,
        central_ratio=Fraction(len(center), g.order),
    )


def radius(g: Graph) -> int:
    return min(eccentricities(g))


def diameter(g: Graph) -> int:
    return max(eccentricities(g))


def center(g: Graph) -> tuple[int, ...]:
    return metric_profile(g).center


def _bfs_parents(g: Graph, source: int) -> tuple[list[int], list[int]]:
    # parent = smallest-labelled neighbour one level closer to the source
    dist = bfs_distances(g, source)
    parent = [-1] * g.order
    for u in range(g.order):
        if dist[u] > 0:
            for w in g.neighbors(u):
                if dist[w] == dist[u] - 1:
                    parent[u] = w
                    break
    return dist, parent


def shortest_path(g: Graph, source: int, target: int) -> list[int]:
    dist, parent = _bfs_parents(g, source)
    if dist[target] == UNREACHABLE:
        raise Disconnected(f"no path from {source} to {target}")
    walk = [target]
    while walk[-1] != source:
        walk.append(parent[walk[-1]])
    return walk[::-1]


def diametral_path(g: Graph) -> list[int]:
    """A shortest path realising the diameter.

    The endpoints are the lexicographically smallest pair ``(x, y)`` with
    ``d(x, y) = diam``; interior vertices pick the smallest-labelled parent.
    """
    diam = max(eccentricities(g))
    for x in range(g.order):
        dist = bfs_distances(g, x)
        for y in range(g.order):
            if dist[y] == diam:
                return shortest_path(g, x, y)
    raise AssertionError("unreachable: some pair realises the diameter")
